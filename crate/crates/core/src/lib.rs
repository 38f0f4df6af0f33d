//! Exact split/division decisions for the quaternion algebra `H(p1, p2)`
//! over quadratic, biquadratic, cyclotomic and Kummer fields.
//!
//! [`classify`] evaluates closed-form congruence and Legendre-symbol
//! criteria. [`oracle`] decides the same question from the ramification of
//! `H(p1, p2)` over `Q` and the local degrees of the base field, and
//! [`report`] compares the two over ranges of prime pairs.

pub mod arith;
pub mod classify;
pub mod cyclotomic;
pub mod error;
pub mod field;
pub mod hilbert;
pub mod oracle;
pub mod quadratic;
pub mod report;

pub use arith::{Prime, Symbol};
pub use classify::{classify, Certainty, Outcome, TraceStep, Verdict};
pub use error::{Error, Result};
pub use field::FieldDescriptor;
pub use hilbert::{Place, RamificationData};
pub use oracle::division_oracle;
