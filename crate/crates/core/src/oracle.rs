//! Local-global division test, independent of the closed-form criteria.
//!
//! For a Galois number field `K`, the algebra `H(p, q) (x) K` is a division
//! algebra iff some place `v` where `H(p, q)` ramifies over `Q` has odd local
//! degree `[K_w : Q_v]`: the local invariant `1/2` gets multiplied by that
//! degree. All places above `v` share the degree because `K/Q` is Galois.

use serde::Serialize;

use crate::arith::Prime;
use crate::classify::Outcome;
use crate::error::{Error, Result};
use crate::field::FieldDescriptor;
use crate::hilbert::{ramified_places, Place};
use crate::quadratic::{QuadraticField, SplittingType};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct LocalDegreeProfile {
    pub place: Place,
    pub local_degree: u64,
}

fn quadratic_splits(k: &QuadraticField, v: Place) -> bool {
    match v {
        Place::Finite(p) => k.splitting_type(p) == SplittingType::Split,
        Place::Infinite => k.is_real(),
    }
}

/// Degree of the completion of `K` at a place above `v`.
pub fn local_degree(field: &FieldDescriptor, v: Place) -> Result<u64> {
    Ok(match field {
        FieldDescriptor::Rational => 1,
        FieldDescriptor::Quadratic(k) => {
            if quadratic_splits(k, v) {
                1
            } else {
                2
            }
        }
        FieldDescriptor::Biquadratic(k) => {
            // the decomposition group is trivial, of order 2 (fixing exactly
            // one quadratic subfield in which v splits), or all of V4
            let split = k.subfields().iter().filter(|s| quadratic_splits(s, v)).count();
            match split {
                3 => 1,
                1 => 2,
                0 => 4,
                _ => unreachable!("a place cannot split in exactly two quadratic subfields"),
            }
        }
        FieldDescriptor::Cyclotomic(k) => match v {
            Place::Finite(p) => k.factorization_shape(p).local_degree(),
            Place::Infinite => 2,
        },
        FieldDescriptor::Kummer(_) => {
            return Err(Error::UnsupportedField(format!(
                "{field} is not Galois over Q"
            )))
        }
    })
}

/// Local degrees at every ramified place of `H(p, q)`.
pub fn ramified_profile(field: &FieldDescriptor, p: Prime, q: Prime) -> Result<Vec<LocalDegreeProfile>> {
    if p == q {
        return Err(Error::EqualPrimes(p.get()));
    }
    let data = ramified_places(p.as_i64(), q.as_i64())?;
    assert!(
        !data.ramified.contains(&Place::Infinite),
        "H(p, q) with positive p, q is unramified at infinity"
    );
    data.ramified
        .into_iter()
        .map(|place| {
            Ok(LocalDegreeProfile {
                place,
                local_degree: local_degree(field, place)?,
            })
        })
        .collect()
}

/// Division iff some ramified place of `H_Q(p, q)` has odd local degree in `K`.
pub fn division_oracle(field: &FieldDescriptor, p: Prime, q: Prime) -> Result<Outcome> {
    let profile = ramified_profile(field, p, q)?;
    Ok(if profile.iter().any(|d| d.local_degree % 2 == 1) {
        Outcome::Division
    } else {
        Outcome::Split
    })
}
