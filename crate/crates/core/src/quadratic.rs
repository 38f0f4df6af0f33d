//! Quadratic fields `Q(sqrt d)` and how rational primes decompose in them.

use std::fmt;

use serde::Serialize;

use crate::arith::{factorize, legendre, Prime, Symbol};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct QuadraticField {
    d: i64,
    discriminant: i64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum SplittingType {
    Ramified,
    Split,
    Inert,
}

pub fn is_squarefree(n: i64) -> bool {
    n != 0 && factorize(n.unsigned_abs()).iter().all(|&(_, e)| e == 1)
}

/// Squarefree kernel of a nonzero integer, keeping the sign: `-12 -> -3`.
pub fn squarefree_part(n: i64) -> i64 {
    let kernel = factorize(n.unsigned_abs())
        .into_iter()
        .filter(|&(_, e)| e % 2 == 1)
        .fold(1i64, |acc, (p, _)| acc * p as i64);
    kernel * n.signum()
}

impl QuadraticField {
    pub fn new(d: i64) -> Result<Self> {
        if d == 0 || d == 1 {
            return Err(Error::DisallowedValue(d));
        }
        if !is_squarefree(d) {
            return Err(Error::NonSquarefree(d));
        }
        let discriminant = if d.rem_euclid(4) == 1 {
            d
        } else {
            d.checked_mul(4).ok_or(Error::Overflow)?
        };
        Ok(QuadraticField { d, discriminant })
    }

    pub fn d(&self) -> i64 {
        self.d
    }

    pub fn discriminant(&self) -> i64 {
        self.discriminant
    }

    pub fn is_real(&self) -> bool {
        self.d > 0
    }

    /// Decomposition type of the rational prime `p` in the ring of integers.
    pub fn splitting_type(&self, p: Prime) -> SplittingType {
        if p.is_two() {
            return match self.d.rem_euclid(8) {
                1 => SplittingType::Split,
                5 => SplittingType::Inert,
                _ => SplittingType::Ramified,
            };
        }
        match legendre(self.discriminant, p).expect("odd prime") {
            Symbol::Zero => SplittingType::Ramified,
            Symbol::One => SplittingType::Split,
            Symbol::MinusOne => SplittingType::Inert,
        }
    }
}

impl fmt::Display for QuadraticField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "quadratic:{}", self.d)
    }
}

pub fn splitting_type(p: Prime, field: &QuadraticField) -> SplittingType {
    field.splitting_type(p)
}
