//! Cyclotomic fields `Q(zeta_n)`, identified by their canonical conductor.
//!
//! No root-of-unity arithmetic happens here: every question this crate asks
//! of a cyclotomic field is answered from `n`, `p mod n` and the totient.

use std::fmt;

use serde::Serialize;

use crate::arith::{euler_phi, factorize, multiplicative_order, Prime};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct CyclotomicField {
    n: u64,
    degree: u64,
}

/// Decomposition `p O = (P_1 ... P_g)^e` with residue degree `f`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct FactorizationShape {
    pub e: u64,
    pub f: u64,
    pub g: u64,
}

impl FactorizationShape {
    /// Degree of the completion above `p`.
    pub fn local_degree(&self) -> u64 {
        self.e * self.f
    }
}

/// `Q(zeta_2m) = Q(zeta_m)` for odd `m`, so `n = 2 (mod 4)` is halved.
pub fn canonical_n(n: u64) -> Result<u64> {
    if n < 3 {
        return Err(Error::ModulusTooSmall { n, min: 3 });
    }
    Ok(if n % 4 == 2 { n / 2 } else { n })
}

impl CyclotomicField {
    pub fn new(n: u64) -> Result<Self> {
        let n = canonical_n(n)?;
        Ok(CyclotomicField {
            n,
            degree: euler_phi(n),
        })
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn degree(&self) -> u64 {
        self.degree
    }

    pub fn factorization_shape(&self, p: Prime) -> FactorizationShape {
        let (mut m, mut a) = (self.n, 0u32);
        while m % p.get() == 0 {
            m /= p.get();
            a += 1;
        }
        let e = if a == 0 { 1 } else { euler_phi(p.get().pow(a)) };
        let f = if m <= 2 {
            1
        } else {
            multiplicative_order(p.as_i64(), m).expect("p is coprime to the prime-to-p part")
        };
        FactorizationShape {
            e,
            f,
            g: self.degree / (e * f),
        }
    }

    /// `p` splits completely iff `p = 1 (mod n)`.
    pub fn splits_completely(&self, p: Prime) -> bool {
        p.rem(self.n) == 1
    }

    pub fn maximal_real_subfield_degree(&self) -> u64 {
        self.degree / 2
    }

    /// `Some(l)` when `n = l^k` for a prime `l`.
    pub fn prime_power_base(&self) -> Option<(Prime, u32)> {
        match factorize(self.n).as_slice() {
            [(l, k)] => Some((Prime::new(*l).ok()?, *k)),
            _ => None,
        }
    }
}

impl fmt::Display for CyclotomicField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "cyclotomic:{}", self.n)
    }
}

pub fn factorization_shape(p: Prime, n: u64) -> Result<FactorizationShape> {
    Ok(CyclotomicField::new(n)?.factorization_shape(p))
}

pub fn splits_completely(p: Prime, n: u64) -> Result<bool> {
    Ok(CyclotomicField::new(n)?.splits_completely(p))
}

pub fn maximal_real_subfield_degree(n: u64) -> Result<u64> {
    Ok(CyclotomicField::new(n)?.maximal_real_subfield_degree())
}

/// The `d` with `Q(sqrt d)` the unique quadratic subfield of `Q(zeta_p)`:
/// `p` when `p = 1 (mod 4)`, `-p` when `p = 3 (mod 4)`.
pub fn quadratic_subfield(p: Prime) -> Result<i64> {
    if p.is_two() {
        return Err(Error::EvenModulus);
    }
    let v = p.as_i64();
    Ok(if p.rem(4) == 1 { v } else { -v })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::primes_up_to;
    use crate::quadratic::{QuadraticField, SplittingType};

    fn p(n: u64) -> Prime {
        Prime::new(n).unwrap()
    }

    #[test]
    fn canonical_examples() {
        assert_eq!(canonical_n(6).unwrap(), 3);
        assert_eq!(canonical_n(10).unwrap(), 5);
        assert_eq!(canonical_n(12).unwrap(), 12);
        assert_eq!(canonical_n(14).unwrap(), 7);
        assert!(canonical_n(2).is_err());
        for n in 3..500 {
            let c = canonical_n(n).unwrap();
            assert_eq!(canonical_n(c).unwrap(), c);
            assert_ne!(c % 4, 2);
            assert_eq!(euler_phi(c), euler_phi(n));
        }
    }

    #[test]
    fn shape_examples() {
        let s = |q, n| factorization_shape(p(q), n).unwrap();
        assert_eq!(s(2, 7), FactorizationShape { e: 1, f: 3, g: 2 });
        assert_eq!(s(29, 7), FactorizationShape { e: 1, f: 1, g: 6 });
        assert_eq!(s(3, 9), FactorizationShape { e: 6, f: 1, g: 1 });
        assert_eq!(s(2, 12), FactorizationShape { e: 2, f: 2, g: 1 });
        assert_eq!(s(3, 12), FactorizationShape { e: 2, f: 2, g: 1 });
        assert_eq!(s(2, 8), FactorizationShape { e: 4, f: 1, g: 1 });
    }

    #[test]
    fn split_examples() {
        assert!(splits_completely(p(29), 7).unwrap());
        assert!(!splits_completely(p(2), 7).unwrap());
        assert!(!splits_completely(p(7), 7).unwrap());
    }

    #[test]
    fn subfield_examples() {
        assert_eq!(quadratic_subfield(p(7)).unwrap(), -7);
        assert_eq!(quadratic_subfield(p(5)).unwrap(), 5);
        assert_eq!(quadratic_subfield(p(11)).unwrap(), -11);
        assert_eq!(quadratic_subfield(p(2)), Err(Error::EvenModulus));
        assert_eq!(maximal_real_subfield_degree(11).unwrap(), 5);
        assert_eq!(maximal_real_subfield_degree(7).unwrap(), 3);
        assert_eq!(maximal_real_subfield_degree(8).unwrap(), 2);
    }

    #[test]
    fn shape_multiplies_to_degree() {
        let primes = primes_up_to(1000);
        for n in 3..=100 {
            let k = CyclotomicField::new(n).unwrap();
            if k.n() != n {
                continue;
            }
            for &q in &primes {
                let s = k.factorization_shape(q);
                assert_eq!(s.e * s.f * s.g, k.degree(), "p={q} n={n}");
                if n % q.get() != 0 {
                    assert_eq!(s.e, 1);
                }
                let total = s == FactorizationShape { e: 1, f: 1, g: k.degree() };
                assert_eq!(k.splits_completely(q), total);
                assert_eq!(total, q.get() % n == 1);
            }
        }
    }

    #[test]
    fn quadratic_subfield_tower() {
        for l in [3, 5, 7, 11, 19, 23] {
            let k = CyclotomicField::new(l).unwrap();
            let sub = QuadraticField::new(quadratic_subfield(p(l)).unwrap()).unwrap();
            for q in primes_up_to(1000).into_iter().skip(1) {
                if k.splits_completely(q) {
                    assert_eq!(sub.splitting_type(q), SplittingType::Split, "l={l} p={q}");
                }
            }
        }
    }

    #[test]
    fn prime_power_detection() {
        let base = |n| CyclotomicField::new(n).unwrap().prime_power_base();
        assert_eq!(base(27), Some((p(3), 3)));
        assert_eq!(base(49), Some((p(7), 2)));
        assert_eq!(base(12), None);
        assert_eq!(base(8), Some((p(2), 3)));
    }
}
