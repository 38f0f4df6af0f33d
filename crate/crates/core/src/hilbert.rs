//! Local Hilbert symbols over the completions of `Q` and the ramification of
//! the rational quaternion algebra `H(a, b)`.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Serialize, Serializer};

use crate::arith::{factorize, legendre, Prime, Symbol};
use crate::error::{Error, Result};

/// A place of `Q`. Finite places sort before the infinite one.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Place {
    Finite(Prime),
    Infinite,
}

impl fmt::Display for Place {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Place::Finite(p) => p.fmt(f),
            Place::Infinite => f.write_str("inf"),
        }
    }
}

impl Serialize for Place {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RamificationData {
    pub ramified: BTreeSet<Place>,
    /// Product of the finite ramified primes.
    pub reduced_discriminant: u64,
}

impl RamificationData {
    pub fn is_split(&self) -> bool {
        self.ramified.is_empty()
    }

    pub fn finite_primes(&self) -> impl Iterator<Item = Prime> + '_ {
        self.ramified.iter().filter_map(|v| match v {
            Place::Finite(p) => Some(*p),
            Place::Infinite => None,
        })
    }
}

/// Splits `x = p^k * u` with `p` not dividing `u`.
fn valuation(mut x: i64, p: u64) -> (u64, i64) {
    let p = p as i64;
    let mut k = 0;
    while x % p == 0 {
        x /= p;
        k += 1;
    }
    (k, x)
}

// (u - 1)/2 mod 2 for odd u
fn eps(u: i64) -> u64 {
    u64::from(u.rem_euclid(4) == 3)
}

// (u^2 - 1)/8 mod 2 for odd u
fn omega(u: i64) -> u64 {
    u64::from(matches!(u.rem_euclid(8), 3 | 5))
}

/// `(a, b)_v`: `+1` iff `H(a, b)` splits over the completion of `Q` at `v`.
pub fn hilbert_symbol(a: i64, b: i64, v: Place) -> Result<Symbol> {
    if a == 0 || b == 0 {
        return Err(Error::ZeroArgument);
    }
    let p = match v {
        Place::Infinite => {
            return Ok(if a < 0 && b < 0 {
                Symbol::MinusOne
            } else {
                Symbol::One
            })
        }
        Place::Finite(p) => p,
    };
    let (alpha, u) = valuation(a, p.get());
    let (beta, w) = valuation(b, p.get());
    if p.is_two() {
        return Ok(Symbol::sign(eps(u) * eps(w) + alpha * omega(w) + beta * omega(u)));
    }
    let mut s = Symbol::sign(alpha * beta * ((p.get() - 1) / 2));
    if beta % 2 == 1 {
        s = s * legendre(u, p)?;
    }
    if alpha % 2 == 1 {
        s = s * legendre(w, p)?;
    }
    Ok(s)
}

/// All places where `H(a, b)` ramifies.
///
/// Only `2`, the primes dividing `ab`, and the infinite place can ramify, so
/// those are the only candidates evaluated.
pub fn ramified_places(a: i64, b: i64) -> Result<RamificationData> {
    if a == 0 || b == 0 {
        return Err(Error::ZeroArgument);
    }
    let mut candidates: BTreeSet<u64> = BTreeSet::from([2]);
    for x in [a, b] {
        candidates.extend(factorize(x.unsigned_abs()).into_iter().map(|(p, _)| p));
    }
    let mut ramified = BTreeSet::new();
    let mut reduced_discriminant = 1u64;
    for p in candidates {
        let place = Place::Finite(Prime::new(p)?);
        if hilbert_symbol(a, b, place)?.is_minus_one() {
            ramified.insert(place);
            reduced_discriminant = reduced_discriminant.checked_mul(p).ok_or(Error::Overflow)?;
        }
    }
    if hilbert_symbol(a, b, Place::Infinite)?.is_minus_one() {
        ramified.insert(Place::Infinite);
    }
    Ok(RamificationData {
        ramified,
        reduced_discriminant,
    })
}

/// Closed-form discriminant of `H(p, q)` for three congruence patterns, in the
/// given argument order:
///
/// 1. `p = q = 3 (mod 4)` and `(q/p) != 1`: `D = 2p`
/// 2. `q = 2` and `p = 3 (mod 8)`: `D = 2p`
/// 3. `p` or `q = 1 (mod 4)`, `q` odd and `(p/q) = -1`: `D = pq`
///
/// `None` when no pattern applies (or `p == q`).
pub fn discriminant_fast_path(p: Prime, q: Prime) -> Option<u64> {
    if p == q {
        return None;
    }
    let both_odd = !p.is_two() && !q.is_two();
    if both_odd && p.rem(4) == 3 && q.rem(4) == 3 && !legendre(q.as_i64(), p).ok()?.is_one() {
        return p.get().checked_mul(2);
    }
    if q.is_two() && p.rem(8) == 3 {
        return p.get().checked_mul(2);
    }
    if !q.is_two()
        && (p.rem(4) == 1 || q.rem(4) == 1)
        && legendre(p.as_i64(), q).ok()?.is_minus_one()
    {
        return p.get().checked_mul(q.get());
    }
    None
}

/// [`discriminant_fast_path`] tried as `(p, q)` and then `(q, p)`.
pub fn discriminant_fast_path_symmetric(p: Prime, q: Prime) -> Option<u64> {
    discriminant_fast_path(p, q).or_else(|| discriminant_fast_path(q, p))
}
