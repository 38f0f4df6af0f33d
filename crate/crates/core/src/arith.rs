//! Exact modular arithmetic on 64-bit integers.
//!
//! Products are taken in 128 bits so that modular exponentiation never
//! overflows; everything else is plain checked `u64`/`i64` arithmetic.

use std::fmt;
use std::ops::Mul;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// A positive rational prime, certified at construction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Prime(u64);

impl Prime {
    pub fn new(n: u64) -> Result<Self> {
        if is_prime(n) {
            Ok(Prime(n))
        } else {
            Err(Error::NotPrime(n))
        }
    }

    /// Accepts a signed value, rejecting zero and negatives before the primality check.
    pub fn from_signed(n: i64) -> Result<Self> {
        if n <= 0 {
            return Err(Error::NonPositivePrime(n));
        }
        Self::new(n as u64)
    }

    pub const fn get(self) -> u64 {
        self.0
    }

    pub const fn is_two(self) -> bool {
        self.0 == 2
    }

    /// `self mod m` for small moduli used in congruence conditions.
    pub const fn rem(self, m: u64) -> u64 {
        self.0 % m
    }

    pub(crate) fn as_i64(self) -> i64 {
        // every prime below 2^63 fits; larger ones never reach signed code paths
        i64::try_from(self.0).expect("prime exceeds i64 range")
    }
}

impl fmt::Display for Prime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl Serialize for Prime {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_u64(self.0)
    }
}

/// Value of a Legendre or Hilbert symbol.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Symbol {
    MinusOne,
    Zero,
    One,
}

impl Symbol {
    pub const fn value(self) -> i8 {
        match self {
            Symbol::MinusOne => -1,
            Symbol::Zero => 0,
            Symbol::One => 1,
        }
    }

    pub const fn is_one(self) -> bool {
        matches!(self, Symbol::One)
    }

    pub const fn is_minus_one(self) -> bool {
        matches!(self, Symbol::MinusOne)
    }

    /// `(-1)^e` as a symbol.
    pub const fn sign(e: u64) -> Self {
        if e.is_multiple_of(2) {
            Symbol::One
        } else {
            Symbol::MinusOne
        }
    }
}

impl Mul for Symbol {
    type Output = Symbol;

    fn mul(self, rhs: Symbol) -> Symbol {
        match self.value() * rhs.value() {
            1 => Symbol::One,
            -1 => Symbol::MinusOne,
            _ => Symbol::Zero,
        }
    }
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:+}", self.value())
    }
}

pub fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

pub fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    if m == 1 {
        return 0;
    }
    let mut acc = 1u64;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

// First twelve primes as witnesses: deterministic for every n < 3.3 * 10^24.
const WITNESSES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];

/// Deterministic Miller-Rabin over the whole `u64` range.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for &p in &WITNESSES {
        if n.is_multiple_of(p) {
            return n == p;
        }
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'witness: for &a in &WITNESSES {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Prime factorization by trial division, ascending primes with multiplicity.
///
/// Inputs in this crate are small; a 64-bit semiprime with two large factors
/// would take a long time here.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    if n < 2 {
        return out;
    }
    let mut push = |p: u64, n: &mut u64| {
        let mut e = 0;
        while (*n).is_multiple_of(p) {
            *n /= p;
            e += 1;
        }
        if e > 0 {
            out.push((p, e));
        }
    };
    push(2, &mut n);
    push(3, &mut n);
    let mut p = 5u64;
    while p.saturating_mul(p) <= n {
        if is_prime(n) {
            break;
        }
        push(p, &mut n);
        push(p + 2, &mut n);
        p += 6;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// Legendre symbol `(a/p)` for an odd prime `p`, by Euler's criterion.
///
/// Negative `a` is reduced modulo `p` first.
pub fn legendre(a: i64, p: Prime) -> Result<Symbol> {
    if p.is_two() {
        return Err(Error::EvenModulus);
    }
    let m = p.get();
    let r = (a as i128).rem_euclid(m as i128) as u64;
    if r == 0 {
        return Ok(Symbol::Zero);
    }
    Ok(if pow_mod(r, (m - 1) / 2, m) == 1 {
        Symbol::One
    } else {
        Symbol::MinusOne
    })
}

/// Euler's totient.
pub fn euler_phi(n: u64) -> u64 {
    factorize(n)
        .into_iter()
        .fold(n.max(1), |acc, (p, _)| acc / p * (p - 1))
}

/// Smallest `f >= 1` with `a^f = 1 (mod n)`.
pub fn multiplicative_order(a: i64, n: u64) -> Result<u64> {
    if n < 2 {
        return Err(Error::ModulusTooSmall { n, min: 2 });
    }
    let r = (a as i128).rem_euclid(n as i128) as u64;
    if gcd(r, n) != 1 {
        return Err(Error::NotCoprime { a, n });
    }
    let mut order = euler_phi(n);
    for (q, _) in factorize(order) {
        while order.is_multiple_of(q) && pow_mod(r, order / q, n) == 1 {
            order /= q;
        }
    }
    Ok(order)
}

/// Ascending primes `<= limit` (simple sieve).
pub fn primes_up_to(limit: u64) -> Vec<Prime> {
    if limit < 2 {
        return Vec::new();
    }
    let limit = limit as usize;
    let mut composite = vec![false; limit + 1];
    let mut out = Vec::new();
    for i in 2..=limit {
        if composite[i] {
            continue;
        }
        out.push(Prime(i as u64));
        let mut j = i * i;
        while j <= limit {
            composite[j] = true;
            j += i;
        }
    }
    out
}
