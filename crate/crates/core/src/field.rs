//! Base fields accepted by the classifiers and the oracle.
//!
//! Textual form (used by the CLI and the report `field` column):
//! `rational`, `quadratic:<d>`, `biquadratic:<d1>,<d2>`, `cyclotomic:<n>`,
//! `kummer:<l>^<k>` (or `kummer:<l>` for `k = 1`).

use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::arith::Prime;
use crate::cyclotomic::CyclotomicField;
use crate::error::{Error, Result};
use crate::quadratic::{squarefree_part, QuadraticField};

/// `Q(sqrt d1, sqrt d2)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct BiquadraticField {
    first: QuadraticField,
    second: QuadraticField,
    third: QuadraticField,
}

impl BiquadraticField {
    pub fn new(d1: i64, d2: i64) -> Result<Self> {
        if d1 == d2 {
            return Err(Error::RepeatedRadicand(d1));
        }
        let first = QuadraticField::new(d1)?;
        let second = QuadraticField::new(d2)?;
        let product = d1.checked_mul(d2).ok_or(Error::Overflow)?;
        let third = QuadraticField::new(squarefree_part(product))?;
        Ok(BiquadraticField {
            first,
            second,
            third,
        })
    }

    pub fn first(&self) -> &QuadraticField {
        &self.first
    }

    pub fn second(&self) -> &QuadraticField {
        &self.second
    }

    /// `Q(sqrt(d1 d2))`, the remaining quadratic subfield.
    pub fn third(&self) -> &QuadraticField {
        &self.third
    }

    pub fn subfields(&self) -> [&QuadraticField; 3] {
        [&self.first, &self.second, &self.third]
    }

    pub fn is_real(&self) -> bool {
        self.first.is_real() && self.second.is_real()
    }
}

/// `Q(zeta_{l^k}, alpha^{1/l^k})` with `l = 3 (mod 4)`. The radicand does not
/// influence any verdict and is not stored.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct KummerField {
    l: Prime,
    k: u32,
}

impl KummerField {
    pub fn new(l: Prime, k: u32) -> Result<Self> {
        if l.rem(4) != 3 {
            return Err(Error::BadModulus(l.get()));
        }
        if k == 0 {
            return Err(Error::ZeroExponent);
        }
        l.get().checked_pow(k).ok_or(Error::Overflow)?;
        Ok(KummerField { l, k })
    }

    pub fn l(&self) -> Prime {
        self.l
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn conductor(&self) -> u64 {
        self.l.get().pow(self.k)
    }

    pub fn cyclotomic_base(&self) -> CyclotomicField {
        CyclotomicField::new(self.conductor()).expect("l^k >= 3")
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FieldDescriptor {
    Rational,
    Quadratic(QuadraticField),
    Biquadratic(BiquadraticField),
    Cyclotomic(CyclotomicField),
    Kummer(KummerField),
}

impl FieldDescriptor {
    pub fn quadratic(d: i64) -> Result<Self> {
        QuadraticField::new(d).map(Self::Quadratic)
    }

    pub fn biquadratic(d1: i64, d2: i64) -> Result<Self> {
        BiquadraticField::new(d1, d2).map(Self::Biquadratic)
    }

    pub fn cyclotomic(n: u64) -> Result<Self> {
        CyclotomicField::new(n).map(Self::Cyclotomic)
    }

    pub fn kummer(l: u64, k: u32) -> Result<Self> {
        KummerField::new(Prime::new(l)?, k).map(Self::Kummer)
    }
}

impl fmt::Display for FieldDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldDescriptor::Rational => f.write_str("rational"),
            FieldDescriptor::Quadratic(k) => k.fmt(f),
            FieldDescriptor::Biquadratic(k) => {
                write!(f, "biquadratic:{},{}", k.first.d(), k.second.d())
            }
            FieldDescriptor::Cyclotomic(k) => k.fmt(f),
            FieldDescriptor::Kummer(k) => write!(f, "kummer:{}^{}", k.l, k.k),
        }
    }
}

impl Serialize for FieldDescriptor {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl FromStr for FieldDescriptor {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidFieldSpec(s.to_owned());
        let s = s.trim();
        if s == "rational" {
            return Ok(FieldDescriptor::Rational);
        }
        let (kind, args) = s.split_once(':').ok_or_else(bad)?;
        let int = |t: &str| t.trim().parse::<i64>().map_err(|_| bad());
        let nat = |t: &str| t.trim().parse::<u64>().map_err(|_| bad());
        match kind.trim() {
            "quadratic" => Self::quadratic(int(args)?),
            "biquadratic" => {
                let (a, b) = args.split_once(',').ok_or_else(bad)?;
                Self::biquadratic(int(a)?, int(b)?)
            }
            "cyclotomic" => Self::cyclotomic(nat(args)?),
            "kummer" => {
                let (l, k) = match args.split_once('^') {
                    Some((l, k)) => (nat(l)?, nat(k)?),
                    None => (nat(args)?, 1),
                };
                let k = u32::try_from(k).map_err(|_| bad())?;
                Self::kummer(l, k)
            }
            _ => Err(bad()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(s: &str) -> Result<FieldDescriptor> {
        s.parse()
    }

    #[test]
    fn parses_every_kind() {
        assert_eq!(parse("rational").unwrap(), FieldDescriptor::Rational);
        assert_eq!(parse("quadratic:-7").unwrap().to_string(), "quadratic:-7");
        assert_eq!(parse("biquadratic:-1,2").unwrap().to_string(), "biquadratic:-1,2");
        assert_eq!(parse("cyclotomic:7").unwrap().to_string(), "cyclotomic:7");
        assert_eq!(parse("cyclotomic:14").unwrap().to_string(), "cyclotomic:7");
        assert_eq!(parse("kummer:7^2").unwrap().to_string(), "kummer:7^2");
        assert_eq!(parse("kummer:3").unwrap().to_string(), "kummer:3^1");
    }

    #[test]
    fn rejects_bad_specs() {
        assert!(matches!(parse("quadratic"), Err(Error::InvalidFieldSpec(_))));
        assert!(matches!(parse("quadratic:x"), Err(Error::InvalidFieldSpec(_))));
        assert!(matches!(parse("cubic:3"), Err(Error::InvalidFieldSpec(_))));
        assert!(matches!(parse("cyclotomic:-3"), Err(Error::InvalidFieldSpec(_))));
        assert_eq!(parse("quadratic:12"), Err(Error::NonSquarefree(12)));
        assert_eq!(parse("biquadratic:2,2"), Err(Error::RepeatedRadicand(2)));
        assert_eq!(parse("kummer:5^1"), Err(Error::BadModulus(5)));
        assert_eq!(parse("kummer:9^1"), Err(Error::NotPrime(9)));
        assert_eq!(parse("kummer:3^0"), Err(Error::ZeroExponent));
        assert!(parse("cyclotomic:2").is_err());
    }

    #[test]
    fn biquadratic_third_subfield() {
        let k = BiquadraticField::new(-1, 2).unwrap();
        assert_eq!(k.third().d(), -2);
        let k = BiquadraticField::new(-1, -3).unwrap();
        assert_eq!(k.third().d(), 3);
        let k = BiquadraticField::new(6, 10).unwrap();
        assert_eq!(k.third().d(), 15);
    }
}
