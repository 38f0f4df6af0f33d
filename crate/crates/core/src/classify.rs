//! Closed-form division criteria for `H(p1, p2)` over specific base fields.
//!
//! Every verdict carries a trace: one step per case of the criterion that was
//! evaluated, each with a stable identifier and whether it fired. The
//! identifiers are part of the public contract (reports and tests match on
//! them), so renaming one is a breaking change.
//!
//! All criteria are stated with the prime `2`, when present, in the second
//! slot. Since `H(a, b) = H(b, a)`, a pair `(2, q)` is swapped first and the
//! swap is recorded as `orient.swap`.

use std::fmt;

use serde::Serialize;

use crate::arith::{legendre, Prime, Symbol};
use crate::cyclotomic::CyclotomicField;
use crate::error::{Error, Result};
use crate::field::{BiquadraticField, FieldDescriptor, KummerField};
use crate::hilbert::ramified_places;
use crate::quadratic::QuadraticField;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Outcome {
    Division,
    Split,
    Unknown,
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Outcome::Division => "Division",
            Outcome::Split => "Split",
            Outcome::Unknown => "Unknown",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Certainty {
    /// The criterion is an equivalence; the outcome is Division or Split.
    Exact,
    /// Only a sufficient condition for Division is known.
    SufficientOnly,
}

impl fmt::Display for Certainty {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Certainty::Exact => "Exact",
            Certainty::SufficientOnly => "SufficientOnly",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct TraceStep {
    pub id: String,
    pub fired: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct Verdict {
    pub outcome: Outcome,
    pub certainty: Certainty,
    pub trace: Vec<TraceStep>,
}

impl Verdict {
    pub fn has_fired(&self, id: &str) -> bool {
        self.trace.iter().any(|s| s.fired && s.id == id)
    }

    pub fn fired(&self) -> impl Iterator<Item = &str> {
        self.trace.iter().filter(|s| s.fired).map(|s| s.id.as_str())
    }

    /// `id=1;id=0;...` in evaluation order.
    pub fn trace_string(&self) -> String {
        self.trace
            .iter()
            .map(|s| format!("{}={}", s.id, u8::from(s.fired)))
            .collect::<Vec<_>>()
            .join(";")
    }
}

#[derive(Default)]
struct Trace(Vec<TraceStep>);

impl Trace {
    fn check(&mut self, id: impl Into<String>, fired: bool) -> bool {
        self.0.push(TraceStep {
            id: id.into(),
            fired,
        });
        fired
    }

    fn exact(self, division: bool) -> Verdict {
        Verdict {
            outcome: if division {
                Outcome::Division
            } else {
                Outcome::Split
            },
            certainty: Certainty::Exact,
            trace: self.0,
        }
    }
}

fn leg(a: i64, p: Prime) -> Symbol {
    legendre(a, p).expect("criteria only take symbols modulo odd primes")
}

fn sym(a: Prime, p: Prime) -> Symbol {
    leg(a.as_i64(), p)
}

fn distinct(p1: Prime, p2: Prime) -> Result<()> {
    if p1 == p2 {
        Err(Error::EqualPrimes(p1.get()))
    } else {
        Ok(())
    }
}

/// Distinct primes with `2`, if present, in the second slot.
fn orient(p1: Prime, p2: Prime, trace: &mut Trace) -> Result<(Prime, Prime)> {
    distinct(p1, p2)?;
    if p1.is_two() {
        trace.check("orient.swap", true);
        Ok((p2, p1))
    } else {
        Ok((p1, p2))
    }
}

/// The three-case criterion shared by every base field `K` whose verdict is
/// governed by one quadratic (or biquadratic) field:
///
/// * `splits(x)`: the odd prime `x` splits completely in `K`;
/// * `two_splits`: `2` splits completely in `K`.
///
/// Cases, with `p2 = 2` if either prime is 2:
/// * `odd-pair`: both odd, one `= 1 (mod 4)`, `(p1/p2) = -1`, and `p1` or `p2` splits;
/// * `dyadic.3mod8` / `dyadic.5mod8`: `p2 = 2`, `p1 = 3` resp. `5 (mod 8)`, and
///   `p1` splits or `2` splits;
/// * `both-3mod4.first` / `.second`: `p1 = p2 = 3 (mod 4)`, the symbol of the
///   other prime modulo `p1` (resp. `p2`) is not `1`, and that prime or `2` splits.
fn quadratic_type_cases(
    prefix: &str,
    p1: Prime,
    p2: Prime,
    splits: impl Fn(Prime) -> bool,
    two_splits: bool,
    trace: &mut Trace,
) -> bool {
    let both_odd = !p2.is_two();
    let both_3mod4 = both_odd && p1.rem(4) == 3 && p2.rem(4) == 3;
    let odd_pair = both_odd
        && (p1.rem(4) == 1 || p2.rem(4) == 1)
        && sym(p1, p2).is_minus_one()
        && (splits(p1) || splits(p2));
    let dyadic = |r| p2.is_two() && p1.rem(8) == r && (splits(p1) || two_splits);
    let dyadic3 = dyadic(3);
    let dyadic5 = dyadic(5);
    let first = both_3mod4 && !sym(p2, p1).is_one() && (splits(p1) || two_splits);
    let second = both_3mod4 && !sym(p1, p2).is_one() && (splits(p2) || two_splits);

    let fired = [
        trace.check(format!("{prefix}.odd-pair"), odd_pair),
        trace.check(format!("{prefix}.dyadic.3mod8"), dyadic3),
        trace.check(format!("{prefix}.dyadic.5mod8"), dyadic5),
        trace.check(format!("{prefix}.both-3mod4.first"), first),
        trace.check(format!("{prefix}.both-3mod4.second"), second),
    ];
    fired.contains(&true)
}

fn quadratic_cases(prefix: &str, k: &QuadraticField, p1: Prime, p2: Prime, trace: &mut Trace) -> bool {
    let delta = k.discriminant();
    quadratic_type_cases(
        prefix,
        p1,
        p2,
        |x| leg(delta, x).is_one(),
        k.d().rem_euclid(8) == 1,
        trace,
    )
}

/// `H(p, q)` over `Q(sqrt d)`.
pub fn classify_quadratic(k: &QuadraticField, p: Prime, q: Prime) -> Result<Verdict> {
    let mut trace = Trace::default();
    let (p1, p2) = orient(p, q, &mut trace)?;
    let division = quadratic_cases("quadratic", k, p1, p2, &mut trace);
    Ok(trace.exact(division))
}

/// `H(p, q)` over `Q(sqrt d1, sqrt d2)`: a prime "splits" when both
/// `(Delta_1/x)` and `(Delta_2/x)` are `1`, and `2` splits when `d1, d2 = 1 (mod 8)`.
pub fn classify_biquadratic(k: &BiquadraticField, p: Prime, q: Prime) -> Result<Verdict> {
    let mut trace = Trace::default();
    let (p1, p2) = orient(p, q, &mut trace)?;
    let (k1, k2) = (k.first(), k.second());
    let division = quadratic_type_cases(
        "biquadratic",
        p1,
        p2,
        |x| leg(k1.discriminant(), x).is_one() && leg(k2.discriminant(), x).is_one(),
        k1.d().rem_euclid(8) == 1 && k2.d().rem_euclid(8) == 1,
        &mut trace,
    );
    Ok(trace.exact(division))
}

// Q(zeta_7): the degree-3 step over Q(sqrt -7) and -7 = 1 (mod 8) collapse the
// dyadic and 3-mod-4 cases to pure congruences.
fn seventh(p1: Prime, p2: Prime, trace: &mut Trace) -> bool {
    let both_odd = !p2.is_two();
    let odd_pair = both_odd
        && (p1.rem(4) == 1 || p2.rem(4) == 1)
        && sym(p1, p2).is_minus_one()
        && (leg(-7, p1).is_one() || leg(-7, p2).is_one());
    let fired = [
        trace.check("cyclotomic7.odd-pair", odd_pair),
        trace.check("cyclotomic7.dyadic.3mod8", p2.is_two() && p1.rem(8) == 3),
        trace.check("cyclotomic7.dyadic.5mod8", p2.is_two() && p1.rem(8) == 5),
        trace.check(
            "cyclotomic7.both-3mod4",
            both_odd && p1.rem(4) == 3 && p2.rem(4) == 3,
        ),
    ];
    fired.contains(&true)
}

// Q(zeta_8) = Q(i, sqrt 2): 2 is ramified, and an odd prime splits iff it is 1 mod 8.
fn eighth(p1: Prime, p2: Prime, trace: &mut Trace) -> bool {
    let odd_pair = !p2.is_two()
        && sym(p1, p2).is_minus_one()
        && (p1.rem(8) == 1 || p2.rem(8) == 1);
    trace.check("cyclotomic8.odd-pair", odd_pair)
}

// Q(zeta_9) over Q(sqrt -3) has degree 3; (-3/x) = 1 iff x = 1 (mod 3).
fn ninth(p1: Prime, p2: Prime, trace: &mut Trace) -> bool {
    let both_odd = !p2.is_two();
    let both_3mod4 = both_odd && p1.rem(4) == 3 && p2.rem(4) == 3;
    let odd_pair = both_odd
        && (p1.rem(4) == 1 || p2.rem(4) == 1)
        && sym(p1, p2).is_minus_one()
        && (p1.rem(3) == 1 || p2.rem(3) == 1);
    let fired = [
        trace.check("cyclotomic9.odd-pair", odd_pair),
        trace.check("cyclotomic9.dyadic.19mod24", p2.is_two() && p1.rem(24) == 19),
        trace.check("cyclotomic9.dyadic.13mod24", p2.is_two() && p1.rem(24) == 13),
        trace.check(
            "cyclotomic9.both-3mod4.first",
            both_3mod4 && !sym(p2, p1).is_one() && p1.rem(3) == 1,
        ),
        trace.check(
            "cyclotomic9.both-3mod4.second",
            both_3mod4 && !sym(p1, p2).is_one() && p2.rem(3) == 1,
        ),
    ];
    fired.contains(&true)
}

/// The congruence `p1 or p2 = 1 (mod 12)` sometimes quoted as the odd-pair
/// case over `Q(zeta_9)`. It is strictly narrower than the real condition:
/// `(5, 7)` fails it, yet `H(5, 7)` is a division algebra over `Q(zeta_9)`
/// because `7 = 1 (mod 3)` splits in `Q(sqrt -3)`. Kept for comparison only.
pub fn ninth_cyclotomic_stated_odd_pair(p1: Prime, p2: Prime) -> bool {
    !p1.is_two()
        && !p2.is_two()
        && p1 != p2
        && (p1.rem(12) == 1 || p2.rem(12) == 1)
        && sym(p1, p2).is_minus_one()
}

// Q(zeta_12) = Q(i, sqrt -3): 2 never splits, odd x splits iff x = 1 (mod 12).
fn twelfth(p1: Prime, p2: Prime, trace: &mut Trace) -> bool {
    let odd_pair = !p2.is_two()
        && sym(p1, p2).is_minus_one()
        && (p1.rem(12) == 1 || p2.rem(12) == 1);
    let fired = [
        trace.check("cyclotomic12.odd-pair", odd_pair),
        trace.check("cyclotomic12.dyadic.13mod24", p2.is_two() && p1.rem(24) == 13),
    ];
    fired.contains(&true)
}

// Q(zeta_5): only sufficient. Tried in both argument orders.
fn fifth(p1: Prime, p2: Prime, trace: &mut Trace) -> Verdict {
    let hit = |a: Prime, b: Prime| a.rem(5) == 1 && sym(b, a).is_minus_one();
    let first = trace.check("cyclotomic5.sufficient.first", hit(p1, p2));
    let swapped = trace.check("cyclotomic5.sufficient.swapped", hit(p2, p1));
    Verdict {
        outcome: if first || swapped {
            Outcome::Division
        } else {
            Outcome::Unknown
        },
        certainty: Certainty::SufficientOnly,
        trace: std::mem::take(&mut trace.0),
    }
}

fn prime_power_cases(l: Prime, p1: Prime, p2: Prime, trace: &mut Trace) -> bool {
    let minus_l = -l.as_i64();
    quadratic_type_cases(
        "prime-power",
        p1,
        p2,
        |x| leg(minus_l, x).is_one(),
        l.rem(8) == 7,
        trace,
    )
}

fn check_conductor_prime(l: Prime) -> Result<()> {
    if l.rem(4) != 3 {
        return Err(Error::BadModulus(l.get()));
    }
    Ok(())
}

/// `H(p1, p2)` over `Q(zeta_{l^k})` with `l = 3 (mod 4)` prime and
/// `p1, p2 != l`. The verdict does not depend on `k`.
pub fn classify_prime_power(l: Prime, k: u32, p1: Prime, p2: Prime) -> Result<Verdict> {
    check_conductor_prime(l)?;
    if k == 0 {
        return Err(Error::ZeroExponent);
    }
    distinct(p1, p2)?;
    if let Some(prime) = [p1, p2].into_iter().find(|&x| x == l) {
        return Err(Error::PrimeEqualsConductor {
            prime: prime.get(),
            l: l.get(),
        });
    }
    let mut trace = Trace::default();
    let (p1, p2) = orient(p1, p2, &mut trace)?;
    let division = prime_power_cases(l, p1, p2, &mut trace);
    Ok(trace.exact(division))
}

fn supported_prime_power(k: &CyclotomicField) -> Option<Prime> {
    k.prime_power_base()
        .map(|(l, _)| l)
        .filter(|l| l.rem(4) == 3)
}

/// Whether [`classify_cyclotomic`] has a criterion for `Q(zeta_n)`.
pub fn cyclotomic_supported(n: u64) -> bool {
    CyclotomicField::new(n).is_ok_and(|k| {
        matches!(k.n(), 3 | 4 | 5 | 7 | 8 | 9 | 11 | 12) || supported_prime_power(&k).is_some()
    })
}

/// `H(p1, p2)` over `Q(zeta_n)` for canonical `n` in
/// `{3, 4, 5, 7, 8, 9, 11, 12}` or `n = l^k` with `l = 3 (mod 4)`.
pub fn classify_cyclotomic(n: u64, p1: Prime, p2: Prime) -> Result<Verdict> {
    let field = CyclotomicField::new(n)?;
    let mut trace = Trace::default();
    if field.n() != n {
        trace.check(format!("cyclotomic.canonical:{n}->{}", field.n()), true);
    }
    classify_cyclotomic_field(&field, p1, p2, trace)
}

fn classify_cyclotomic_field(
    field: &CyclotomicField,
    p1: Prime,
    p2: Prime,
    mut trace: Trace,
) -> Result<Verdict> {
    let as_quadratic = |d: i64, mut trace: Trace| -> Result<Verdict> {
        trace.check(format!("cyclotomic{}.as:quadratic:{d}", field.n()), true);
        let k = QuadraticField::new(d)?;
        let (a, b) = orient(p1, p2, &mut trace)?;
        let division = quadratic_cases("quadratic", &k, a, b, &mut trace);
        Ok(trace.exact(division))
    };
    match field.n() {
        3 => return as_quadratic(-3, trace),
        4 => return as_quadratic(-1, trace),
        5 => {
            distinct(p1, p2)?;
            return Ok(fifth(p1, p2, &mut trace));
        }
        _ => {}
    }
    let criterion: Option<fn(Prime, Prime, &mut Trace) -> bool> = match field.n() {
        7 => Some(seventh),
        8 => Some(eighth),
        9 => Some(ninth),
        12 => Some(twelfth),
        _ => None,
    };
    if let Some(criterion) = criterion {
        let (a, b) = orient(p1, p2, &mut trace)?;
        let division = criterion(a, b, &mut trace);
        return Ok(trace.exact(division));
    }
    if field.n() == 11 {
        let k = QuadraticField::new(-11)?;
        let (a, b) = orient(p1, p2, &mut trace)?;
        let division = quadratic_cases("cyclotomic11", &k, a, b, &mut trace);
        return Ok(trace.exact(division));
    }
    let Some(l) = supported_prime_power(field) else {
        return Err(Error::UnsupportedField(field.to_string()));
    };
    if p1 == l || p2 == l {
        // outside the prime-power criterion's hypotheses; the odd-degree step
        // down to Q(sqrt -l) still holds, so decide there
        distinct(p1, p2)?;
        return as_quadratic(-l.as_i64(), trace);
    }
    let (a, b) = orient(p1, p2, &mut trace)?;
    let division = prime_power_cases(l, a, b, &mut trace);
    Ok(trace.exact(division))
}

/// `H(p1, p2)` over the Kummer field `Q(zeta_{l^k}, alpha^{1/l^k})`: the
/// extension over `Q(zeta_{l^k})` has odd degree, so the cyclotomic verdict
/// carries over unchanged.
pub fn classify_kummer(k: &KummerField, p1: Prime, p2: Prime) -> Result<Verdict> {
    check_conductor_prime(k.l())?;
    let base = k.cyclotomic_base();
    let mut trace = Trace::default();
    trace.check(format!("kummer.odd-degree:{base}"), true);
    classify_cyclotomic_field(&base, p1, p2, trace)
}

/// Over `Q` itself: split iff the reduced discriminant is 1.
pub fn classify_rational(p: Prime, q: Prime) -> Result<Verdict> {
    distinct(p, q)?;
    let data = ramified_places(p.as_i64(), q.as_i64())?;
    let mut trace = Trace::default();
    let division = trace.check("rational.discriminant-nontrivial", !data.is_split());
    Ok(trace.exact(division))
}

/// Dispatch on the base field.
pub fn classify(field: &FieldDescriptor, p: Prime, q: Prime) -> Result<Verdict> {
    match field {
        FieldDescriptor::Rational => classify_rational(p, q),
        FieldDescriptor::Quadratic(k) => classify_quadratic(k, p, q),
        FieldDescriptor::Biquadratic(k) => classify_biquadratic(k, p, q),
        FieldDescriptor::Cyclotomic(k) => classify_cyclotomic_field(k, p, q, Trace::default()),
        FieldDescriptor::Kummer(k) => classify_kummer(k, p, q),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::primes_up_to;

    fn p(n: u64) -> Prime {
        Prime::new(n).unwrap()
    }

    fn quad(d: i64, a: u64, b: u64) -> Verdict {
        classify_quadratic(&QuadraticField::new(d).unwrap(), p(a), p(b)).unwrap()
    }

    fn biquad(d1: i64, d2: i64, a: u64, b: u64) -> Verdict {
        classify_biquadratic(&BiquadraticField::new(d1, d2).unwrap(), p(a), p(b)).unwrap()
    }

    fn cyc(n: u64, a: u64, b: u64) -> Verdict {
        classify_cyclotomic(n, p(a), p(b)).unwrap()
    }

    #[test]
    fn quadratic_examples() {
        let v = quad(-7, 3, 2);
        assert_eq!(v.outcome, Outcome::Division);
        assert!(v.has_fired("quadratic.dyadic.3mod8"));
        assert_eq!(quad(-1, 5, 2).outcome, Outcome::Division);
        assert_eq!(quad(-3, 5, 2).outcome, Outcome::Split);
        // p = 3 mod 8 alone is not enough: 3 is inert and 2 ramified in Q(i)
        assert_eq!(quad(-1, 3, 2).outcome, Outcome::Split);
        assert!(quad(-7, 3, 2).trace.iter().all(|s| s.id.starts_with("quadratic.")));
    }

    #[test]
    fn orientation_swaps_two_into_second_slot() {
        let v = quad(-7, 2, 3);
        assert_eq!(v.outcome, Outcome::Division);
        assert_eq!(v.trace[0].id, "orient.swap");
        assert!(v.has_fired("quadratic.dyadic.3mod8"));
    }

    #[test]
    fn equal_primes_rejected() {
        let k = QuadraticField::new(-1).unwrap();
        assert_eq!(classify_quadratic(&k, p(3), p(3)), Err(Error::EqualPrimes(3)));
        assert_eq!(classify_cyclotomic(7, p(5), p(5)), Err(Error::EqualPrimes(5)));
        assert_eq!(classify_cyclotomic(5, p(5), p(5)), Err(Error::EqualPrimes(5)));
        assert_eq!(classify_prime_power(p(7), 1, p(5), p(5)), Err(Error::EqualPrimes(5)));
    }

    #[test]
    fn biquadratic_examples() {
        assert_eq!(biquad(-1, 2, 17, 3).outcome, Outcome::Division);
        let v = biquad(-1, -3, 13, 2);
        assert_eq!(v.outcome, Outcome::Division);
        assert!(v.has_fired("biquadratic.dyadic.5mod8"));
        assert_eq!(biquad(-1, 2, 7, 3).outcome, Outcome::Split);
    }

    #[test]
    fn cyclotomic_examples() {
        let v = cyc(7, 3, 2);
        assert_eq!(v.outcome, Outcome::Division);
        assert!(v.has_fired("cyclotomic7.dyadic.3mod8"));
        let v = cyc(12, 13, 2);
        assert_eq!(v.outcome, Outcome::Division);
        assert!(v.has_fired("cyclotomic12.dyadic.13mod24"));
        let v = cyc(9, 19, 2);
        assert_eq!(v.outcome, Outcome::Division);
        assert!(v.has_fired("cyclotomic9.dyadic.19mod24"));
        assert_eq!(cyc(7, 7, 2).outcome, Outcome::Split);
        assert!(cyc(8, 17, 3).has_fired("cyclotomic8.odd-pair"));
        let v = cyc(5, 11, 2);
        assert_eq!((v.outcome, v.certainty), (Outcome::Division, Certainty::SufficientOnly));
        let v = cyc(5, 7, 3);
        assert_eq!((v.outcome, v.certainty), (Outcome::Unknown, Certainty::SufficientOnly));
    }

    #[test]
    fn unsupported_conductors() {
        for n in [13, 15, 16, 20, 21, 24, 25] {
            assert!(
                matches!(classify_cyclotomic(n, p(3), p(2)), Err(Error::UnsupportedField(_))),
                "n={n}"
            );
            assert!(!cyclotomic_supported(n));
        }
        for n in [3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 14, 19, 22, 23, 27, 49, 121] {
            assert!(cyclotomic_supported(n), "n={n}");
        }
    }

    #[test]
    fn canonicalization_is_traced() {
        let v = cyc(6, 7, 2);
        assert_eq!(v.trace[0].id, "cyclotomic.canonical:6->3");
        assert_eq!(v.outcome, cyc(3, 7, 2).outcome);
    }

    #[test]
    fn ninth_stated_congruence_misses_a_division_pair() {
        assert!(!ninth_cyclotomic_stated_odd_pair(p(5), p(7)));
        let v = cyc(9, 5, 7);
        assert_eq!(v.outcome, Outcome::Division);
        assert!(v.has_fired("cyclotomic9.odd-pair"));
        // wherever the stated congruence holds, the verdict is Division
        let primes = primes_up_to(200);
        for &a in &primes {
            for &b in &primes {
                if a != b && ninth_cyclotomic_stated_odd_pair(a, b) {
                    assert_eq!(classify_cyclotomic(9, a, b).unwrap().outcome, Outcome::Division);
                }
            }
        }
    }

    #[test]
    fn prime_power_examples() {
        let v = classify_prime_power(p(3), 2, p(19), p(2)).unwrap();
        assert_eq!(v.outcome, Outcome::Division);
        assert!(v.has_fired("prime-power.dyadic.3mod8"));
        assert_eq!(classify_prime_power(p(7), 1, p(3), p(2)).unwrap().outcome, Outcome::Division);
        let v = classify_prime_power(p(11), 1, p(13), p(5)).unwrap();
        assert_eq!(v.outcome, Outcome::Division);
        assert!(v.has_fired("prime-power.odd-pair"));
        assert_eq!(classify_prime_power(p(5), 1, p(3), p(2)), Err(Error::BadModulus(5)));
        assert_eq!(
            classify_prime_power(p(7), 1, p(7), p(2)),
            Err(Error::PrimeEqualsConductor { prime: 7, l: 7 })
        );
        assert_eq!(classify_prime_power(p(7), 0, p(3), p(2)), Err(Error::ZeroExponent));
    }

    #[test]
    fn kummer_examples() {
        let k = KummerField::new(p(3), 1).unwrap();
        let v = classify_kummer(&k, p(7), p(3)).unwrap();
        assert_eq!(v.outcome, cyc(3, 7, 3).outcome);
        assert_eq!(v.trace[0].id, "kummer.odd-degree:cyclotomic:3");
        let k = KummerField::new(p(7), 1).unwrap();
        assert_eq!(classify_kummer(&k, p(3), p(2)).unwrap().outcome, Outcome::Division);
        assert_eq!(KummerField::new(p(5), 1), Err(Error::BadModulus(5)));
    }

    #[test]
    fn conductor_prime_inputs_fall_back_to_quadratic() {
        let v = cyc(19, 19, 2);
        assert!(v.has_fired("cyclotomic19.as:quadratic:-19"));
        assert_eq!(v.outcome, quad(-19, 19, 2).outcome);
    }

    #[test]
    fn rational_examples() {
        assert_eq!(classify_rational(p(3), p(2)).unwrap().outcome, Outcome::Division);
        assert_eq!(classify_rational(p(7), p(2)).unwrap().outcome, Outcome::Split);
    }

    #[test]
    fn reduction_and_specialization_coherence() {
        let primes = primes_up_to(200);
        let outcome = |v: Result<Verdict>| v.map(|v| (v.outcome, v.certainty)).unwrap();
        for &a in &primes {
            for &b in &primes {
                if a == b {
                    continue;
                }
                assert_eq!(outcome(classify_cyclotomic(6, a, b)), outcome(classify_cyclotomic(3, a, b)));
                assert_eq!(outcome(classify_cyclotomic(10, a, b)), outcome(classify_cyclotomic(5, a, b)));
                for (l, n) in [(3, 3), (3, 9), (7, 7), (11, 11)] {
                    if a.get() == l || b.get() == l {
                        continue;
                    }
                    let expected = outcome(classify_cyclotomic(n, a, b));
                    for k in 1..=3 {
                        assert_eq!(outcome(classify_prime_power(p(l), k, a, b)), expected, "l={l} n={n} ({a},{b})");
                    }
                }
            }
        }
    }

    #[test]
    fn exact_verdicts_never_unknown() {
        let primes = primes_up_to(100);
        for n in [3, 4, 5, 7, 8, 9, 11, 12, 19, 23, 27] {
            for &a in &primes {
                for &b in &primes {
                    if a == b {
                        continue;
                    }
                    let v = classify_cyclotomic(n, a, b).unwrap();
                    match v.certainty {
                        Certainty::Exact => assert_ne!(v.outcome, Outcome::Unknown),
                        Certainty::SufficientOnly => assert_eq!(n, 5),
                    }
                }
            }
        }
    }
}
