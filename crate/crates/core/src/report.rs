//! Batch comparison of the closed-form classifier against the oracle.

use serde::Serialize;

use crate::arith::{primes_up_to, Prime};
use crate::classify::{classify, cyclotomic_supported, Certainty, Outcome, Verdict};
use crate::error::{Error, Result};
use crate::field::FieldDescriptor;
use crate::oracle::division_oracle;

pub const MAX_SWEEP_PRIME: u64 = 10_000;

/// CSV header; JSON rows use the same keys.
pub const CSV_HEADER: [&str; 8] = [
    "field",
    "p1",
    "p2",
    "classify",
    "certainty",
    "oracle",
    "agree",
    "trace",
];

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SweepRow {
    pub field: String,
    pub p1: u64,
    pub p2: u64,
    pub classify: Outcome,
    pub certainty: Certainty,
    pub oracle: Outcome,
    pub agree: bool,
    pub trace: String,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub agree: usize,
    /// Decided verdicts (Division or Split) that contradict the oracle.
    pub disagree: usize,
    pub unknown: usize,
    /// Unknown rows where the oracle says Division: pairs the sufficient
    /// condition does not reach.
    pub unknown_oracle_division: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SweepReport {
    pub field: FieldDescriptor,
    pub max_prime: u64,
    pub rows: Vec<SweepRow>,
    pub summary: Summary,
}

/// The field the oracle evaluates in place of `field`. Kummer fields are not
/// Galois; their verdict equals that over the cyclotomic base.
fn oracle_field(field: &FieldDescriptor) -> FieldDescriptor {
    match field {
        FieldDescriptor::Kummer(k) => FieldDescriptor::Cyclotomic(k.cyclotomic_base()),
        other => *other,
    }
}

fn check_supported(field: &FieldDescriptor) -> Result<()> {
    match field {
        FieldDescriptor::Cyclotomic(k) if !cyclotomic_supported(k.n()) => {
            Err(Error::UnsupportedField(field.to_string()))
        }
        _ => Ok(()),
    }
}

pub fn row(field: &FieldDescriptor, p1: Prime, p2: Prime) -> Result<(SweepRow, Verdict)> {
    let verdict = classify(field, p1, p2)?;
    let oracle = division_oracle(&oracle_field(field), p1, p2)?;
    let row = SweepRow {
        field: field.to_string(),
        p1: p1.get(),
        p2: p2.get(),
        classify: verdict.outcome,
        certainty: verdict.certainty,
        oracle,
        agree: verdict.outcome == oracle,
        trace: verdict.trace_string(),
    };
    Ok((row, verdict))
}

/// Every ordered pair of distinct primes `<= max_prime`, ascending by `p1`
/// then `p2`.
pub fn sweep(field: &FieldDescriptor, max_prime: u64) -> Result<SweepReport> {
    if max_prime > MAX_SWEEP_PRIME {
        return Err(Error::MaxPrimeTooLarge(max_prime));
    }
    check_supported(field)?;
    let primes = primes_up_to(max_prime);
    let mut rows = Vec::with_capacity(primes.len() * primes.len().saturating_sub(1));
    let mut summary = Summary::default();
    for &p1 in &primes {
        for &p2 in &primes {
            if p1 == p2 {
                continue;
            }
            let (r, _) = row(field, p1, p2)?;
            if r.agree {
                summary.agree += 1;
            } else if r.classify == Outcome::Unknown {
                summary.unknown += 1;
                if r.oracle == Outcome::Division {
                    summary.unknown_oracle_division += 1;
                }
            } else {
                summary.disagree += 1;
            }
            rows.push(r);
        }
    }
    Ok(SweepReport {
        field: *field,
        max_prime,
        rows,
        summary,
    })
}

impl SweepReport {
    pub fn to_csv(&self) -> String {
        let mut w = csv::WriterBuilder::new()
            .has_headers(false)
            .from_writer(Vec::new());
        w.write_record(CSV_HEADER).expect("in-memory write");
        for r in &self.rows {
            w.serialize(r).expect("in-memory write");
        }
        String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8")
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes") + "\n"
    }

    pub fn to_text(&self) -> String {
        let s = &self.summary;
        let mut out = format!(
            "field {}  max prime {}  pairs {}\nagree {}  disagree {}  unknown {} (oracle Division among them: {})\n",
            self.field,
            self.max_prime,
            self.rows.len(),
            s.agree,
            s.disagree,
            s.unknown,
            s.unknown_oracle_division
        );
        for r in self.rows.iter().filter(|r| !r.agree && r.classify != Outcome::Unknown) {
            out.push_str(&format!(
                "DISAGREE ({}, {}): classify {} oracle {} [{}]\n",
                r.p1, r.p2, r.classify, r.oracle, r.trace
            ));
        }
        out
    }
}
