use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use quatsplit::arith::Prime;
use quatsplit::hilbert::ramified_places;
use quatsplit::report::{self, SweepRow};
use quatsplit::{Error, FieldDescriptor, RamificationData, Verdict};

/// Decide whether the quaternion algebra H(p, q) is a division algebra over a
/// number field.
#[derive(Parser)]
#[command(name = "quatsplit", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Classify H(p, q) over one field.
    Classify {
        /// rational | quadratic:<d> | biquadratic:<d1>,<d2> | cyclotomic:<n> | kummer:<l>^<k>
        #[arg(long)]
        field: String,
        #[arg(long, allow_negative_numbers = true)]
        p: i64,
        #[arg(long, allow_negative_numbers = true)]
        q: i64,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Ramified places and reduced discriminant of H(a, b) over Q.
    Ramification {
        #[arg(long, allow_negative_numbers = true)]
        a: i64,
        #[arg(long, allow_negative_numbers = true)]
        b: i64,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Compare the classifier against the local-global oracle on every ordered
    /// pair of distinct primes up to --max-prime.
    Verify {
        #[arg(long)]
        field: String,
        #[arg(long, default_value_t = 200)]
        max_prime: u64,
        /// Write the report here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

const EXIT_BAD_ARGS: u8 = 2;
const EXIT_UNSUPPORTED: u8 = 3;
const EXIT_DISAGREE: u8 = 4;

enum Failure {
    Lib(Error),
    Io(PathBuf, std::io::Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

fn exit_code(e: &Error) -> u8 {
    match e {
        // a Kummer conductor that is not 3 mod 4 is outside the supported family
        Error::UnsupportedField(_) | Error::BadModulus(_) => EXIT_UNSUPPORTED,
        _ => EXIT_BAD_ARGS,
    }
}

fn prime(x: i64) -> Result<Prime, Error> {
    Prime::from_signed(x)
}

fn csv_line(fields: &[String]) -> String {
    let mut w = csv::WriterBuilder::new().from_writer(Vec::new());
    w.write_record(fields).expect("in-memory write");
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8")
}

fn render_classify(row: &SweepRow, verdict: &Verdict, format: Format) -> String {
    match format {
        Format::Text => {
            let mut out = format!(
                "field {}  H({}, {})\noutcome {}  certainty {}  oracle {}\ntrace:\n",
                row.field, row.p1, row.p2, row.classify, row.certainty, row.oracle
            );
            for step in &verdict.trace {
                out.push_str(&format!("  [{}] {}\n", if step.fired { "x" } else { " " }, step.id));
            }
            out
        }
        Format::Json => serde_json::to_string_pretty(row).expect("row serializes") + "\n",
        Format::Csv => {
            // serializing a struct writes the header row first
            let mut w = csv::Writer::from_writer(Vec::new());
            w.serialize(row).expect("in-memory write");
            String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8")
        }
    }
}

fn render_ramification(a: i64, b: i64, data: &RamificationData, format: Format) -> String {
    let places: Vec<String> = data.ramified.iter().map(|v| v.to_string()).collect();
    match format {
        Format::Text => format!(
            "H({a}, {b}) ramified at {{{}}}\nreduced discriminant {}\n",
            places.join(", "),
            data.reduced_discriminant
        ),
        Format::Json => {
            let v = serde_json::json!({
                "a": a,
                "b": b,
                "ramified": data.ramified,
                "reduced_discriminant": data.reduced_discriminant,
            });
            serde_json::to_string_pretty(&v).expect("json") + "\n"
        }
        Format::Csv => {
            let header = ["a", "b", "ramified", "reduced_discriminant"].map(String::from);
            let values = [a.to_string(), b.to_string(), places.join(";"), data.reduced_discriminant.to_string()];
            csv_line(&header) + &csv_line(&values)
        }
    }
}

fn run(cli: Cli) -> Result<u8, Failure> {
    match cli.command {
        Command::Classify { field, p, q, format } => {
            let field: FieldDescriptor = field.parse()?;
            let (row, verdict) = report::row(&field, prime(p)?, prime(q)?)?;
            print!("{}", render_classify(&row, &verdict, format));
            Ok(0)
        }
        Command::Ramification { a, b, format } => {
            let data = ramified_places(a, b)?;
            print!("{}", render_ramification(a, b, &data, format));
            Ok(0)
        }
        Command::Verify { field, max_prime, out, format } => {
            let field: FieldDescriptor = field.parse()?;
            let report = report::sweep(&field, max_prime)?;
            let body = match format {
                Format::Text => report.to_text(),
                Format::Json => report.to_json(),
                Format::Csv => report.to_csv(),
            };
            match &out {
                Some(path) => {
                    fs::write(path, &body).map_err(|e| Failure::Io(path.clone(), e))?;
                    let s = report.summary;
                    eprintln!(
                        "{}: {} rows, agree {}, disagree {}, unknown {}",
                        path.display(),
                        report.rows.len(),
                        s.agree,
                        s.disagree,
                        s.unknown
                    );
                }
                None => print!("{body}"),
            }
            Ok(if report.summary.disagree == 0 { 0 } else { EXIT_DISAGREE })
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => ExitCode::from(code),
        Err(Failure::Lib(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
        Err(Failure::Io(path, e)) => {
            eprintln!("error: cannot write {}: {e}", path.display());
            ExitCode::FAILURE
        }
    }
}
