//! rhspaces: Radon-Hurwitz numbers, dimension bounds for constant-rank
//! spaces of symmetric and hermitian matrices, explicit constructions and
//! certificate-based verification.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage/parse error.

use std::path::PathBuf;
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;

use rhspaces_core::classifier::{classify, report_json, BoundQuery, Status};
use rhspaces_core::rh::{rho_field, sigma, HalfInteger};
use rhspaces_core::spacefile::{any_space_to_json, parse_space, to_pretty_string};
use rhspaces_core::spaces::{build_space, AnySpace};
use rhspaces_core::verifier::{verify_space, VerificationReport};
use rhspaces_core::{Error, Field};

#[derive(Parser)]
#[command(
    name = "rhspaces",
    about = "Radon-Hurwitz bounds and certified constant-rank matrix spaces",
    version
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Print the Radon-Hurwitz number rho(r) (rho_C with --complex).
    /// r is a positive integer or a half-integer literal "p/2".
    Rho {
        r: String,
        #[arg(long)]
        complex: bool,
    },
    /// Print the window maximum sigma(n, h) (sigma_C with --complex).
    Sigma {
        n: String,
        h: String,
        #[arg(long)]
        complex: bool,
    },
    /// Print the bound report for n x n matrices of corank s as JSON.
    Classify {
        n: String,
        s: u32,
        #[arg(long)]
        hermitian: bool,
    },
    /// Build the certified space for (n, s) and write it as JSON.
    Construct {
        n: u64,
        s: u32,
        #[arg(long)]
        hermitian: bool,
        /// Output file; stdout when omitted.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Verify a space file: certificate, exact rank samples, signature.
    /// Exit 0 if everything passes, 1 on verification failure.
    Verify {
        file: PathBuf,
        #[arg(long, default_value_t = 200)]
        samples: usize,
        /// Verification seed; falls back to $RH_SEED, then 0.
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Print bound reports for all n up to a limit as a table.
    Table {
        #[arg(long = "max-n")]
        max_n: u64,
        #[arg(long, default_value_t = 0)]
        s: u32,
        #[arg(long)]
        hermitian: bool,
        #[arg(long, value_enum, default_value_t = TableFormat::Tsv)]
        format: TableFormat,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum TableFormat {
    Tsv,
    Md,
}

fn field_of(hermitian: bool) -> Field {
    if hermitian {
        Field::Complex
    } else {
        Field::Real
    }
}

/// Errors mapped to process exit codes.
enum Failure {
    /// Exit 2: bad arguments, malformed input, schema violations.
    Usage(String),
    /// Exit 1: verification failed or I/O failed.
    Runtime(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

fn parse_biguint(s: &str) -> Result<BigUint, Failure> {
    BigUint::from_str(s).map_err(|_| Failure::Usage(format!("not a nonnegative integer: {s:?}")))
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.cmd {
        Cmd::Rho { r, complex } => {
            let r: HalfInteger = r
                .parse()
                .map_err(|e: Error| Failure::Usage(e.to_string()))?;
            let v = rho_field(field_of(complex), &r)?;
            println!("{v}");
            Ok(())
        }
        Cmd::Sigma { n, h, complex } => {
            let n = parse_biguint(&n)?;
            let h = parse_biguint(&h)?;
            let v = sigma(&n, &h, field_of(complex))?;
            println!("{v}");
            Ok(())
        }
        Cmd::Classify { n, s, hermitian } => {
            let n = parse_biguint(&n)?;
            let q = BoundQuery::new(field_of(hermitian), n, s)?;
            let r = classify(&q)?;
            println!("{}", report_json(&q, &r));
            Ok(())
        }
        Cmd::Construct {
            n,
            s,
            hermitian,
            output,
        } => {
            let space = build_space(field_of(hermitian), n, s)?;
            let text = to_pretty_string(&space);
            match output {
                Some(path) => std::fs::write(&path, text).map_err(|e| {
                    Failure::Runtime(format!("cannot write {}: {e}", path.display()))
                })?,
                None => print!("{text}"),
            }
            Ok(())
        }
        Cmd::Verify {
            file,
            samples,
            seed,
        } => {
            let text = std::fs::read_to_string(&file).map_err(|e| {
                Failure::Usage(format!("cannot read {}: {e}", file.display()))
            })?;
            let space = parse_space(&text)?;
            let seed = match seed {
                Some(v) => v,
                None => match std::env::var("RH_SEED") {
                    Ok(raw) => raw.parse().map_err(|_| {
                        Failure::Usage(format!("RH_SEED must be a u64, got {raw:?}"))
                    })?,
                    Err(_) => 0,
                },
            };
            let report: VerificationReport = match &space {
                AnySpace::Real(sp) => verify_space(sp, samples, seed),
                AnySpace::Complex(sp) => verify_space(sp, samples, seed),
            };
            println!("{}", report.to_json());
            if report.all_ok() {
                Ok(())
            } else {
                Err(Failure::Runtime("verification failed".into()))
            }
        }
        Cmd::Table {
            max_n,
            s,
            hermitian,
            format,
        } => {
            if max_n < 2 {
                return Err(Failure::Usage("--max-n must be at least 2".into()));
            }
            let field = field_of(hermitian);
            if s > field.max_corank() {
                return Err(Failure::Usage(format!(
                    "corank s = {s} is out of range for the {field} case"
                )));
            }
            let header = ["n", "k", "sigma", "lower", "upper", "status", "rule"];
            match format {
                TableFormat::Tsv => println!("{}", header.join("\t")),
                TableFormat::Md => {
                    println!("| {} |", header.join(" | "));
                    println!("|{}|", header.map(|_| " --- ").join("|"));
                }
            }
            for n in (s as u64 + 1)..=max_n {
                let q = BoundQuery::from_ints(field, n, s)?;
                let r = classify(&q)?;
                let status = match r.status {
                    Status::Exact => "exact",
                    Status::Unknown => "unknown",
                };
                let row = [
                    n.to_string(),
                    (n - s as u64).to_string(),
                    r.sigma_value.to_string(),
                    r.lower.to_string(),
                    r.upper.to_string(),
                    status.to_string(),
                    r.rule.name().to_string(),
                ];
                match format {
                    TableFormat::Tsv => println!("{}", row.join("\t")),
                    TableFormat::Md => println!("| {} |", row.join(" | ")),
                }
            }
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Runtime(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
