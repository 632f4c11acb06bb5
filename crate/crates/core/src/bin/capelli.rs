use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use capelli::bitableaux::{capelli_bitableau_of_kind, BiTableau, BitabKind, YoungTableau};
use capelli::center;
use capelli::suite::{run_suite, run_suites, Suite, SuiteConfig, SuiteError, DEFAULT_SEED};
use capelli::uea::UeaPoly;
use capelli::{Rational, UeaElement};

#[derive(Parser, Debug)]
#[command(name = "capelli", version, about = "Capelli identities, bitableaux and central elements of U(gl(n))")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Run a verification suite (or `all`) and print its report.
    Verify {
        /// Suite name; may also be given with --suite.
        name: Option<String>,
        #[arg(long)]
        suite: Option<String>,
        #[command(flatten)]
        idx: Indices,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        #[arg(long, default_value_t = 25)]
        samples: usize,
        /// Write 0 for every elapsed time.
        #[arg(long)]
        no_timing: bool,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Construct a catalog element and print its canonical form.
    Compute {
        /// Hk, K, C, Ht, Cs, P, bitab-det, bitab-per or chi.
        key: String,
        #[command(flatten)]
        idx: Indices,
        /// Left tableau, as a JSON array of rows.
        #[arg(long = "S", alias = "s")]
        s: Option<String>,
        /// Right tableau, as a JSON array of rows.
        #[arg(long = "T", alias = "t")]
        t: Option<String>,
        /// Catalog key whose Harish-Chandra image `chi` computes.
        #[arg(long)]
        of: Option<String>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

#[derive(Args, Debug, Clone)]
struct Indices {
    #[arg(long, default_value_t = 2)]
    n: u32,
    #[arg(long)]
    d: Option<u32>,
    #[arg(long)]
    k: Option<u32>,
    #[arg(long)]
    p: Option<u32>,
    #[arg(long)]
    r: Option<u32>,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
enum Format {
    Text,
    Json,
}

#[derive(Debug, thiserror::Error)]
enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Suite(#[from] SuiteError),
}

impl CliError {
    fn code(&self) -> u8 {
        match self {
            CliError::Suite(SuiteError::Internal(_)) => 3,
            _ => 2,
        }
    }
}

fn usage(e: impl ToString) -> CliError {
    CliError::Usage(e.to_string())
}

enum Value {
    Element(UeaElement),
    Poly(UeaPoly, &'static str),
}

fn need(v: Option<u32>, flag: &str, key: &str) -> Result<u32, CliError> {
    v.ok_or_else(|| usage(format!("{key} requires --{flag}")))
}

fn catalog(key: &str, idx: &Indices) -> Result<Value, CliError> {
    let n = idx.n;
    let el = |r: Result<UeaElement, center::CenterError>| r.map(Value::Element).map_err(usage);
    match key {
        "Hk" => el(center::capelli_generator(n, need(idx.k, "k", key)?)),
        "K" => el(center::deruyts(n, need(idx.p, "p", key)?)),
        "C" => el(center::c_n(n, need(idx.p, "p", key)?)),
        "P" => el(center::permanental_generator(n, need(idx.r, "r", key)?)),
        "Ht" => Ok(match idx.p {
            Some(p) => Value::Element(center::h_n_value(n, &Rational::from_int(p as i64))),
            None => Value::Poly(center::h_n_t(n), "t"),
        }),
        "Cs" => match idx.k {
            Some(h) => el(center::c_coefficient(n, h)),
            None => Ok(Value::Poly(center::capelli_determinant_c(n), "s")),
        },
        other => Err(usage(format!("unknown key {other:?}"))),
    }
}

fn render(v: &Value, format: Format) -> String {
    match (v, format) {
        (Value::Element(u), Format::Text) => u.to_string(),
        (Value::Element(u), Format::Json) => serde_json::to_string_pretty(&u.to_json()).expect("serializes"),
        (Value::Poly(p, var), Format::Text) => p.to_text(var),
        (Value::Poly(p, var), Format::Json) => {
            let coeffs: Vec<_> = p.coeffs().iter().map(|c| c.to_json()).collect();
            serde_json::to_string_pretty(&json!({ "var": var, "coeffs": coeffs })).expect("serializes")
        }
    }
}

fn compute(key: &str, idx: &Indices, s: Option<&str>, t: Option<&str>, of: Option<&str>, format: Format) -> Result<String, CliError> {
    match key {
        "bitab-det" | "bitab-per" => {
            let s = YoungTableau::from_json(s.ok_or_else(|| usage("missing --S"))?).map_err(usage)?;
            let t = YoungTableau::from_json(t.ok_or_else(|| usage("missing --T"))?).map_err(usage)?;
            let bt = BiTableau::new(s, t).map_err(usage)?;
            let kind = if key == "bitab-det" { BitabKind::Det } else { BitabKind::Per };
            let u = capelli_bitableau_of_kind(&bt, idx.n, kind).map_err(usage)?;
            Ok(render(&Value::Element(u), format))
        }
        "chi" => {
            let of = of.ok_or_else(|| usage("chi requires --of KEY"))?;
            let u = match catalog(of, idx)? {
                Value::Element(u) => u,
                Value::Poly(..) => return Err(usage(format!("chi of {of} needs a scalar index"))),
            };
            let f = center::harish_chandra(&u, idx.n).map_err(usage)?;
            Ok(match format {
                Format::Text => f.to_string(),
                Format::Json => serde_json::to_string_pretty(&json!({ "of": of, "n": idx.n, "text": f.to_string() }))
                    .expect("serializes"),
            })
        }
        _ => Ok(render(&catalog(key, idx)?, format)),
    }
}

fn verify(name: &str, idx: &Indices, seed: u64, samples: usize, timing: bool, format: Format) -> Result<bool, CliError> {
    let cfg = SuiteConfig { n: idx.n, d: idx.d, k: idx.k, p: idx.p, r: idx.r, seed, samples, timing };
    let report = if name.eq_ignore_ascii_case("all") {
        run_suites("all", &Suite::ALL, &cfg)?
    } else {
        run_suite(name.parse()?, &cfg)?
    };
    match format {
        Format::Text => print!("{}", report.to_text()),
        Format::Json => println!("{}", report.to_json()),
    }
    Ok(report.pass)
}

fn run(cli: Cli) -> Result<bool, CliError> {
    match cli.command {
        Command::Verify { name, suite, idx, seed, samples, no_timing, format } => {
            let name = match (name, suite) {
                (Some(a), Some(b)) if a != b => return Err(usage("conflicting suite names")),
                (Some(a), _) | (None, Some(a)) => a,
                (None, None) => return Err(usage("missing suite name")),
            };
            verify(&name, &idx, seed, samples, !no_timing, format)
        }
        Command::Compute { key, idx, s, t, of, format } => {
            println!("{}", compute(&key, &idx, s.as_deref(), t.as_deref(), of.as_deref(), format)?);
            Ok(true)
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.code())
        }
    }
}
