//! Command-line front end: continued fraction expansion, the four Pell
//! equations, the a²+2a closed forms, and a verification sweep.
//!
//! Exit codes: 0 success, 2 perfect square, 3 out of domain, 4 unsolvable,
//! 5 verification sweep failure. Results go to stdout; in text mode error
//! diagnostics go to stderr, in JSON mode a machine-readable error object
//! goes to stdout instead.

mod sweep;

use std::fmt::Write as _;
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;
use serde_json::{json, Value};

use pellfrac::family::{
    family_four_fundamental, family_fundamental, family_neg_four, family_neg_one,
    family_nth_four, family_nth_unit, FamilyParam,
};
use pellfrac::pell::{iterate_solutions, solve, PellSolution, Reason, Verdict};
use pellfrac::{cf, Error};

const EXIT_PERFECT_SQUARE: u8 = 2;
const EXIT_OUT_OF_DOMAIN: u8 = 3;
const EXIT_UNSOLVABLE: u8 = 4;
pub(crate) const EXIT_CHECK_FAILED: u8 = 5;

#[derive(Parser)]
#[command(name = "pellfrac", version, about = "Exact Pell equation toolkit")]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Expand sqrt(d) as a periodic continued fraction.
    Cf {
        #[arg(value_parser = parse_biguint)]
        d: BigUint,
    },
    /// Solve x^2 - d*y^2 = N for N in {1, -1, 4, -4}.
    Solve {
        #[arg(value_parser = parse_biguint)]
        d: BigUint,
        #[arg(allow_negative_numbers = true)]
        n: i64,
        /// How many solutions to list.
        #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..))]
        count: u64,
        /// Skip the closed-form fast path even when d = a^2 + 2a.
        #[arg(long)]
        general: bool,
    },
    /// Solve for d = a^2 + 2a using the closed forms.
    Family {
        #[arg(value_parser = parse_biguint)]
        a: BigUint,
        #[arg(allow_negative_numbers = true)]
        n: i64,
        /// How many solutions to list.
        #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..))]
        count: u64,
    },
    /// Re-check every closed-form claim against the general solver and the
    /// brute-force oracle over a range of a.
    VerifyTheorems {
        /// Inclusive range of a, e.g. 1..50.
        #[arg(long = "a", value_parser = parse_range, default_value = "1..50")]
        a_range: (u64, u64),
        /// Largest solution index checked per a.
        #[arg(long = "n", default_value_t = 10)]
        n_max: u64,
        /// Oracle search bound on y.
        #[arg(long = "y-max", default_value_t = 10_000)]
        y_max: u64,
    },
}

fn parse_biguint(s: &str) -> Result<BigUint, String> {
    BigUint::from_str(s).map_err(|_| format!("'{s}' is not a nonnegative integer"))
}

fn parse_range(s: &str) -> Result<(u64, u64), String> {
    let (lo, hi) = s
        .split_once("..")
        .ok_or_else(|| format!("'{s}' is not a range of the form lo..hi"))?;
    let lo: u64 = lo.trim().parse().map_err(|_| format!("bad range start '{lo}'"))?;
    let hi: u64 = hi.trim().parse().map_err(|_| format!("bad range end '{hi}'"))?;
    if lo < 1 || hi < lo {
        return Err(format!("range {lo}..{hi} must satisfy 1 <= lo <= hi"));
    }
    Ok((lo, hi))
}

/// What a command hands back for printing.
pub(crate) struct Report {
    pub record: Value,
    pub text: String,
    pub exit: u8,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (command_name, outcome) = match &cli.command {
        Command::Cf { d } => ("cf", cmd_cf(d)),
        Command::Solve { d, n, count, general } => ("solve", cmd_solve(d, *n, *count, *general)),
        Command::Family { a, n, count } => ("family", cmd_family(a, *n, *count)),
        Command::VerifyTheorems { a_range, n_max, y_max } => {
            ("verify-theorems", Ok(sweep::run(*a_range, *n_max, *y_max)))
        }
    };
    match outcome {
        Ok(report) => {
            match cli.format {
                Format::Text => println!("{}", report.text),
                Format::Json => println!("{}", report.record),
            }
            ExitCode::from(report.exit)
        }
        Err(err) => {
            let exit = match err {
                Error::PerfectSquare(_) => EXIT_PERFECT_SQUARE,
                _ => EXIT_OUT_OF_DOMAIN,
            };
            match cli.format {
                Format::Text => eprintln!("error: {err}"),
                Format::Json => println!(
                    "{}",
                    json!({
                        "command": command_name,
                        "error": { "kind": error_kind(&err), "message": err.to_string() },
                    })
                ),
            }
            ExitCode::from(exit)
        }
    }
}

fn error_kind(err: &Error) -> &'static str {
    match err {
        Error::PerfectSquare(_) => "perfect_square",
        Error::OutOfDomain(_) => "out_of_domain",
        Error::NotSolvable { .. } => "not_solvable",
        Error::BadUnit { .. } => "bad_unit",
        Error::InvalidParams { .. } => "invalid_params",
        Error::UnsupportedRhs(_) => "unsupported_rhs",
    }
}

fn cmd_cf(d: &BigUint) -> Result<Report, Error> {
    let expansion = cf::cf_expand_sqrt(d)?;
    let record = json!({
        "command": "cf",
        "inputs": { "d": d.to_string() },
        "result": {
            "a0": expansion.a0().to_string(),
            "period": expansion.period().iter().map(|t| t.to_string()).collect::<Vec<_>>(),
            "m": expansion.period_len(),
        },
    });
    let text = format!("{expansion} period={}", expansion.period_len());
    Ok(Report { record, text, exit: 0 })
}

fn cmd_solve(d: &BigUint, n: i64, count: u64, general: bool) -> Result<Report, Error> {
    let family = if general { None } else { FamilyParam::detect(d) };
    let (verdict, theorem, note) = match &family {
        Some(param) => family_verdict(param, n)?,
        None => (solve(d, n)?, None, None),
    };
    let inputs = json!({
        "count": count,
        "d": d.to_string(),
        "n": n,
        "path": if family.is_some() { "family" } else { "general" },
    });
    render_verdict("solve", inputs, d, n, count, verdict, theorem, note, family.as_ref())
}

fn cmd_family(a: &BigUint, n: i64, count: u64) -> Result<Report, Error> {
    let param = FamilyParam::new(a.clone())?;
    let (verdict, theorem, note) = family_verdict(&param, n)?;
    let d = param.d().clone();
    let inputs = json!({
        "a": a.to_string(),
        "count": count,
        "n": n,
    });
    render_verdict("family", inputs, &d, n, count, verdict, theorem, note, Some(&param))
}

/// Verdict plus theorem attribution for a family parameter.
fn family_verdict(
    param: &FamilyParam,
    n: i64,
) -> Result<(Verdict, Option<&'static str>, Option<&'static str>), Error> {
    let outside = *param.a() <= BigUint::from(2u32);
    match n {
        1 => Ok((
            Verdict::Solvable { fundamental: family_fundamental(param), via: None },
            Some("Theorems 6 and 7"),
            None,
        )),
        4 => Ok((
            Verdict::Solvable { fundamental: family_four_fundamental(param), via: None },
            Some("Theorems 9 and 10"),
            None,
        )),
        -1 => Ok((family_neg_one(param), Some("Theorem 8"), None)),
        -4 if !outside => Ok((family_neg_four(param), Some("Theorem 11"), None)),
        -4 => Ok((
            family_neg_four(param),
            None,
            Some("outside Theorem 11; settled by the general solver"),
        )),
        other => Err(Error::UnsupportedRhs(other)),
    }
}

#[allow(clippy::too_many_arguments)]
fn render_verdict(
    command: &str,
    inputs: Value,
    d: &BigUint,
    n: i64,
    count: u64,
    verdict: Verdict,
    theorem: Option<&'static str>,
    note: Option<&'static str>,
    family: Option<&FamilyParam>,
) -> Result<Report, Error> {
    let mut result = serde_json::Map::new();
    if let Some(param) = family {
        result.insert("family_a".into(), Value::String(param.a().to_string()));
    }
    if let Some(t) = theorem {
        result.insert("theorem".into(), Value::String(t.into()));
    }
    if let Some(t) = note {
        result.insert("note".into(), Value::String(t.into()));
    }

    let mut text = String::new();
    let exit;
    match verdict {
        Verdict::Solvable { fundamental, via } => {
            exit = 0;
            let solutions = enumerate(family, d, n, count)?;
            let rendered: Vec<String> = solutions.iter().map(|s| s.to_string()).collect();
            writeln!(text, "{}", rendered.join(",")).unwrap();

            result.insert("verdict".into(), Value::String("solvable".into()));
            result.insert(
                "fundamental".into(),
                json!({ "x": fundamental.x.to_string(), "y": fundamental.y.to_string() }),
            );
            if let Some(via) = via {
                result.insert("via".into(), Value::String(reason_code(&via).into()));
            }
            result.insert(
                "solutions".into(),
                Value::Array(
                    solutions
                        .iter()
                        .zip(1u64..)
                        .map(|(s, i)| {
                            json!({ "index": i, "x": s.x.to_string(), "y": s.y.to_string() })
                        })
                        .collect(),
                ),
            );
        }
        Verdict::Unsolvable { reason } => {
            exit = EXIT_UNSOLVABLE;
            writeln!(
                text,
                "unsolvable ({}): x^2 - {d}y^2 = {n} has no positive integer solutions",
                reason_text(&reason)
            )
            .unwrap();
            result.insert("verdict".into(), Value::String("unsolvable".into()));
            result.insert("reason".into(), Value::String(reason_code(&reason).into()));
            if let Reason::SearchExhausted { y_max } = reason {
                result.insert("search_bound".into(), json!(y_max));
            }
        }
    }

    if let Some(t) = theorem {
        writeln!(text, "theorem: {t}").unwrap();
    }
    if let Some(t) = note {
        writeln!(text, "note: {t}").unwrap();
    }
    let text = text.trim_end().to_string();

    let record = json!({
        "command": command,
        "inputs": inputs,
        "result": Value::Object(result),
    });
    Ok(Report { record, text, exit })
}

/// First `count` solutions, through the closed forms where they exist.
fn enumerate(
    family: Option<&FamilyParam>,
    d: &BigUint,
    n: i64,
    count: u64,
) -> Result<Vec<PellSolution>, Error> {
    (1..=count)
        .map(|index| match (family, n) {
            (Some(param), 1) => family_nth_unit(param, index),
            (Some(param), 4) => family_nth_four(param, index),
            _ => iterate_solutions(d, n, index),
        })
        .collect()
}

fn reason_code(reason: &Reason) -> &'static str {
    match reason {
        Reason::EvenPeriod => "even_period",
        Reason::ModularObstruction => "modular_obstruction",
        Reason::SearchExhausted { .. } => "search_exhausted",
        Reason::Reduction => "reduction",
    }
}

fn reason_text(reason: &Reason) -> String {
    match reason {
        Reason::EvenPeriod => "even period".into(),
        Reason::ModularObstruction => "modular obstruction".into(),
        Reason::SearchExhausted { y_max } => format!("search exhausted at y <= {y_max}"),
        Reason::Reduction => "reduction".into(),
    }
}
