//! `skewflats`: generate, verify and analyze families of mutually skew flats.
//!
//! Exit codes: 0 on success, 1 when a check fails or a precondition is not
//! met, 2 on usage errors and unreadable or malformed input.

mod report;

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde::de::DeserializeOwned;
use serde::Serialize;
use skewflats::construct::{default_t_values, ConstructError};
use skewflats::ratlin::{QVec, Rat};
use skewflats::verify::{LineFamily, VerifyError};
use skewflats::{gen_25, gen_fano_13, gen_planes_r5, GenSpec};

#[derive(Parser)]
#[command(name = "skewflats", version, about = "Exact checks for designs of mutually skew flats")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Seven skew lines in Q^4 realizing the Fano plane.
    #[command(name = "gen-fano13")]
    GenFano13(GenArgs),
    /// Seven 2-planes through the origin of Q^5 with Fano block sums.
    #[command(name = "gen-planes-r5")]
    GenPlanesR5(GenArgs),
    /// Seven mutually skew 2-flats in Q^6 whose pair hulls all pass through the origin.
    #[command(name = "gen-25")]
    Gen25 {
        #[command(flatten)]
        gen: GenArgs,
        /// Seven comma-separated rationals used as lift heights.
        #[arg(long, value_delimiter = ',', value_parser = parse_rat)]
        t_values: Option<Vec<Rat>>,
    },
    /// Pairwise skewness and the design property.
    Verify(InputArgs),
    /// Common point of all pair hulls.
    Central(InputArgs),
    /// Line lying in every pair hull of a central arrangement of lines.
    Transversal(InputArgs),
    /// Full pipeline: design, centrality, containment in a 3-flat, projection.
    Theorem(InputArgs),
    /// First ordinary line of a set of projective points.
    #[command(name = "ordinary-line")]
    OrdinaryLine(InputArgs),
}

#[derive(Args)]
struct GenArgs {
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 10)]
    coeff_bound: u32,
    #[arg(long, default_value_t = 1000)]
    max_retries: usize,
    /// Output file; stdout when omitted.
    #[arg(long)]
    out: Option<PathBuf>,
}

impl GenArgs {
    fn spec(&self) -> GenSpec {
        GenSpec {
            seed: self.seed,
            coeff_bound: self.coeff_bound,
            max_retries: self.max_retries,
        }
    }
}

#[derive(Args)]
struct InputArgs {
    /// JSON input file.
    input: PathBuf,
    /// Machine-readable output.
    #[arg(long)]
    json: bool,
}

fn parse_rat(s: &str) -> Result<Rat, String> {
    s.trim().parse().map_err(|e| format!("{e}"))
}

/// A failure with its exit code.
pub struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Failure { code: 2, message: message.into() }
    }

    fn check(message: impl Into<String>) -> Self {
        Failure { code: 1, message: message.into() }
    }
}

impl From<VerifyError> for Failure {
    fn from(e: VerifyError) -> Self {
        Failure::check(format!("precondition failed: {e}"))
    }
}

impl From<ConstructError> for Failure {
    fn from(e: ConstructError) -> Self {
        match e {
            ConstructError::InvalidSpec(_) | ConstructError::BadTValues => Failure::usage(e.to_string()),
            _ => Failure::check(format!("construction failed: {e}")),
        }
    }
}

fn read_json<T: DeserializeOwned>(path: &Path) -> Result<T, Failure> {
    let text = fs::read_to_string(path).map_err(|e| Failure::usage(format!("cannot read {}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| Failure::usage(format!("malformed JSON in {}: {e}", path.display())))
}

pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("report types always serialize");
    s.push('\n');
    s
}

fn write_out(out: Option<&Path>, text: &str) -> Result<(), Failure> {
    match out {
        Some(p) => fs::write(p, text).map_err(|e| Failure::usage(format!("cannot write {}: {e}", p.display()))),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout.write_all(text.as_bytes()).map_err(|e| Failure::usage(e.to_string()))
        }
    }
}

fn run(cli: Cli) -> Result<bool, Failure> {
    match cli.command {
        Command::GenFano13(g) => {
            let fam = gen_fano_13(&g.spec())?;
            write_out(g.out.as_deref(), &to_json(&fam))?;
            Ok(true)
        }
        Command::GenPlanesR5(g) => {
            let fam = LineFamily::new(gen_planes_r5(&g.spec())?)?;
            write_out(g.out.as_deref(), &to_json(&fam))?;
            Ok(true)
        }
        Command::Gen25 { gen, t_values } => {
            let t = t_values.unwrap_or_else(default_t_values);
            let fam = gen_25(&gen.spec(), &t)?;
            write_out(gen.out.as_deref(), &to_json(&fam))?;
            Ok(true)
        }
        Command::Verify(a) => report::verify(&read_json(&a.input)?, a.json),
        Command::Central(a) => report::central(&read_json(&a.input)?, a.json),
        Command::Transversal(a) => report::transversal(&read_json(&a.input)?, a.json),
        Command::Theorem(a) => report::theorem(&read_json(&a.input)?, a.json),
        Command::OrdinaryLine(a) => {
            let points: Vec<QVec> = read_json(&a.input)?;
            report::ordinary_line(&points, a.json)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
