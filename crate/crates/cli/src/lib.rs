//! Batch command-line surface over the workspace crates. Every command emits
//! one JSON document; rationals are "num/den" strings.
//!
//! Exit codes: 0 success, 1 domain error, 2 bad input.

pub mod commands;
pub mod data;
pub mod params;

use clap::{Args, Parser, Subcommand};
use serde::{Deserialize, Serialize};
use std::ffi::OsString;

#[derive(Debug)]
pub enum CliError {
    /// Unreadable or ill-formed input (exit 2).
    Input(String),
    /// A well-formed request the mathematics rejects (exit 1).
    Domain(String),
}

impl CliError {
    pub fn code(&self) -> i32 {
        match self {
            CliError::Input(_) => 2,
            CliError::Domain(_) => 1,
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Input(m) => write!(f, "bad input: {m}"),
            CliError::Domain(m) => write!(f, "error: {m}"),
        }
    }
}

impl From<masses::MassError> for CliError {
    fn from(e: masses::MassError) -> Self {
        use masses::MassError::*;
        match e {
            WrongFamily { .. } | Precondition(_) | MissingData(_) => CliError::Input(e.to_string()),
            _ => CliError::Domain(e.to_string()),
        }
    }
}

impl From<heckemod::HeckeError> for CliError {
    fn from(e: heckemod::HeckeError) -> Self {
        use heckemod::HeckeError::*;
        match e {
            Schema(_) | Invalid(_) => CliError::Input(e.to_string()),
            _ => CliError::Domain(e.to_string()),
        }
    }
}

impl From<brandt::BrandtError> for CliError {
    fn from(e: brandt::BrandtError) -> Self {
        match e {
            brandt::BrandtError::Input(_) => CliError::Input(e.to_string()),
            brandt::BrandtError::Hecke(h) => h.into(),
            brandt::BrandtError::Mass(m) => m.into(),
            _ => CliError::Domain(e.to_string()),
        }
    }
}

impl From<localcong::LocalError> for CliError {
    fn from(e: localcong::LocalError) -> Self {
        match e {
            localcong::LocalError::Precondition(_) | localcong::LocalError::Context(_) => CliError::Input(e.to_string()),
            _ => CliError::Domain(e.to_string()),
        }
    }
}

impl From<symfunc::SymError> for CliError {
    fn from(e: symfunc::SymError) -> Self {
        match e {
            symfunc::SymError::NotPartition(_) | symfunc::SymError::Bounds(_) | symfunc::SymError::BadHalf(_) => CliError::Input(e.to_string()),
            _ => CliError::Domain(e.to_string()),
        }
    }
}

impl From<exactnum::NumError> for CliError {
    fn from(e: exactnum::NumError) -> Self {
        CliError::Domain(e.to_string())
    }
}

impl From<serde_json::Error> for CliError {
    fn from(e: serde_json::Error) -> Self {
        CliError::Input(e.to_string())
    }
}

#[derive(Parser, Debug)]
#[command(name = "hecke", version, about = "Masses, Hecke eigensystems and Eisenstein congruences")]
pub struct Cli {
    /// Write the JSON result here instead of stdout.
    #[arg(long, global = true)]
    pub output: Option<String>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Mass of a compact-at-infinity group (any family).
    Mass(MassArgs),
    /// Congruence primes of a mass, with depths and the non-abelian filter.
    Primes(MassArgs),
    /// GL(n) Satake data: degree of ϖ^λ, its generator expansion, values.
    Satake(SatakeArgs),
    /// Evaluate a local Eisenstein-congruence predicate from JSON parameters.
    Check(InputArg),
    /// Apply lifts to seeded congruent inputs and re-check the outputs.
    Lift(LiftArgs),
    /// Quaternion classes, Brandt matrices and congruences for (D, M).
    Brandt(BrandtArgs),
    /// Eisenstein-congruent eigensystems of imported Hecke data.
    Detect(DetectArgs),
    /// Untwist an orbit-twisted function with values in ℤ[ζ_{p^r}].
    Untwist(InputArg),
    /// Congruence module of a finite abelian group ⊕ ℤ/n_i.
    Congmod(CongmodArgs),
    /// Print a bundled dataset (or list them).
    Data { name: Option<String> },
    /// Run the jobs of a JSON manifest in parallel.
    Run(InputArg),
}

#[derive(Args, Debug, Clone, Default)]
pub struct MassArgs {
    /// JSON MassSpec file ("-" for stdin); flags below override its fields.
    #[arg(long)]
    pub spec: Option<String>,
    #[arg(long)]
    pub family: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub disc: Option<i64>,
    #[arg(long)]
    pub n: Option<u32>,
    #[arg(long)]
    pub ell: Option<u64>,
    #[arg(long)]
    pub base_degree: Option<u32>,
    /// Comma-separated residue sizes.
    #[arg(long, value_delimiter = ',')]
    pub ramified_a: Option<Vec<u64>>,
    #[arg(long, value_delimiter = ',')]
    pub s1: Option<Vec<u64>>,
    #[arg(long, value_delimiter = ',')]
    pub s2: Option<Vec<u64>>,
    #[arg(long, value_delimiter = ',')]
    pub s3: Option<Vec<u64>>,
    /// Level places q:r, comma-separated.
    #[arg(long, value_delimiter = ',')]
    pub n1: Option<Vec<String>>,
    #[arg(long, value_delimiter = ',')]
    pub n2: Option<Vec<String>>,
    #[arg(long)]
    pub h1: Option<u64>,
    #[arg(long)]
    pub e1: Option<u64>,
}

#[derive(Args, Debug, Clone)]
pub struct SatakeArgs {
    /// Partition, comma-separated parts.
    #[arg(long, value_delimiter = ',')]
    pub lambda: Vec<u32>,
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub q: u64,
    /// Characteristic for evaluating at a Satake parameter.
    #[arg(long)]
    pub p: Option<u64>,
    /// Satake parameter entries as integers mod p.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    pub alpha: Option<Vec<i64>>,
}

#[derive(Args, Debug, Clone)]
pub struct InputArg {
    /// JSON file, or "-" for stdin.
    pub input: String,
}

#[derive(Args, Debug, Clone)]
pub struct LiftArgs {
    /// Lift name (e.g. sym-gl, yoshida); all lifts when omitted.
    #[arg(long)]
    pub kind: Option<String>,
    #[arg(long, default_value_t = 100)]
    pub samples: usize,
    #[arg(long, default_value_t = 1)]
    pub seed: u64,
}

#[derive(Args, Debug, Clone)]
pub struct BrandtArgs {
    #[arg(long)]
    pub disc: u64,
    #[arg(long, default_value_t = 1)]
    pub level: u64,
    /// Brandt matrices T_q for primes q ≤ bound, q ∤ DM.
    #[arg(long, default_value_t = 20)]
    pub bound: u64,
}

#[derive(Args, Debug, Clone)]
pub struct DetectArgs {
    /// Hecke JSON file ("-" for stdin).
    #[arg(long, conflicts_with = "dataset")]
    pub input: Option<String>,
    /// A bundled dataset name.
    #[arg(long)]
    pub dataset: Option<String>,
    /// The prime p; defaults to every prime of the mass numerator.
    #[arg(long)]
    pub p: Option<u64>,
    /// For eigenvalue tables: the group family (U2 or U3).
    #[arg(long)]
    pub family: Option<String>,
    /// For eigenvalue tables: generator a,b,half of a prime ideal of the ring.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    pub prime: Option<Vec<i64>>,
}

#[derive(Args, Debug, Clone)]
pub struct CongmodArgs {
    /// Orders n_i of the cyclic factors.
    #[arg(required = true)]
    pub orders: Vec<u64>,
}

/// One manifest entry: a command line without the program name, and an
/// optional output path.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct JobConfig {
    pub args: Vec<String>,
    #[serde(default)]
    pub output: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct JobOutcome {
    pub args: Vec<String>,
    pub exit: i32,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub result: Option<serde_json::Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

/// Parses and executes, returning the JSON result.
pub fn execute<I, T>(argv: I) -> Result<(serde_json::Value, Option<String>), CliError>
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = Cli::try_parse_from(argv).map_err(|e| CliError::Input(e.to_string()))?;
    let v = commands::dispatch(&cli.command)?;
    Ok((v, cli.output))
}

pub fn render(v: &serde_json::Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("JSON values serialize");
    s.push('\n');
    s
}

/// Entry point: prints the result (or an error on stderr) and returns the
/// exit code.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let argv: Vec<OsString> = argv.into_iter().map(Into::into).collect();
    // help and version are successes, not bad input
    if let Err(e) = Cli::try_parse_from(&argv) {
        if !e.use_stderr() {
            print!("{e}");
            return 0;
        }
    }
    match execute(argv) {
        Ok((v, out)) => {
            let text = render(&v);
            match out {
                Some(path) => {
                    if let Err(e) = std::fs::write(&path, text) {
                        eprintln!("bad input: {path}: {e}");
                        return 2;
                    }
                }
                None => print!("{text}"),
            }
            0
        }
        Err(e) => {
            eprintln!("{e}");
            e.code()
        }
    }
}
