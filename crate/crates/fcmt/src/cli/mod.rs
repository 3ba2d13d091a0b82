//! The `fcmt` command line. Every subcommand produces a [`Report`]; JSON is
//! the default output and `--pretty` renders the same report as indented
//! text.

mod commands;
mod report;

use std::ffi::OsString;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};

pub use report::Report;

use crate::error::Error;

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFICATION_FAILED: i32 = 1;
pub const EXIT_INPUT_ERROR: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "fcmt", version, about = "Monoids of MCM modules over rings of finite CM type")]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalArgs,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct GlobalArgs {
    /// JSON output (the default).
    #[arg(long, global = true, conflicts_with = "pretty")]
    pub json: bool,
    /// Indented text rendering of the JSON report.
    #[arg(long, global = true)]
    pub pretty: bool,
    /// Seed for the pseudorandom idempotent search.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// The rational number ξ² for the A2 and D2 families.
    #[arg(long = "xi-square", global = true, default_value = "2", allow_hyphen_values = true)]
    pub xi_square: String,
    /// Coefficients a,b,c of the cubic X³ + aX² + bX + c for D3.
    #[arg(long, global = true, default_value = "0,0,-2", allow_hyphen_values = true)]
    pub cubic: String,
    /// Adds wall-clock time to the report (output is then not reproducible).
    #[arg(long, global = true)]
    pub timing: bool,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Atoms of ker(A) ∩ ℕᵗ ⊕ ℕᵘ.
    Hilbert(MonoidArgs),
    /// Divisor class group with its hypothesis checks.
    Classgroup(ClassgroupArgs),
    /// Whether each unit vector is a greatest lower bound of monoid elements.
    DivisorTheory(DivisorTheoryArgs),
    /// Block monoid of a list of classes.
    Blocks(BlocksArgs),
    /// Set of lengths of one element.
    Lengths(LengthsArgs),
    /// Elasticity of a monoid.
    Elasticity(MonoidArgs),
    /// Everything about the MCM monoid of one ring.
    Ring(RingArgs),
    /// Rank tables and rank vectors of cokernels at the minimal primes.
    Ranks(RanksArgs),
    /// Checks φψ = ψφ = f·I for matrix factorizations.
    VerifyMf(VerifyMfArgs),
    /// Fitting ideals and ideal membership.
    Fitting(FittingArgs),
    /// Ranks from additivity along AR sequences.
    ArSolve(ArSolveArgs),
    /// Decomposes a pair module over ℚ → ℚ(∛2).
    DecomposePair(DecomposePairArgs),
}

#[derive(Debug, Args)]
pub struct GlueArgs {
    /// Number of identified primes.
    #[arg(long)]
    pub m: Option<usize>,
    /// Which pair is glued when there are three primes and m = 1.
    #[arg(long)]
    pub case: Option<u8>,
    /// Explicit gluing such as 1=2 or 1=2=3; repeatable.
    #[arg(long)]
    pub glue: Vec<String>,
}

#[derive(Debug, Args)]
pub struct MonoidArgs {
    /// Equation matrix, rows separated by `;`.
    #[arg(short = 'e', long, allow_hyphen_values = true)]
    pub equations: Option<String>,
    /// Number of constrained coordinates (needed when there are no equations).
    #[arg(short = 't', long)]
    pub constrained: Option<usize>,
    /// Number of free coordinates.
    #[arg(short = 'u', long = "free", default_value_t = 0)]
    pub free: usize,
    /// Presentation file `{"equations": [[...]], "free_rank": u}`.
    #[arg(short = 'f', long)]
    pub file: Option<PathBuf>,
    /// A catalog ring instead of an explicit presentation.
    #[arg(long)]
    pub ring: Option<String>,
    #[command(flatten)]
    pub glue: GlueArgs,
}

#[derive(Debug, Args)]
pub struct ClassgroupArgs {
    #[command(flatten)]
    pub monoid: MonoidArgs,
    #[arg(long, default_value_t = crate::lattice::DEFAULT_ATOM_BUDGET)]
    pub budget: usize,
    /// Report the group even when its hypotheses fail.
    #[arg(long)]
    pub allow_formal: bool,
}

#[derive(Debug, Args)]
pub struct DivisorTheoryArgs {
    #[command(flatten)]
    pub monoid: MonoidArgs,
    #[arg(long, default_value_t = crate::lattice::DEFAULT_ATOM_BUDGET)]
    pub budget: usize,
}

#[derive(Debug, Args)]
pub struct BlocksArgs {
    /// Classes, one per `;`-separated row.
    #[arg(long, allow_hyphen_values = true)]
    pub classes: Option<String>,
    /// Torsion moduli, comma separated; residues are the last entries of each class.
    #[arg(long)]
    pub torsion: Option<String>,
    /// BlockSpec file `{"rank": r, "classes": [[...]]}`.
    #[arg(short = 'f', long)]
    pub file: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct LengthsArgs {
    #[command(flatten)]
    pub monoid: MonoidArgs,
    /// The element, as whitespace separated coordinates.
    #[arg(long)]
    pub element: String,
    /// List every factorization.
    #[arg(long)]
    pub factorizations: bool,
    #[arg(long, default_value_t = crate::factor::DEFAULT_FACTORIZATION_CAP)]
    pub cap: usize,
}

#[derive(Debug, Args)]
pub struct RingArgs {
    /// Ring type such as A5, D6, E7, A2:3, D2:2, D3 or D6'.
    pub ring: String,
    #[command(flatten)]
    pub glue: GlueArgs,
}

#[derive(Debug, Args)]
pub struct FamilyArgs {
    /// a2, d2, cyclic or d3.
    #[arg(long)]
    pub family: Option<String>,
    #[arg(long, default_value_t = 1)]
    pub n: u32,
    /// Only members with this index j.
    #[arg(long)]
    pub j: Option<u32>,
    /// Only members with this index i.
    #[arg(long)]
    pub i: Option<u32>,
    /// Only the cyclic matrix with this letter.
    #[arg(long)]
    pub letter: Option<String>,
    /// Every member (the default when no index is given).
    #[arg(long)]
    pub all: bool,
    /// Coefficient field for explicit matrices: quadratic, cubic or splitting.
    #[arg(long)]
    pub field: Option<String>,
}

#[derive(Debug, Args)]
pub struct RanksArgs {
    #[command(flatten)]
    pub family: FamilyArgs,
    /// Ring type whose branches are used.
    #[arg(long)]
    pub ring: Option<String>,
    /// JSON array of arrays of polynomial strings.
    #[arg(long)]
    pub matrix: Option<String>,
}

#[derive(Debug, Args)]
pub struct VerifyMfArgs {
    #[command(flatten)]
    pub family: FamilyArgs,
    #[arg(long)]
    pub phi: Option<String>,
    #[arg(long)]
    pub psi: Option<String>,
    /// The polynomial f.
    #[arg(long, allow_hyphen_values = true)]
    pub f: Option<String>,
}

#[derive(Debug, Args)]
pub struct FittingArgs {
    #[command(flatten)]
    pub family: FamilyArgs,
    /// JSON array of arrays of polynomial strings.
    #[arg(long)]
    pub matrix: Option<String>,
    /// Use the second matrix of each pair.
    #[arg(long)]
    pub psi: bool,
    /// Size of the minors; all sizes when omitted.
    #[arg(long)]
    pub minors: Option<usize>,
    /// Generators of an ideal, separated by `;`, instead of a matrix.
    #[arg(long, allow_hyphen_values = true)]
    pub ideal: Option<String>,
    /// Expected generators, separated by `;`; checked with ideal equality.
    #[arg(long, allow_hyphen_values = true)]
    pub expect: Option<String>,
    /// A polynomial whose membership is tested.
    #[arg(long, allow_hyphen_values = true)]
    pub contains: Option<String>,
}

#[derive(Debug, Args)]
pub struct ArSolveArgs {
    /// System file `{"num_primes", "sequences", "known"}`.
    #[arg(short = 'f', long, conflicts_with = "d6")]
    pub file: Option<PathBuf>,
    /// The built-in D6 system, compared with its printed solution.
    #[arg(long)]
    pub d6: bool,
}

#[derive(Debug, Args)]
pub struct DecomposePairArgs {
    /// rank4 or rank3.
    #[arg(long, default_value = "rank4")]
    pub module: String,
    /// paper or tau2.
    #[arg(long, default_value = "paper")]
    pub convention: String,
}

/// What the process should print and return.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

impl Cli {
    pub fn name(&self) -> &'static str {
        match self.command {
            Command::Hilbert(_) => "hilbert",
            Command::Classgroup(_) => "classgroup",
            Command::DivisorTheory(_) => "divisor-theory",
            Command::Blocks(_) => "blocks",
            Command::Lengths(_) => "lengths",
            Command::Elasticity(_) => "elasticity",
            Command::Ring(_) => "ring",
            Command::Ranks(_) => "ranks",
            Command::VerifyMf(_) => "verify-mf",
            Command::Fitting(_) => "fitting",
            Command::ArSolve(_) => "ar-solve",
            Command::DecomposePair(_) => "decompose-pair",
        }
    }
}

pub fn execute(cli: &Cli) -> crate::Result<Report> {
    let start = Instant::now();
    let mut report = commands::dispatch(cli)?;
    if cli.global.timing {
        report.timing_ms = Some(start.elapsed().as_secs_f64() * 1000.0);
    }
    Ok(report)
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            let code = if e.use_stderr() { EXIT_INPUT_ERROR } else { EXIT_OK };
            return if e.use_stderr() {
                Outcome { stdout: String::new(), stderr: text, code }
            } else {
                Outcome { stdout: text, stderr: String::new(), code }
            };
        }
    };
    match execute(&cli) {
        Ok(report) => {
            let mut stdout = if cli.global.pretty { report.to_pretty() } else { report.to_json() };
            if !stdout.ends_with('\n') {
                stdout.push('\n');
            }
            let code = if report.passed() { EXIT_OK } else { EXIT_VERIFICATION_FAILED };
            Outcome { stdout, stderr: String::new(), code }
        }
        Err(e) => Outcome {
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
            code: exit_code(&e),
        },
    }
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::LimitExceeded(_) => EXIT_VERIFICATION_FAILED,
        _ => EXIT_INPUT_ERROR,
    }
}
