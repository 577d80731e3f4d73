//! Command-line front end for `tropical-groups`: file parsing, command
//! dispatch and JSON reports.

pub mod commands;
pub mod format;
pub mod report;

use std::fmt;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

pub use commands::run;
pub use report::{InputDigest, Report};

/// Default cap on the size of matrices whose symmetry group is enumerated.
pub const DEFAULT_MAX_N: usize = tropical_groups::groups::DEFAULT_MAX_N;

#[derive(Debug, Parser)]
#[command(
    name = "tropgroups",
    version,
    about = "Exact max-plus matrix analysis and maximal subgroups of idempotents"
)]
pub struct Cli {
    /// Print the report as JSON.
    #[arg(long, global = true)]
    pub json: bool,
    /// Seed for extra randomized self-checks (none run without a seed).
    #[arg(long, global = true, value_name = "N")]
    pub seed: Option<u64>,
    /// Largest size for which symmetry groups are enumerated.
    #[arg(long, global = true, value_name = "N", env = "TROPGROUPS_MAX_N", default_value_t = DEFAULT_MAX_N)]
    pub max_n: usize,
    #[command(subcommand)]
    pub command: Command,
}

/// Input files are read from the given path, or from standard input for `-`.
#[derive(Debug, Subcommand)]
pub enum Command {
    /// Maximum cycle mean (the unique eigenvalue).
    Mcm { a: PathBuf },
    /// A⁺ = A ⊕ A² ⊕ ⋯ (requires maximum cycle mean ≤ 0).
    Plus { a: PathBuf },
    /// A* = I ⊕ A⁺ (requires maximum cycle mean ≤ 0).
    Star { a: PathBuf },
    /// Check idempotency and report rank and critical classes.
    Idem { e: PathBuf },
    /// Spectral analysis: eigenvalue, critical classes, eigenspace basis.
    Analyze { a: PathBuf },
    /// Zero-diagonal normalization of an idempotent.
    Normalize { e: PathBuf },
    /// Reduction of an idempotent to full rank, optionally mapping an H-class element.
    Reduce { e: PathBuf, a: Option<PathBuf> },
    /// Embed a full-rank k×k idempotent into n×n.
    Embed { f: PathBuf, n: usize },
    /// Zero-diagonal representative of the same rank.
    Representative { e: PathBuf },
    /// Maximal subgroup H_E ≅ ℝ × Σ.
    Group { e: PathBuf },
    /// Common eigenvector of the maximal subgroup.
    Eigenvector { e: PathBuf },
    /// Factor A ∈ H_E as a monomial unit commuting with E.
    Factor { e: PathBuf, a: PathBuf },
    /// Classical affine form of the action of A ∈ H_E on the column space.
    Affine { e: PathBuf, a: PathBuf },
    /// Classify a point as interior, boundary or exterior to the column space.
    Classify { e: PathBuf, y: PathBuf },
    /// Decide a Green's relation between two matrices.
    Green {
        a: PathBuf,
        b: PathBuf,
        #[arg(long, value_enum, default_value_t = Relation::H)]
        rel: Relation,
    },
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Mcm { .. } => "mcm",
            Command::Plus { .. } => "plus",
            Command::Star { .. } => "star",
            Command::Idem { .. } => "idem",
            Command::Analyze { .. } => "analyze",
            Command::Normalize { .. } => "normalize",
            Command::Reduce { .. } => "reduce",
            Command::Embed { .. } => "embed",
            Command::Representative { .. } => "representative",
            Command::Group { .. } => "group",
            Command::Eigenvector { .. } => "eigenvector",
            Command::Factor { .. } => "factor",
            Command::Affine { .. } => "affine",
            Command::Classify { .. } => "classify",
            Command::Green { .. } => "green",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Relation {
    #[value(name = "leqR")]
    LeqR,
    #[value(name = "leqL")]
    LeqL,
    #[value(name = "R")]
    R,
    #[value(name = "L")]
    L,
    #[value(name = "H")]
    H,
}

/// Failure of a command, carrying its exit code.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CliError {
    /// Unreadable or malformed input, or mismatched shapes (exit 2).
    Input(String),
    /// The input is well formed but violates a mathematical precondition (exit 1).
    Domain(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Domain(_) => 1,
            CliError::Input(_) => 2,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Input(m) | CliError::Domain(m) => f.write_str(m),
        }
    }
}

impl std::error::Error for CliError {}

impl From<tropical_groups::Error> for CliError {
    fn from(e: tropical_groups::Error) -> Self {
        if e.is_shape_error() {
            CliError::Input(e.to_string())
        } else {
            CliError::Domain(e.to_string())
        }
    }
}
