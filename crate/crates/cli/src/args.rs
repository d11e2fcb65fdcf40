use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use symdef_core::sdefect::Limits;
use symdef_core::verify::Sweep;

use crate::range::IntList;

pub const DEFAULT_SEED: u64 = 0x5eed;

#[derive(Debug, Parser)]
#[command(
    name = "symdef",
    version,
    about = "Symbolic powers, symbolic defects and Waldschmidt constants of cover ideals of graphs"
)]
pub struct Cli {
    #[command(flatten)]
    pub global: Global,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct Global {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,

    /// Seed for randomized rank checks.
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    pub seed: u64,

    /// Cap on the number of generators of any intermediate ideal.
    #[arg(long, global = true, env = "SYMDEF_MAX_GENS", default_value_t = Limits::DEFAULT_MAX_GENS)]
    pub max_gens: usize,

    /// Largest power accepted.
    #[arg(long, global = true, default_value_t = Limits::DEFAULT_MAX_M)]
    pub max_m: u32,

    /// Report `timing_ms` as null so output is byte-for-byte reproducible.
    #[arg(long, global = true)]
    pub no_timing: bool,
}

impl Global {
    pub fn limits(&self) -> Limits {
        Limits {
            max_gens: self.max_gens,
            max_m: self.max_m,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Tsv,
    Pretty,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MethodArg {
    Brute,
    Recursive,
    Cycle,
    All,
}

/// Exactly one of `--graph` and `--family`.
#[derive(Debug, Clone, Args)]
#[group(required = true, multiple = false)]
pub struct GraphSource {
    /// Graph JSON file: {"n": 4, "edges": [[1, 2], [2, 3]]}, 1-based.
    #[arg(long, value_name = "FILE")]
    pub graph: Option<PathBuf>,

    /// Family shorthand: K<n>, C<n>, P<n>, T<n> (triangle with a tail) or F<k>.
    #[arg(long, value_name = "FAMILY")]
    pub family: Option<String>,
}

/// At most one of `--graph` and `--family`.
#[derive(Debug, Clone, Args)]
#[group(required = false, multiple = false)]
pub struct OptionalGraphSource {
    #[arg(long, value_name = "FILE")]
    pub graph: Option<PathBuf>,

    #[arg(long, value_name = "FAMILY")]
    pub family: Option<String>,
}

impl OptionalGraphSource {
    pub fn get(&self) -> Option<GraphSource> {
        (self.graph.is_some() || self.family.is_some()).then(|| GraphSource {
            graph: self.graph.clone(),
            family: self.family.clone(),
        })
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Minimal generators, mu and alpha of the cover ideal or one of its symbolic powers.
    CoverIdeal {
        #[command(flatten)]
        source: GraphSource,
        /// Symbolic power to list.
        #[arg(long, default_value_t = 1)]
        m: u32,
    },

    /// Symbolic defect over a range of powers.
    Sdefect {
        #[command(flatten)]
        source: GraphSource,
        #[arg(long)]
        m: IntList,
        #[arg(long, value_enum, default_value_t = MethodArg::Brute)]
        method: MethodArg,
        /// Also list the witnesses (generators of the symbolic power outside the ordinary one).
        #[arg(long)]
        witnesses: bool,
    },

    /// Waldschmidt constant and resurgence lower bound.
    Waldschmidt {
        #[command(flatten)]
        source: GraphSource,
    },

    /// Quasi-polynomial fit of the symbolic defect sequence, or of `--values`.
    Fit {
        #[command(flatten)]
        source: OptionalGraphSource,
        #[arg(long)]
        m: Option<IntList>,
        #[arg(long, default_value_t = 2)]
        period: usize,
        /// Fit this comma separated sequence instead of a graph's defects.
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        values: Option<Vec<i64>>,
        /// Index of the first entry of `--values`.
        #[arg(long, default_value_t = 1, allow_hyphen_values = true)]
        start: i64,
    },

    /// Structural classification of every minimal 2-cover, checked against the square.
    Classify2 {
        #[command(flatten)]
        source: GraphSource,
    },

    /// Sufficient conditions and exhaustive search for the indecomposability property.
    Indecomposability {
        #[command(flatten)]
        source: GraphSource,
        #[arg(long, default_value_t = 1)]
        k_max: u32,
        #[arg(long, default_value_t = 2)]
        s_max: u32,
        /// Only products with 2k+s at most this.
        #[arg(long)]
        max_total: Option<u32>,
        /// Only use generators of minimal degree as factors.
        #[arg(long)]
        alpha_only: bool,
    },

    /// Polynomial degree of the symbolic defect from the quotient by one variable.
    Degree {
        #[command(flatten)]
        source: GraphSource,
        #[arg(long, default_value_t = 10)]
        m_max: u32,
    },

    /// Run an identity over a parameter sweep; exits 2 on any failure.
    Verify {
        /// kn, cycle, triangle-tail, decomposition or dupvil.
        sweep: Sweep,
        #[command(flatten)]
        source: OptionalGraphSource,
        #[arg(long)]
        n: Option<IntList>,
        #[arg(long)]
        m: Option<IntList>,
    },
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::CoverIdeal { .. } => "cover-ideal",
            Command::Sdefect { .. } => "sdefect",
            Command::Waldschmidt { .. } => "waldschmidt",
            Command::Fit { .. } => "fit",
            Command::Classify2 { .. } => "classify2",
            Command::Indecomposability { .. } => "indecomposability",
            Command::Degree { .. } => "degree",
            Command::Verify { .. } => "verify",
        }
    }
}
