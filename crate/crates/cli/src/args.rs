//! Command-line surface.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use epicalc_core::tolerance::{
    DEFAULT_EPS, DEFAULT_GRID, DEFAULT_SAMPLES, DEFAULT_SEED,
};

/// Epistemic calculi: axiom checking, fusion, maps, hypothesis graphs,
/// and evidence updating.
#[derive(Debug, Parser)]
#[command(name = "epicalc", version, max_term_width = 100)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    #[command(flatten)]
    pub run: RunConfig,
}

/// Options shared by every command. The same configuration always
/// produces byte-identical output.
#[derive(Debug, Clone, Args)]
pub struct RunConfig {
    /// Comparison tolerance.
    #[arg(long, global = true, default_value_t = DEFAULT_EPS)]
    pub eps: f64,

    /// Number of sampled tuples per sampled check.
    #[arg(long, global = true, default_value_t = DEFAULT_SAMPLES)]
    pub samples: u32,

    /// Seed for the deterministic sampler.
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    pub seed: u64,

    /// Resolution of witness-search grids.
    #[arg(long, global = true, default_value_t = DEFAULT_GRID)]
    pub grid: u32,

    /// Sampling region; when omitted, each check picks its own default
    /// (boundary-sensitive checks on signed carriers use the interior).
    #[arg(long, global = true, value_enum)]
    pub region: Option<RegionArg>,

    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = FormatArg::Text)]
    pub format: FormatArg,

    /// Write output to a file instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum RegionArg {
    Interior,
    Full,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FormatArg {
    Json,
    Text,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check the axioms E1-E8 and the order/monoid laws.
    Axioms {
        /// Calculi to check (default: all six).
        #[arg(value_name = "CALCULUS")]
        calculi: Vec<String>,
    },

    /// Fuse two or more values in one calculus.
    Fuse {
        #[arg(value_name = "CALCULUS")]
        calculus: String,

        /// Values: scalars like `0.5` (negatives allowed), pairs like
        /// `0.2,0.9`, intervals like `[0.1,0.4]`, or `bottom`.
        #[arg(value_name = "VALUE", required = true, num_args = 1.., allow_negative_numbers = true)]
        values: Vec<String>,
    },

    /// Classify a map between calculi as conservative, liberal, balanced,
    /// or neither.
    Classify {
        /// A built-in map name (`ptb_to_ip`, `ip_to_ptb`, `pt_to_cf`,
        /// `ptb_to_cf`) or `identity:<CALCULUS>`.
        #[arg(value_name = "MAP")]
        map: String,
    },

    /// Transport a hypothesis graph along a map and revalidate it.
    Transport {
        #[arg(value_name = "MAP")]
        map: String,

        #[arg(value_name = "GRAPH")]
        graph: PathBuf,

        /// Permit maps that did not classify conservative.
        #[arg(long)]
        override_liberal_transport: bool,
    },

    /// Update a hypothesis graph against an evidence object.
    Update {
        #[arg(value_name = "GRAPH")]
        graph: PathBuf,

        /// Object id of the evidence.
        #[arg(long, value_name = "OBJECT")]
        evidence: String,
    },

    /// Validate the enrichment laws of a hypothesis graph.
    Validate {
        #[arg(value_name = "GRAPH")]
        graph: PathBuf,
    },

    /// Full report: axiom table, no-go cross-checks, the idempotent-min
    /// characterization, and classifications of all built-in maps.
    Report {
        /// Calculi to cover (default: all six).
        #[arg(value_name = "CALCULUS")]
        calculi: Vec<String>,
    },
}
