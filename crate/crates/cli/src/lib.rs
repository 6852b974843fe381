//! Command-line interface and file formats for the epistemic calculus
//! library: axiom tables, fusion, map classification, graph transport,
//! evidence updating, and enrichment validation, with deterministic
//! canonical-JSON or text output.

pub mod args;
pub mod io;
pub mod run;

pub use args::Cli;
pub use run::{run, CliError, EXIT_INTERNAL, EXIT_PARSE, EXIT_PRECONDITION};
