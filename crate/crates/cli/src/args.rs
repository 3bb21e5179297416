use std::path::PathBuf;

use clap::Parser;

/// Raw command line shared by all verbs; each verb validates the flags it
/// needs.
#[derive(Parser, Debug, Clone, Default)]
#[command(
    name = "adduce",
    version,
    about = "Exact calculus of derivatives and adduced representations"
)]
pub struct RawArgs {
    /// Verb to run (see the list below).
    pub verb: String,

    /// Verb input: a representation expression, or a multiset for `infchar`.
    pub input: Option<String>,

    /// Emit one JSON object instead of text.
    #[arg(long)]
    pub json: bool,

    /// Base field, R or C.
    #[arg(long, default_value = "R")]
    pub field: String,

    /// Composition, e.g. `2,2` or `3^2 1`.
    #[arg(long)]
    pub lambda: Option<String>,

    /// Derivative order or verb-specific integer parameter.
    #[arg(long)]
    pub order: Option<usize>,

    #[arg(long)]
    pub n: Option<usize>,

    #[arg(long)]
    pub d: Option<usize>,

    /// Seed for randomized verifiers.
    #[arg(long)]
    pub seed: Option<u64>,

    /// Path to a matrix in the plain-text row format.
    #[arg(long)]
    pub matrix: Option<PathBuf>,
}
