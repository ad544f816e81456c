use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rccloop::loops::DEFAULT_CLOSURE_CAP;
use rccloop::iso::DEFAULT_SEARCH_BUDGET;

#[derive(Debug, Parser)]
#[command(name = "rccloop", version, about = "Build, verify and classify RCC loops from GL(2,q)")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,

    /// Output file (a directory together with --all-f).
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,

    #[arg(long, global = true, default_value_t = 1)]
    pub workers: usize,

    /// Maximum number of permutations a group closure may produce.
    #[arg(long, global = true, default_value_t = DEFAULT_CLOSURE_CAP)]
    pub closure_cap: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Simplicity {
    /// Enumerate normal subloops when q <= 9, otherwise predict from r.
    Auto,
    Enumerate,
    Predict,
}

#[derive(Debug, Clone, Args)]
pub struct LoopParams {
    /// Characteristic of the field.
    #[arg(short = 'p')]
    pub p: Option<u32>,

    /// Extension degree.
    #[arg(short = 'n', default_value_t = 1)]
    pub n: u32,

    /// Coefficient r of f = x^2 - r x + s, as an element code.
    #[arg(short = 'r', allow_hyphen_values = true)]
    pub r: Option<String>,

    /// Coefficient s of f = x^2 - r x + s, as an element code.
    #[arg(short = 's', allow_hyphen_values = true)]
    pub s: Option<String>,

    /// Run for every irreducible quadratic over the field.
    #[arg(long = "all-f")]
    pub all_f: bool,

    /// Read r and s as polynomials in t, e.g. "1+t".
    #[arg(long)]
    pub poly: bool,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build the Cayley table of a loop.
    Build(LoopParams),
    /// Verify a Cayley table or a constructed loop and report its structure.
    Verify {
        #[command(flatten)]
        params: LoopParams,
        /// Cayley table file; a sidecar at PATH.json names its construction.
        #[arg(long)]
        table: Option<PathBuf>,
    },
    /// Classify the loops over one field up to isomorphism.
    Classify {
        #[arg(short = 'p')]
        p: u32,
        #[arg(short = 'n', default_value_t = 1)]
        n: u32,
        #[arg(long, value_enum, default_value_t = Simplicity::Auto)]
        simplicity: Simplicity,
        /// Run the pairwise isomorphism search (default: when q <= 5).
        #[arg(long, conflicts_with = "no_oracle")]
        oracle: bool,
        #[arg(long)]
        no_oracle: bool,
        #[arg(long, default_value_t = DEFAULT_SEARCH_BUDGET)]
        budget: u64,
    },
    /// Reconstruct the table of loop counts.
    Table2 {
        /// Field orders to include.
        #[arg(long = "q", value_delimiter = ',', default_values_t = [3u32, 4, 5, 7, 8, 9, 11, 13, 16])]
        qs: Vec<u32>,
        #[arg(long, value_enum, default_value_t = Simplicity::Auto)]
        simplicity: Simplicity,
    },
    /// Multiplication group orders, inner mapping matrices and the factorization of GL(2,q).
    Conjecture(LoopParams),
    /// Export the table together with a JSON sidecar describing the construction.
    Export(LoopParams),
}
