use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(name = "nedlib", version, about = "Exact normalized edit distance and friends")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Distance between two words (or every pair in --file)
    Dist(DistArgs),
    /// Same as `dist --witness`
    Path(DistArgs),
    /// Show the alignment induced by an optimal (or given) edit path
    Align(AlignArgs),
    /// Compose two edit paths and check the triangle bounds
    Compose(ComposeArgs),
    /// Run the verification suite
    Check(CheckArgs),
    /// Time the distance functions on random words
    Bench(BenchArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Human,
    Json,
    Csv,
}

#[derive(Debug, Args)]
pub struct OutputArgs {
    #[arg(long, value_enum)]
    pub format: Option<Format>,
    /// Shorthand for --format json
    #[arg(long, conflicts_with = "format")]
    pub json: bool,
    /// Padding glyph for alignments; rejected inside words
    #[arg(long, default_value_t = '_')]
    pub pad: char,
}

impl OutputArgs {
    pub fn format(&self, default: Format) -> Format {
        if self.json {
            Format::Json
        } else {
            self.format.unwrap_or(default)
        }
    }
}

#[derive(Debug, Args)]
pub struct DistArgs {
    /// ed, ned, ged, ced, cedp or postnorm
    pub metric: String,
    pub a: Option<String>,
    pub b: Option<String>,
    /// Also print the witness path (or word chain) and its alignment
    #[arg(long)]
    pub witness: bool,
    /// Score every line `a<TAB>b` of this file ("-" for stdin)
    #[arg(long, conflicts_with_all = ["a", "b"])]
    pub file: Option<PathBuf>,
    #[command(flatten)]
    pub out: OutputArgs,
}

#[derive(Debug, Args)]
pub struct AlignArgs {
    pub a: String,
    pub b: String,
    /// Metric whose witness is rendered
    #[arg(long, default_value = "ned")]
    pub metric: String,
    /// Render this path instead; subscripted or bare
    #[arg(long)]
    pub path: Option<String>,
    #[command(flatten)]
    pub out: OutputArgs,
}

#[derive(Debug, Args)]
pub struct ComposeArgs {
    /// First path, e.g. `c(a>b).v(c).n(b)` or bare `cvn`
    pub p12: String,
    /// Second path
    pub p23: String,
    /// Source word of the chain
    #[arg(long)]
    pub s1: String,
    /// Middle word; needed for bare paths
    #[arg(long)]
    pub s2: Option<String>,
    /// Target word; needed for bare paths
    #[arg(long)]
    pub s3: Option<String>,
    #[command(flatten)]
    pub out: OutputArgs,
}

#[derive(Debug, Args)]
pub struct CheckArgs {
    /// Property id, comma-separated ids, or `all`
    #[arg(long, default_value = "all")]
    pub property: String,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, default_value_t = 10_000)]
    pub trials: u64,
    /// Alphabet size for random words
    #[arg(long, default_value_t = 3)]
    pub alphabet: usize,
    #[arg(long, default_value_t = 10)]
    pub max_len: usize,
    /// Add the exhaustive oracle comparisons to `all`
    #[arg(long)]
    pub oracle: bool,
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Args)]
pub struct BenchArgs {
    /// Metrics to time, comma-separated
    #[arg(long, default_value = "ed,ned,ged,ced")]
    pub metrics: String,
    #[arg(long, default_value_t = 200)]
    pub pairs: usize,
    #[arg(long, default_value_t = 8)]
    pub max_len: usize,
    #[arg(long, default_value_t = 3)]
    pub alphabet: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}
