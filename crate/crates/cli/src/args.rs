use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use chordpow::exponent::DEFAULT_GRID_STEP;
use chordpow::PowerFamily;

#[derive(Debug, Parser)]
#[command(
    name = "chordpow",
    version,
    about = "Entrywise powers preserving positivity on graph-patterned PSD cones"
)]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalArgs,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct GlobalArgs {
    /// Seed for every randomized step. Defaults to $CHORDPOW_SEED, then 0.
    #[arg(long, global = true)]
    pub seed: Option<u64>,
    /// Require an explicit --seed and ignore the environment.
    #[arg(long, global = true)]
    pub strict: bool,
    /// Relative tolerance of PSD tests.
    #[arg(long, global = true, default_value_t = chordpow::cones::DEFAULT_TOL_SCALE)]
    pub tol_scale: f64,
    /// Relative threshold a witness eigenvalue must fall below.
    #[arg(long, global = true, default_value_t = chordpow::cones::DEFAULT_WITNESS_THRESHOLD)]
    pub witness_threshold: f64,
    /// Output format; text rounds to 6 significant digits.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Random (u, v) draws for bordered witnesses.
    #[arg(long, global = true, default_value_t = 200)]
    pub bordered_budget: usize,
    /// Clique-sum samples for witness search.
    #[arg(long, global = true, default_value_t = 500)]
    pub random_budget: usize,
    /// Orthogonal Gram samples for witness search.
    #[arg(long, global = true, default_value_t = 500)]
    pub gram_budget: usize,
    /// Best bordered draws refined by Nelder–Mead.
    #[arg(long, global = true, default_value_t = 4)]
    pub refine_starts: usize,
    /// Iteration cap per refinement.
    #[arg(long, global = true, default_value_t = 600)]
    pub refine_iters: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Powers {
    Plain,
    #[value(alias = "psi")]
    Odd,
    #[value(alias = "phi")]
    Even,
}

impl From<Powers> for PowerFamily {
    fn from(p: Powers) -> Self {
        match p {
            Powers::Plain => PowerFamily::Plain,
            Powers::Odd => PowerFamily::Odd,
            Powers::Even => PowerFamily::Even,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FamilyName {
    Complete,
    NearComplete,
    Cycle,
    Path,
    Tree,
    CompleteBipartite,
    Band,
    Split,
    Apollonian,
    MaxOuterplanar,
    RandomChordal,
}

/// A graph from a file (edge list or JSON) or from a generator.
#[derive(Debug, Args)]
pub struct GraphArgs {
    /// Edge-list or JSON graph file.
    pub input: Option<PathBuf>,
    #[arg(long, value_enum)]
    pub family: Option<FamilyName>,
    #[arg(long)]
    pub n: Option<usize>,
    /// Bandwidth for `band`.
    #[arg(long)]
    pub d: Option<usize>,
    /// Part sizes for `complete-bipartite`.
    #[arg(long)]
    pub a: Option<usize>,
    #[arg(long)]
    pub b: Option<usize>,
    #[arg(long)]
    pub clique_size: Option<usize>,
    #[arg(long)]
    pub independent_size: Option<usize>,
    #[arg(long)]
    pub max_degree: Option<usize>,
    #[arg(long)]
    pub density: Option<f64>,
    /// Seed of randomized generators; defaults to the run seed.
    #[arg(long)]
    pub graph_seed: Option<u64>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Critical exponent: exact for chordal graphs, a numeric bracket otherwise.
    Ce {
        #[command(flatten)]
        graph: GraphArgs,
        #[arg(long = "powers", alias = "power-family", value_enum, default_value_t = Powers::Plain)]
        powers: Powers,
        #[arg(long, default_value_t = DEFAULT_GRID_STEP)]
        grid_step: f64,
    },
    /// Symbolic set of positivity-preserving powers.
    Hset {
        #[command(flatten)]
        graph: GraphArgs,
        #[arg(long = "powers", alias = "power-family", value_enum, default_value_t = Powers::Plain)]
        powers: Powers,
    },
    /// Search for a PSD matrix whose power image is not PSD, or re-check one.
    Witness {
        #[command(flatten)]
        graph: GraphArgs,
        #[arg(long, allow_negative_numbers = true, required_unless_present = "verify")]
        alpha: Option<f64>,
        #[arg(long = "powers", alias = "power-family", value_enum, default_value_t = Powers::Plain)]
        powers: Powers,
        /// Re-verify a witness JSON file instead of searching.
        #[arg(long, value_name = "FILE", conflicts_with = "alpha")]
        verify: Option<PathBuf>,
        /// Also write the witness JSON to this file.
        #[arg(long, value_name = "FILE")]
        output: Option<PathBuf>,
    },
    /// Sample the cone and test power images on a grid of exponents.
    Verify {
        #[command(flatten)]
        graph: GraphArgs,
        /// Comma-separated exponents.
        #[arg(long, value_delimiter = ',', required = true, num_args = 1..)]
        alpha_grid: Vec<f64>,
        #[arg(long = "powers", alias = "power-family", value_enum, default_value_t = Powers::Plain)]
        powers: Powers,
        #[arg(long, default_value_t = 500)]
        samples: usize,
        /// Gram terms per maximal clique in each sample.
        #[arg(long, default_value_t = 1)]
        rank: usize,
    },
    /// Recompute the critical exponents of the standard chordal families.
    Table1 {
        #[arg(long, default_value_t = 10)]
        n_max: usize,
    },
    /// Compare r - 2 with numeric brackets over a file of graphs separated
    /// by `---` lines.
    Scan {
        file: PathBuf,
        #[arg(long = "powers", alias = "power-family", value_enum, default_value_t = Powers::Plain)]
        powers: Powers,
        #[arg(long, default_value_t = DEFAULT_GRID_STEP)]
        grid_step: f64,
    },
}
