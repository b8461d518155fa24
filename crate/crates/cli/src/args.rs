use std::path::PathBuf;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(name = "mcfilter", version, about = "Markov-chain min filtering for spectral embedding")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Embed a CSV point cloud with or without filtering.
    Embed(EmbedArgs),
    /// Monte Carlo count of random edges that survive filtering.
    Simulate(SimulateArgs),
    /// Circle with injected random edges, embedded from P and from Q.
    Circle(CircleArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FilterKind {
    None,
    Min,
    Product,
}

#[derive(Debug, Clone, Args)]
#[command(allow_negative_numbers = true)]
pub struct EmbedArgs {
    #[arg(long, value_name = "PATH")]
    pub input: PathBuf,
    /// Zero-based index of the class label column.
    #[arg(long = "label-col", value_name = "N")]
    pub label_col: Option<usize>,
    /// Zero-based column to drop (repeatable), e.g. a record id.
    #[arg(long = "skip-col", value_name = "N")]
    pub skip_col: Vec<usize>,
    /// Skip the first line of the input.
    #[arg(long)]
    pub header: bool,
    #[arg(long, value_name = "F")]
    pub epsilon: f64,
    #[arg(long, value_enum, default_value_t = FilterKind::None)]
    pub filter: FilterKind,
    #[arg(long = "filter-k", value_name = "N", default_value_t = 2)]
    pub filter_k: usize,
    #[arg(long, value_name = "2|3", default_value_t = 2)]
    pub dims: usize,
    /// Keep annihilated filter columns at zero instead of failing.
    #[arg(long)]
    pub lenient: bool,
    #[arg(long = "out-csv", value_name = "PATH")]
    pub out_csv: Option<PathBuf>,
    #[arg(long = "out-svg", value_name = "PATH")]
    pub out_svg: Option<PathBuf>,
}

#[derive(Debug, Clone, Args)]
#[command(allow_negative_numbers = true)]
pub struct CircleArgs {
    #[arg(long, value_name = "N", default_value_t = 100)]
    pub points: usize,
    #[arg(long, value_name = "F", default_value_t = 0.02)]
    pub epsilon: f64,
    /// Number of random unit-weight edges to inject.
    #[arg(long, value_name = "N", default_value_t = 0)]
    pub edges: usize,
    #[arg(long = "filter-k", value_name = "N", default_value_t = 5)]
    pub filter_k: usize,
    #[arg(long, value_name = "N", default_value_t = 0)]
    pub seed: u64,
    /// Base path; `_p` and `_q` are appended before the extension.
    #[arg(long = "out-csv", value_name = "PATH")]
    pub out_csv: Option<PathBuf>,
    #[arg(long = "out-svg", value_name = "PATH")]
    pub out_svg: Option<PathBuf>,
}

#[derive(Debug, Clone, Args)]
#[command(allow_negative_numbers = true)]
pub struct SimulateArgs {
    /// Base graph: cycle:N, grid:M or file:PATH (edge list).
    #[arg(long, value_name = "SPEC")]
    pub graph: GraphSpec,
    /// Probability of adding each missing edge.
    #[arg(long, value_name = "F")]
    pub p: f64,
    #[arg(long, value_name = "N", default_value_t = 200)]
    pub trials: usize,
    #[arg(long, value_name = "N", default_value_t = 0)]
    pub seed: u64,
    #[arg(long = "filter-k", value_name = "N", default_value_t = 2)]
    pub filter_k: usize,
    /// Per-trial counts.
    #[arg(long = "out-csv", value_name = "PATH")]
    pub out_csv: Option<PathBuf>,
    /// Copy of the text report.
    #[arg(long = "out-report", value_name = "PATH")]
    pub out_report: Option<PathBuf>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GraphSpec {
    Cycle(usize),
    Grid(usize),
    File(PathBuf),
}

impl FromStr for GraphSpec {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (kind, value) = s
            .split_once(':')
            .ok_or_else(|| format!("expected cycle:N, grid:M or file:PATH, got {s:?}"))?;
        let size = || {
            value
                .parse::<usize>()
                .map_err(|_| format!("{value:?} is not a vertex count"))
        };
        match kind {
            "cycle" => Ok(Self::Cycle(size()?)),
            "grid" => Ok(Self::Grid(size()?)),
            "file" if !value.is_empty() => Ok(Self::File(PathBuf::from(value))),
            _ => Err(format!("unknown graph kind {kind:?}")),
        }
    }
}

impl std::fmt::Display for GraphSpec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Self::Cycle(n) => write!(f, "cycle:{n}"),
            Self::Grid(m) => write!(f, "grid:{m}"),
            Self::File(p) => write!(f, "file:{}", p.display()),
        }
    }
}
