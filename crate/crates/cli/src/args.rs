use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use hypercx_core::{Budget, DEFAULT_MAX_LEVEL, DEFAULT_SEED};

#[derive(Debug, Parser)]
#[command(name = "hypercx", version, about = "Cayley-Dickson algebras, multiplication matrices and Clifford scans")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Triplet table and structure constants of one level.
    Table(Common),
    /// Left/right multiplication matrices and the symplectic structure.
    Matrices(MatricesArgs),
    /// Anticommutation graph, maximum Clifford families, volume element.
    Scan(ScanArgs),
    /// Full invariant suite for one level.
    Verify(Common),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Dot,
    Text,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SideArg {
    Left,
    Right,
    Both,
}

#[derive(Debug, Clone, Args)]
pub struct Common {
    /// Doubling level n (dimension 2^n).
    #[arg(long)]
    pub level: u32,
    #[arg(long, value_enum, default_value = "json")]
    pub format: Format,
    /// Output file; standard output when absent.
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Seed for the sampled checks.
    #[arg(long, default_value_t = DEFAULT_SEED)]
    pub seed: u64,
    /// Cap on clique-search nodes and zero-divisor products.
    #[arg(long)]
    pub budget: Option<u64>,
    /// Highest level accepted.
    #[arg(long, env = "HYPERCX_MAX_LEVEL", default_value_t = DEFAULT_MAX_LEVEL)]
    pub max_level: u32,
}

impl Common {
    pub fn budget(&self) -> Budget {
        let mut b = Budget::default();
        if let Some(n) = self.budget {
            b.search_nodes = n;
            b.zero_divisor_products = n;
        }
        b
    }
}

#[derive(Debug, Clone, Args)]
pub struct MatricesArgs {
    #[command(flatten)]
    pub common: Common,
    #[arg(long, value_enum, default_value = "left")]
    pub side: SideArg,
    /// Also emit the Darboux form and the symplectic check.
    #[arg(long)]
    pub symplectic: bool,
}

#[derive(Debug, Clone, Args)]
pub struct ScanArgs {
    #[command(flatten)]
    pub common: Common,
    /// Scan right-multiplication matrices instead of left.
    #[arg(long, value_enum, default_value = "left")]
    pub side: SideArg,
}
