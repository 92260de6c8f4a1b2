use std::path::PathBuf;
use std::time::Duration;

use clap::{Parser, Subcommand, ValueEnum};
use diagcomm::permlab::Permutation;
use diagcomm::polyring::TermOrder;
use diagcomm::schemes::{DiagConvention, Orientation};
use serde::Serialize;

#[derive(Parser, Debug, Clone)]
#[command(
    name = "diagcomm",
    version,
    about = "Exact checks on commuting and diagonal-commutator schemes of matrix pairs"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Matrix size.
    #[arg(long, global = true, default_value_t = 3)]
    pub n: usize,

    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,

    /// Sample count for randomized checks (default: 25 for smooth, 100 for tao, 20 per permutation for conjectures).
    #[arg(long, global = true)]
    pub trials: Option<usize>,

    #[arg(long, global = true, value_enum, default_value_t = Format::Table)]
    pub format: Format,

    #[arg(long, global = true, value_enum, default_value_t = OrderArg::Grevlex)]
    pub order: OrderArg,

    /// Worker threads (0: one per core).
    #[arg(long, global = true, default_value_t = 0)]
    pub threads: usize,

    /// Directory for cached Gröbner bases.
    #[arg(long, global = true)]
    pub cache_dir: Option<PathBuf>,

    /// Wall-clock budget per Gröbner computation.
    #[arg(long, global = true, default_value_t = 600.0)]
    pub budget_seconds: f64,

    /// Restrict per-permutation commands to one permutation (one-line notation).
    #[arg(long, global = true, value_parser = parse_permutation)]
    pub pi: Option<Permutation>,

    #[arg(long, global = true, value_enum, default_value_t = OrientationArg::Standard)]
    pub orientation: OrientationArg,

    /// Action of a permutation on diagonals in the diagonal identity.
    #[arg(long, global = true, value_enum, default_value_t = DiagArg::Standard)]
    pub diag_convention: DiagArg,

    /// Record wall-clock times in reports (breaks byte-for-byte reproducibility).
    #[arg(long, global = true)]
    pub timings: bool,
}

#[derive(Subcommand, Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Command {
    /// Degrees and bidegrees of the component candidates.
    Degrees,
    /// Sum, product and symmetry identities among the (bi)degrees.
    Identities,
    /// The Gröbner degeneration of the diagonal-commutator scheme and its twist.
    Degenerate,
    /// Jacobian ranks at generic central points.
    Smooth,
    /// Rank of the power-diagonal matrix on pairs with diagonal commutator.
    Tao,
    /// Orbit and stratum dimensions of all partial permutations.
    Strata,
    /// Conjectured equations for components and closures.
    Conjectures,
    /// Every command applicable to the given size.
    All,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Table,
    Json,
    Csv,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum OrderArg {
    Grevlex,
    Lex,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum OrientationArg {
    Standard,
    Flipped,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum DiagArg {
    Standard,
    Inverse,
}

fn parse_permutation(s: &str) -> Result<Permutation, String> {
    s.parse::<Permutation>().map_err(|e| e.to_string())
}

impl Cli {
    pub fn term_order(&self) -> TermOrder {
        match self.order {
            OrderArg::Grevlex => TermOrder::Grevlex,
            OrderArg::Lex => TermOrder::Lex,
        }
    }

    pub fn orientation(&self) -> Orientation {
        match self.orientation {
            OrientationArg::Standard => Orientation::Standard,
            OrientationArg::Flipped => Orientation::Flipped,
        }
    }

    pub fn diag_convention(&self) -> DiagConvention {
        match self.diag_convention {
            DiagArg::Standard => DiagConvention::Standard,
            DiagArg::Inverse => DiagConvention::Inverse,
        }
    }

    pub fn budget(&self) -> Duration {
        Duration::from_secs_f64(self.budget_seconds.max(0.0))
    }

    /// The settings that determine report contents. Thread count, cache
    /// location, budget and output format are left out.
    pub fn run_config(&self) -> RunConfig {
        RunConfig {
            command: self.command,
            n: self.n,
            seed: self.seed,
            trials: self.trials,
            order: self.order,
            orientation: self.orientation,
            diag_convention: self.diag_convention,
            pi: self.pi.as_ref().map(|p| p.to_string()),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct RunConfig {
    pub command: Command,
    pub n: usize,
    pub seed: u64,
    pub trials: Option<usize>,
    pub order: OrderArg,
    pub orientation: OrientationArg,
    pub diag_convention: DiagArg,
    pub pi: Option<String>,
}
