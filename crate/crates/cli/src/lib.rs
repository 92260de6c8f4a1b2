//! Command-line verification harness over the `diagcomm` library.

pub mod cache;
pub mod commands;
pub mod config;
pub mod engine;
pub mod expected;
pub mod keyed_rng;
pub mod report;

use commands::{run_command, validate, Context};
use config::Cli;
use engine::Engine;
use report::Report;

/// Failure before any check ran.
#[derive(Debug)]
pub enum RunError {
    Usage(String),
    Setup(String),
}

impl RunError {
    pub fn exit_code(&self) -> i32 {
        match self {
            RunError::Usage(_) => 2,
            RunError::Setup(_) => 1,
        }
    }
}

impl std::fmt::Display for RunError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            RunError::Usage(m) => write!(f, "usage error: {m}"),
            RunError::Setup(m) => write!(f, "error: {m}"),
        }
    }
}

pub fn run(cli: Cli) -> Result<Report, RunError> {
    validate(&cli).map_err(RunError::Usage)?;
    let cache = match &cli.cache_dir {
        Some(dir) => Some(
            cache::Cache::new(dir)
                .map_err(|e| RunError::Setup(format!("cache directory {}: {e}", dir.display())))?,
        ),
        None => None,
    };
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(cli.threads)
        .build()
        .map_err(|e| RunError::Setup(format!("thread pool: {e}")))?;
    let engine = Engine {
        order: cli.term_order(),
        budget: cli.budget(),
        cache,
    };
    let command = cli.command;
    let ctx = Context { cli, engine, pool };
    let checks = run_command(&ctx, command);
    Ok(Report::new(ctx.cli.run_config(), checks))
}
