//! Experiment drivers behind the `mcfilter` binary.

pub mod args;
pub mod commands;
mod svg;

use std::path::PathBuf;

use mcfilter::ErrorKind;
use thiserror::Error;

pub use args::{CircleArgs, Cli, Command, EmbedArgs, FilterKind, GraphSpec, SimulateArgs};
pub use commands::{run_circle, run_embed, run_simulate};

pub const EXIT_USAGE: i32 = 1;
pub const EXIT_DATA: i32 = 2;
pub const EXIT_NUMERICAL: i32 = 3;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),

    #[error("{stage} failed: {source}")]
    Stage {
        stage: &'static str,
        #[source]
        source: mcfilter::Error,
    },

    #[error("cannot write {path}: {source}")]
    Write {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("output: {0}")]
    Output(#[from] std::io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => EXIT_USAGE,
            CliError::Stage { source, .. } => match source.kind() {
                ErrorKind::Usage => EXIT_USAGE,
                ErrorKind::Data => EXIT_DATA,
                ErrorKind::Numerical => EXIT_NUMERICAL,
            },
            CliError::Write { .. } | CliError::Output(_) => EXIT_DATA,
        }
    }
}

pub fn run(cli: &Cli, out: &mut dyn std::io::Write) -> Result<(), CliError> {
    match &cli.command {
        Command::Embed(a) => run_embed(a, out),
        Command::Simulate(a) => run_simulate(a, out),
        Command::Circle(a) => run_circle(a, out),
    }
}
