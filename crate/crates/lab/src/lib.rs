//! `brody-lab`: parse a subcommand, run the matching `brody-core`
//! experiment, write a CSV table and map failures to exit statuses.

pub mod cli;
pub mod commands;
pub mod config;
pub mod error;
pub mod output;

use std::path::PathBuf;

use cli::{Cli, Command};
pub use error::{LabError, LabResult};

/// Settings shared by every subcommand.
#[derive(Debug, Clone)]
pub struct Context {
    pub out: Option<PathBuf>,
    pub seed: u64,
    pub tol: Option<f64>,
    pub nr: Option<usize>,
    pub ntheta: Option<usize>,
    pub config: Option<PathBuf>,
}

impl Context {
    pub fn tol_or(&self, default: f64) -> f64 {
        self.tol.unwrap_or(default)
    }
}

pub fn run(cli: Cli) -> LabResult<()> {
    if let Some(t) = cli.tol {
        if !(t > 0.0 && t.is_finite()) {
            return Err(LabError::config(format!("--tol must be positive, got {t}")));
        }
    }
    for (name, v) in [("--nr", cli.nr), ("--ntheta", cli.ntheta)] {
        if v == Some(0) {
            return Err(LabError::config(format!("{name} must be positive")));
        }
    }
    let ctx = Context {
        out: cli.out,
        seed: cli.seed,
        tol: cli.tol,
        nr: cli.nr,
        ntheta: cli.ntheta,
        config: cli.config,
    };
    let selftest = cli.selftest;
    match cli.command {
        Command::Brody(a) if selftest => commands::brody::selftest(&ctx, &a),
        Command::Brody(a) => commands::brody::run(&ctx, &a),
        Command::Ahlfors(a) if selftest => commands::ahlfors::selftest(&ctx, &a),
        Command::Ahlfors(a) => commands::ahlfors::run(&ctx, &a),
        Command::Current(a) if selftest => commands::current::selftest(&ctx, &a),
        Command::Current(a) => commands::current::run(&ctx, &a),
        Command::Lelong(a) if selftest => commands::lelong::selftest(&ctx, &a),
        Command::Lelong(a) => commands::lelong::run(&ctx, &a),
        Command::Green(a) if selftest => commands::green::selftest(&ctx, &a),
        Command::Green(a) => commands::green::run(&ctx, &a),
        Command::Sextic(a) if selftest => commands::sextic::selftest(&ctx, &a),
        Command::Sextic(a) => commands::sextic::run(&ctx, &a),
        Command::Winkelmann(a) if selftest => commands::winkelmann::selftest(&ctx, &a),
        Command::Winkelmann(a) => commands::winkelmann::run(&ctx, &a),
    }
}
