//! Command-line front end for `chordpow`.
//!
//! [`run`] parses arguments and executes one command, returning the exit
//! code and both output streams so callers can test without a process.
//! Exit codes: 0 success, 1 no witness found or a failed check, 2 usage or
//! domain error.

mod args;
mod commands;
mod input;
mod output;
pub mod table1;

use std::ffi::OsString;

use clap::Parser;
use serde::Serialize;

use chordpow::exponent::{SearchBudget, SearchConfig};

pub use args::{Cli, Command, Format, GlobalArgs, GraphArgs, Powers};

/// Environment variable holding the default seed outside `--strict` mode.
pub const SEED_ENV: &str = "CHORDPOW_SEED";

pub const EXIT_OK: i32 = 0;
pub const EXIT_NOT_FOUND: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

/// Settings shared by every command.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct RunConfig {
    pub seed: u64,
    pub tol_scale: f64,
    pub witness_threshold: f64,
    pub budget: SearchBudget,
    #[serde(skip)]
    pub format: Format,
}

impl RunConfig {
    /// Validates the global flags. `env_seed` is the raw value of
    /// [`SEED_ENV`], ignored under `--strict`.
    pub fn from_args(g: &GlobalArgs, env_seed: Option<&str>) -> Result<Self, String> {
        for (name, v) in [("tol-scale", g.tol_scale), ("witness-threshold", g.witness_threshold)] {
            if !(v > 0.0 && v.is_finite()) {
                return Err(format!("--{name} must be positive and finite, got {v}"));
            }
        }
        let seed = match (g.seed, g.strict) {
            (Some(s), _) => s,
            (None, true) => return Err("--strict requires an explicit --seed".into()),
            (None, false) => match env_seed {
                Some(text) => text
                    .trim()
                    .parse()
                    .map_err(|_| format!("{SEED_ENV} must be an unsigned integer, got {text:?}"))?,
                None => 0,
            },
        };
        Ok(RunConfig {
            seed,
            tol_scale: g.tol_scale,
            witness_threshold: g.witness_threshold,
            budget: SearchBudget {
                bordered: g.bordered_budget,
                random: g.random_budget,
                gram: g.gram_budget,
                refine_starts: g.refine_starts,
                refine_iters: g.refine_iters,
            },
            format: g.format,
        })
    }

    pub fn search(&self) -> SearchConfig {
        SearchConfig {
            budget: self.budget,
            tol_scale: self.tol_scale,
            threshold: self.witness_threshold,
        }
    }
}

/// Exit code and captured output of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    pub(crate) fn ok(stdout: String) -> Self {
        Outcome {
            code: EXIT_OK,
            stdout,
            stderr: String::new(),
        }
    }

    pub(crate) fn usage(message: impl std::fmt::Display) -> Self {
        Outcome {
            code: EXIT_USAGE,
            stdout: String::new(),
            stderr: format!("error: {message}\n"),
        }
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, env_seed: Option<&str>) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            return if code == EXIT_OK {
                Outcome::ok(text)
            } else {
                Outcome {
                    code,
                    stdout: String::new(),
                    stderr: text,
                }
            };
        }
    };
    let config = match RunConfig::from_args(&cli.global, env_seed) {
        Ok(c) => c,
        Err(e) => return Outcome::usage(e),
    };
    commands::dispatch(&cli.command, &config)
}
