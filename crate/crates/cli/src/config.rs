//! Run configuration shared by every command.

use serde::Serialize;

/// Size of the parameter grid.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Level {
    /// The acceptance grid.
    Quick,
    /// Larger N and degree bounds.
    Full,
}

/// Output encoding.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Table,
    Json,
    Csv,
}

/// Settings that affect what is computed and how it is reported.
#[derive(Clone, Debug, Serialize)]
pub struct RunConfig {
    pub suite: String,
    pub level: Level,
    pub format: Format,
    /// Not serialized: results do not depend on the thread count.
    #[serde(skip)]
    pub jobs: usize,
    pub tolerance: f64,
    /// `None` keeps the default generic point (primes) and sampling seed.
    pub seed: Option<u64>,
    /// Record wall-clock times; off by default so reports are reproducible
    /// byte for byte.
    pub timings: bool,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            suite: "all".into(),
            level: Level::Quick,
            format: Format::Table,
            jobs: 0,
            tolerance: mincyc_paths::DEFAULT_TOLERANCE,
            seed: None,
            timings: false,
        }
    }
}

/// Seed for random spectral samples when none is given.
pub const DEFAULT_SAMPLE_SEED: u64 = 2024;
