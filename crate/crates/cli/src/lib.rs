//! Command-line front end: the check registry behind `mincyc verify`,
//! report rendering and the table emitters.

pub mod config;
pub mod report;
pub mod suite;
pub mod tables;

use std::time::Instant;

use anyhow::Result;

pub use config::{Format, Level, RunConfig};
pub use report::{CheckResult, Report, Summary, REPORT_VERSION};
pub use suite::{criterion_checks, resolve_suite, run_checks, Check, Ctx, SUITES};
pub use tables::{char_table, emit_table, Table, TableKind, TableParams};

/// Runs every check of the configured suite and assembles the report.
pub fn run_verify(config: &RunConfig) -> Result<Report> {
    let start = Instant::now();
    let mut checks = Vec::new();
    for k in resolve_suite(&config.suite, config.level)? {
        checks.extend(criterion_checks(k, config.level));
    }
    let ctx = Ctx::new(config.tolerance, config.seed);
    let (results, internal) = run_checks(checks, &ctx, config.jobs, config.timings)?;
    let wall_ms = if config.timings { start.elapsed().as_millis() as u64 } else { 0 };
    Ok(Report::new(config.clone(), results, wall_ms, internal))
}
