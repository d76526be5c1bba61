//! `mincyc`: verification suites and character tables.

use std::io::Write;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use mincyc_cli::{char_table, emit_table, run_verify, tables::vir_params, Format, Level, Report, RunConfig, TableKind, TableParams};
use mincyc_core::Status;
use mincyc_qchar::verify_vir_identity;

#[derive(Parser)]
#[command(name = "mincyc", version, about = "Verify minimal-cycle characters, fermionic identities and path constructions")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output encoding.
    #[arg(long, value_enum, default_value_t = Format::Table, global = true)]
    format: Format,

    /// Write output to this file instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    /// Worker threads (0 = one per core).
    #[arg(long, default_value_t = 0, global = true)]
    jobs: usize,

    /// Absolute tolerance for floating-point checks.
    #[arg(long, default_value_t = mincyc_paths::DEFAULT_TOLERANCE, global = true)]
    tolerance: f64,

    /// Seed for random generic points and spectral samples.
    #[arg(long, global = true)]
    seed: Option<u64>,

    /// Record per-check and total wall-clock times in reports.
    #[arg(long, global = true)]
    timings: bool,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum CharSpace {
    #[value(name = "W")]
    W,
    #[value(name = "M")]
    M,
    #[value(name = "Mr")]
    Mr,
}

#[derive(Subcommand)]
enum Command {
    /// Run a verification suite: `all`, a suite name or a criterion number.
    Verify {
        suite: String,
        #[arg(long, value_enum, default_value_t = Level::Quick)]
        level: Level,
    },
    /// Print the graded character of W, M or the restricted quotient Mr.
    Char {
        #[arg(value_enum)]
        space: CharSpace,
        #[arg(long = "N")]
        n: usize,
        #[arg(long)]
        l: usize,
        #[arg(long)]
        r: Option<usize>,
        #[arg(long, default_value_t = 6)]
        max_deg: i64,
    },
    /// Check one sector of the Virasoro character identity.
    VirIdentity {
        #[arg(long)]
        r: usize,
        #[arg(long)]
        m: i64,
        #[arg(long = "L")]
        big_l: i64,
        #[arg(long, default_value_t = 10)]
        order: i64,
    },
    /// Emit a reference table.
    EmitTable {
        #[arg(value_enum)]
        kind: TableKind,
        #[arg(long = "N")]
        n: Option<usize>,
        #[arg(long)]
        l: Option<usize>,
        #[arg(long)]
        r: Option<usize>,
        #[arg(long)]
        m: Option<i64>,
        #[arg(long = "L")]
        big_l: Option<i64>,
        #[arg(long)]
        max_deg: Option<i64>,
        #[arg(long)]
        order: Option<i64>,
    },
    /// List the suites and their criterion numbers.
    List,
}

/// A usage problem detected after parsing (exit code 2).
#[derive(Debug)]
struct Usage(String);

impl std::fmt::Display for Usage {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for Usage {}

fn usage(e: anyhow::Error) -> anyhow::Error {
    anyhow::Error::new(Usage(format!("{:#}", e)))
}

fn emit(cli: &Cli, text: &str) -> Result<()> {
    match &cli.out {
        Some(p) => std::fs::write(p, text).with_context(|| format!("writing {}", p.display())),
        None => {
            std::io::stdout().write_all(text.as_bytes())?;
            Ok(())
        }
    }
}

fn config(cli: &Cli, suite: &str, level: Level) -> RunConfig {
    RunConfig {
        suite: suite.to_string(),
        level,
        format: cli.format,
        jobs: cli.jobs,
        tolerance: cli.tolerance,
        seed: cli.seed,
        timings: cli.timings,
    }
}

fn run(cli: &Cli) -> Result<u8> {
    if !(cli.tolerance > 0.0) {
        return Err(usage(anyhow::anyhow!("--tolerance must be positive")));
    }
    match &cli.command {
        Command::Verify { suite, level } => {
            mincyc_cli::resolve_suite(suite, *level).map_err(usage)?;
            let report = run_verify(&config(cli, suite, *level))?;
            emit(cli, &report.render(cli.format))?;
            Ok(report.exit_code())
        }
        Command::Char { space, n, l, r, max_deg } => {
            let name = match space {
                CharSpace::W => "W",
                CharSpace::M => "M",
                CharSpace::Mr => "Mr",
            };
            if *n == 0 || l > n || (matches!(space, CharSpace::Mr) && r.map_or(true, |r| r < 3)) || *max_deg < 0 {
                return Err(usage(anyhow::anyhow!("need N >= 1, 0 <= l <= N, max-deg >= 0 and --r >= 3 for Mr")));
            }
            let (table, ok) = char_table(name, *n, *l, *r, *max_deg)?;
            emit(cli, &table.render(cli.format))?;
            Ok(if ok { 0 } else { 1 })
        }
        Command::VirIdentity { r, m, big_l, order } => {
            let p = TableParams { r: Some(*r), m: Some(*m), big_l: Some(*big_l), order: Some(*order), ..Default::default() };
            let (r, m, l, order) = vir_params(&p).map_err(usage)?;
            let out = verify_vir_identity(r, m, l, order);
            let result = mincyc_cli::CheckResult {
                criterion: 9,
                check: "vir-identity".into(),
                params: [("r", r), ("m", m), ("L", l), ("order", order)].iter().map(|(k, v)| (k.to_string(), v.to_string())).collect(),
                status: out.status.as_str().into(),
                expected: out.expected,
                computed: out.computed,
                detail: out.detail,
                elapsed_ms: 0,
            };
            let report = Report::new(config(cli, "vir-identity", Level::Quick), vec![result], 0, false);
            emit(cli, &report.render(cli.format))?;
            Ok(if out.status == Status::Fail { 1 } else { 0 })
        }
        Command::EmitTable { kind, n, l, r, m, big_l, max_deg, order } => {
            let p = TableParams { n: *n, l: *l, r: *r, m: *m, big_l: *big_l, max_deg: *max_deg, order: *order };
            if let (Some(n), Some(l)) = (n, l) {
                if l > n {
                    return Err(usage(anyhow::anyhow!("need l <= N")));
                }
            }
            let table = emit_table(*kind, &p).map_err(usage)?;
            emit(cli, &table.render(cli.format))?;
            Ok(0)
        }
        Command::List => {
            let mut text = String::new();
            for s in mincyc_cli::SUITES {
                text.push_str(&format!("{:>2}  {:<15} {}\n", s.criterion, s.name, s.summary));
            }
            emit(cli, &text)?;
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match catch_unwind(AssertUnwindSafe(|| run(&cli))) {
        Ok(Ok(code)) => ExitCode::from(code),
        Ok(Err(e)) if e.is::<Usage>() => {
            eprintln!("error: {}", e);
            ExitCode::from(2)
        }
        Ok(Err(e)) => {
            eprintln!("internal error: {:#}", e);
            ExitCode::from(3)
        }
        Err(_) => {
            eprintln!("internal error: panic");
            ExitCode::from(3)
        }
    }
}
