//! Acceptance suite: runs the quick grid of every criterion and prints one
//! pass/fail line per criterion. Exits non-zero if any criterion fails.

use mincyc_cli::{criterion_checks, run_checks, Ctx, Level, SUITES};

fn main() {
    let ctx = Ctx::new(mincyc_paths::DEFAULT_TOLERANCE, None);
    let mut failed = 0;
    println!();
    for k in 1..=14u8 {
        let name = SUITES.iter().find(|s| s.criterion == k).map(|s| s.summary).unwrap_or("");
        let checks = criterion_checks(k, Level::Quick);
        let total = checks.len();
        let (results, internal) = run_checks(checks, &ctx, 0, false).expect("thread pool");
        let bad: Vec<_> = results.iter().filter(|r| !r.is_pass()).collect();
        if bad.is_empty() && !internal && total > 0 {
            println!("criterion {:>2}: PASS ({} checks) {}", k, total, name);
        } else {
            failed += 1;
            println!("criterion {:>2}: FAIL ({} of {} checks) {}", k, bad.len(), total, name);
            for r in bad.iter().take(5) {
                println!(
                    "    {} {}: expected {} computed {} {}",
                    r.check,
                    r.params_string(),
                    r.expected,
                    r.computed,
                    r.detail.clone().unwrap_or_default()
                );
            }
        }
    }
    println!("acceptance: {} of 14 criteria pass", 14 - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
