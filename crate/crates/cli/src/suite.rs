//! The registry of checks grouped by acceptance criterion, and the
//! parallel runner.

use std::collections::{BTreeMap, HashMap};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::sync::{Arc, Mutex};
use std::time::Instant;

use anyhow::{bail, Result};
use mincyc_core::perm::partitions;
use mincyc_core::{rat, BigRational, Status, VerificationOutcome};
use mincyc_cycles::{default_generic_point, verify_bethe_cmap};
use mincyc_fermions::{
    expected_zbar_table, verify_appb_recursions, verify_correspondence, verify_kernel_relations, zbar_character,
};
use mincyc_paths::{
    count_restricted, generic_q, rplus_pi, verify_all_modules,
    verify_classical_count, verify_face_ybe, verify_goodbad, verify_highest_weight, verify_identity_at_zero,
    verify_orthonormal, verify_special_coefficients,
};
use mincyc_qchar::{
    kostka_closed, kostka_fermionic, restricted_kostka, restricted_kostka_altsum, verify_lemma_iden,
    verify_vir_identity, verify_vir_single_term,
};
use mincyc_quotients::{
    char_m_restricted_truncated, char_m_truncated, char_w_truncated, dim_ec_m, dual_space_dims,
    factor_divisibility_check, restriction_mu, verify_free_determinant, DualMode, QuotientEngine,
};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::config::{Level, DEFAULT_SAMPLE_SEED};
use crate::report::CheckResult;

/// One line of the criterion index.
pub struct SuiteInfo {
    pub criterion: u8,
    pub name: &'static str,
    pub summary: &'static str,
}

/// Criterion 0 collects checks that are not acceptance criteria.
pub const SUITES: &[SuiteInfo] = &[
    SuiteInfo { criterion: 0, name: "extras", summary: "free-basis determinant and related invariants" },
    SuiteInfo { criterion: 1, name: "char-w", summary: "graded character of W_{N,l}" },
    SuiteInfo { criterion: 2, name: "char-m", summary: "graded character of M_{N,l}" },
    SuiteInfo { criterion: 3, name: "char-mr", summary: "graded character of the restricted quotient" },
    SuiteInfo { criterion: 4, name: "dim-ec", summary: "dimension at a generic point" },
    SuiteInfo { criterion: 5, name: "kostka", summary: "Kostka forms and path counts" },
    SuiteInfo { criterion: 6, name: "kernel", summary: "relations in the kernel of the fermionic map" },
    SuiteInfo { criterion: 7, name: "correspondence", summary: "currents versus cycles" },
    SuiteInfo { criterion: 8, name: "zbar", summary: "unbarred quotient character, two routes" },
    SuiteInfo { criterion: 9, name: "virasoro", summary: "Virasoro character identity" },
    SuiteInfo { criterion: 10, name: "iden", summary: "q-binomial identity" },
    SuiteInfo { criterion: 11, name: "appendix", summary: "current recursions and Bethe images" },
    SuiteInfo { criterion: 12, name: "modules", summary: "root-of-unity modules, good/bad split, R+ and Pi" },
    SuiteInfo { criterion: 13, name: "rsos", summary: "path vectors, RSOS weights and face YBE" },
    SuiteInfo { criterion: 14, name: "divisibility", summary: "factor divisibility of dual functionals" },
];

/// Resolves a suite name, a criterion number or `all`.
pub fn resolve_suite(name: &str, level: Level) -> Result<Vec<u8>> {
    if name == "all" {
        let mut v: Vec<u8> = (1..=14).collect();
        if level == Level::Full {
            v.insert(0, 0);
        }
        return Ok(v);
    }
    if let Ok(k) = name.parse::<u8>() {
        if k <= 14 {
            return Ok(vec![k]);
        }
    }
    match SUITES.iter().find(|s| s.name == name) {
        Some(s) => Ok(vec![s.criterion]),
        None => bail!("unknown suite '{}'", name),
    }
}

/// Shared state for one run: tolerance, seed and cached quotient engines.
pub struct Ctx {
    pub tolerance: f64,
    pub seed: Option<u64>,
    engines: Mutex<HashMap<usize, Arc<Mutex<QuotientEngine>>>>,
}

impl Ctx {
    pub fn new(tolerance: f64, seed: Option<u64>) -> Ctx {
        Ctx { tolerance, seed, engines: Mutex::new(HashMap::new()) }
    }

    /// The engine for `N`, shared by every check at that `N` so graded
    /// bases are built once.
    pub fn engine(&self, n: usize) -> Arc<Mutex<QuotientEngine>> {
        let mut map = self.engines.lock().unwrap_or_else(|e| e.into_inner());
        map.entry(n).or_insert_with(|| Arc::new(Mutex::new(QuotientEngine::new(n)))).clone()
    }

    /// Primes by default. With a seed, distinct random integers in
    /// `1..=997`, which are positive and so satisfy the genericity condition.
    pub fn generic_point(&self, n: usize) -> Vec<BigRational> {
        match self.seed {
            None => default_generic_point(n),
            Some(s) => {
                let mut rng = ChaCha8Rng::seed_from_u64(s ^ n as u64);
                let pool: Vec<i64> = (1..=997).collect();
                pool.choose_multiple(&mut rng, n).map(|&c| rat(c)).collect()
            }
        }
    }

    pub fn sample_seed(&self) -> u64 {
        self.seed.unwrap_or(DEFAULT_SAMPLE_SEED)
    }
}

type CheckFn = Box<dyn Fn(&Ctx) -> Result<VerificationOutcome> + Send + Sync>;

pub struct Check {
    pub criterion: u8,
    pub name: String,
    pub params: BTreeMap<String, String>,
    run: CheckFn,
}

impl Check {
    fn new<F>(criterion: u8, name: &str, params: &[(&str, String)], run: F) -> Check
    where
        F: Fn(&Ctx) -> Result<VerificationOutcome> + Send + Sync + 'static,
    {
        Check {
            criterion,
            name: name.to_string(),
            params: params.iter().map(|(k, v)| (k.to_string(), v.clone())).collect(),
            run: Box::new(run),
        }
    }
}

macro_rules! params {
    ($($k:literal => $v:expr),* $(,)?) => { &[$(($k, $v.to_string())),*] };
}

/// Parameter bounds per level.
struct Grid {
    char_n: usize,
    char_deg: i64,
    char_r: Vec<usize>,
    ec_n: usize,
    ec_r: Vec<usize>,
    kostka_n: usize,
    rk_k: usize,
    rk_n: usize,
    paths_r: usize,
    paths_n: usize,
    kernel_n: usize,
    corr_n: usize,
    zbar_n: usize,
    zbar_deg: usize,
    vir_r: Vec<i64>,
    vir_l: i64,
    vir_order: i64,
    iden_n: i64,
    appb_n: usize,
    bethe_n: usize,
    module_r: usize,
    goodbad_n: usize,
    rplus_n: usize,
    uj_n: usize,
    ybe_r: Vec<usize>,
    ybe_samples: usize,
    div_n: usize,
    div_l: usize,
    div_deg: usize,
    det_n: usize,
}

fn grid(level: Level) -> Grid {
    match level {
        Level::Quick => Grid {
            char_n: 5,
            char_deg: 6,
            char_r: vec![3, 4, 5],
            ec_n: 6,
            ec_r: vec![3, 4, 5],
            kostka_n: 12,
            rk_k: 4,
            rk_n: 10,
            paths_r: 6,
            paths_n: 12,
            kernel_n: 6,
            corr_n: 5,
            zbar_n: 4,
            zbar_deg: 6,
            vir_r: vec![3, 4],
            vir_l: 3,
            vir_order: 10,
            iden_n: 8,
            appb_n: 5,
            bethe_n: 4,
            module_r: 6,
            goodbad_n: 12,
            rplus_n: 6,
            uj_n: 6,
            ybe_r: vec![4, 5],
            ybe_samples: 20,
            div_n: 3,
            div_l: 2,
            div_deg: 6,
            det_n: 3,
        },
        Level::Full => Grid {
            char_n: 5,
            char_deg: 8,
            char_r: vec![3, 4, 5, 6],
            ec_n: 7,
            ec_r: vec![3, 4, 5, 6],
            kostka_n: 14,
            rk_k: 5,
            rk_n: 12,
            paths_r: 8,
            paths_n: 16,
            kernel_n: 7,
            corr_n: 6,
            zbar_n: 5,
            zbar_deg: 8,
            vir_r: vec![3, 4, 5],
            vir_l: 4,
            vir_order: 20,
            iden_n: 10,
            appb_n: 6,
            bethe_n: 5,
            module_r: 8,
            goodbad_n: 16,
            rplus_n: 8,
            uj_n: 8,
            ybe_r: vec![4, 5, 6, 7],
            ybe_samples: 100,
            div_n: 4,
            div_l: 2,
            div_deg: 6,
            det_n: 4,
        },
    }
}

/// Every check registered for criterion `k` at the given level.
pub fn criterion_checks(k: u8, level: Level) -> Vec<Check> {
    let g = grid(level);
    let mut out = Vec::new();
    match k {
        0 => {
            for n in 1..=g.det_n {
                for l in 1..=n {
                    out.push(Check::new(0, "free-determinant", params!("N" => n, "l" => l), move |_| {
                        Ok(verify_free_determinant(n, l)?)
                    }));
                }
            }
        }
        1 | 2 => {
            let name = if k == 1 { "char-w" } else { "char-m" };
            let max_deg = g.char_deg;
            for n in 1..=g.char_n {
                for l in 0..=n {
                    out.push(Check::new(k, name, params!("N" => n, "l" => l, "max_deg" => max_deg), move |ctx| {
                        let engine = ctx.engine(n);
                        let mut e = engine.lock().unwrap_or_else(|e| e.into_inner());
                        let table = if k == 1 { char_w_truncated(&mut e, l, max_deg)? } else { char_m_truncated(&mut e, l, max_deg)? };
                        Ok(table.outcome())
                    }));
                }
            }
        }
        3 => {
            let max_deg = g.char_deg;
            for &r in &g.char_r {
                for n in 1..=g.char_n {
                    for l in 0..=n {
                        out.push(Check::new(3, "char-mr", params!("N" => n, "l" => l, "r" => r, "max_deg" => max_deg), move |ctx| {
                            char_mr_check(ctx, n, l, r, max_deg)
                        }));
                    }
                }
            }
        }
        4 => {
            for n in 1..=g.ec_n {
                for l in 0..=n {
                    out.push(Check::new(4, "dim-ec", params!("N" => n, "l" => l), move |ctx| {
                        Ok(dim_ec_m(n, l, &ctx.generic_point(n), None)?.1)
                    }));
                    for &r in &g.ec_r {
                        out.push(Check::new(4, "dim-ec-restricted", params!("N" => n, "l" => l, "r" => r), move |ctx| {
                            Ok(dim_ec_m(n, l, &ctx.generic_point(n), Some(r))?.1)
                        }));
                    }
                }
            }
        }
        5 => {
            for n in 0..=g.kostka_n as i64 {
                out.push(Check::new(5, "kostka-fermionic-closed", params!("N" => n), move |_| {
                    let parts = (0..=n).filter(|m| (n - m) % 2 == 0).map(|m| {
                        let nu = vec![1usize; n as usize];
                        VerificationOutcome::compare(kostka_closed(m, n), kostka_fermionic(m, &nu))
                            .with_detail(format!("m={}", m))
                    });
                    Ok(VerificationOutcome::all(parts.collect()))
                }));
            }
            for kk in 1..=g.rk_k {
                for n in 0..=g.rk_n {
                    out.push(Check::new(5, "restricted-kostka-altsum", params!("k" => kk, "N" => n), move |_| {
                        // The alternating sum describes level k only for m <= k.
                        let parts = (0..=(n.min(kk)) as i64).filter(|m| (n as i64 - m) % 2 == 0).map(|m| {
                            VerificationOutcome::compare(restricted_kostka_altsum(kk, m, n), restricted_kostka(kk, m, n))
                                .with_detail(format!("m={}", m))
                        });
                        Ok(VerificationOutcome::all(parts.collect()))
                    }));
                }
            }
            for n in 1..=g.paths_n {
                out.push(Check::new(5, "classical-paths", params!("N" => n), move |_| {
                    let parts = (0..=n as i64).filter(|m| (n as i64 - m) % 2 == 0).map(|m| verify_classical_count(n, m));
                    Ok(VerificationOutcome::all(parts.collect()))
                }));
                for r in 3..=g.paths_r {
                    out.push(Check::new(5, "restricted-paths", params!("N" => n, "r" => r), move |_| {
                        let parts = (0..=n as i64).filter(|m| (n as i64 - m) % 2 == 0).map(|m| count_restricted(r, n, m).1);
                        Ok(VerificationOutcome::all(parts.collect()))
                    }));
                }
            }
        }
        6 => {
            for n in 1..=g.kernel_n {
                out.push(Check::new(6, "kernel-relations", params!("N" => n), move |_| Ok(verify_kernel_relations(n))));
            }
        }
        7 => {
            for n in 1..=g.corr_n {
                out.push(Check::new(7, "correspondence", params!("N" => n), move |_| Ok(verify_correspondence(n))));
            }
        }
        8 => {
            let max_deg = g.zbar_deg;
            for n in 1..=g.zbar_n {
                out.push(Check::new(8, "zbar-two-routes", params!("N" => n, "max_deg" => max_deg), move |_| {
                    zbar_check(n, max_deg)
                }));
            }
        }
        9 => {
            for &r in &g.vir_r {
                for m in 0..=r - 2 {
                    for l in 0..=g.vir_l {
                        let order = g.vir_order;
                        out.push(Check::new(9, "vir-identity", params!("r" => r, "m" => m, "L" => l, "order" => order), move |_| {
                            Ok(verify_vir_identity(r, m, l, order))
                        }));
                    }
                    let order = g.vir_order;
                    out.push(Check::new(9, "vir-single-term", params!("r" => r, "m" => m, "order" => order), move |_| {
                        Ok(verify_vir_single_term(r, m, order))
                    }));
                }
            }
        }
        10 => {
            for n in 1..=g.iden_n {
                out.push(Check::new(10, "iden", params!("N" => n, "s_max" => n + 2), move |_| Ok(verify_lemma_iden(n, n + 2))));
            }
        }
        11 => {
            for n in 1..=g.appb_n {
                out.push(Check::new(11, "current-recursions", params!("N" => n), move |_| Ok(verify_appb_recursions(n))));
            }
            for n in 1..=g.bethe_n {
                out.push(Check::new(11, "bethe-images", params!("N" => n), move |_| Ok(verify_bethe_cmap(n))));
            }
        }
        12 => {
            for r in 3..=g.module_r {
                out.push(Check::new(12, "root-modules", params!("r" => r), move |ctx| {
                    Ok(VerificationOutcome::all(verify_all_modules(r, ctx.tolerance.min(1e-10))?))
                }));
                for n in 1..=g.goodbad_n {
                    out.push(Check::new(12, "good-bad", params!("r" => r, "n" => n), move |_| Ok(verify_goodbad(r, n))));
                }
                for n in 2..=g.rplus_n {
                    for l in 0..=n / 2 {
                        out.push(Check::new(12, "rplus-pi", params!("r" => r, "n" => n, "l" => l), move |ctx| {
                            Ok(VerificationOutcome::all(rplus_pi(n, l, r, ctx.tolerance)))
                        }));
                    }
                }
            }
        }
        13 => {
            for n in 1..=g.uj_n {
                out.push(Check::new(13, "orthonormal", params!("N" => n), move |ctx| {
                    Ok(verify_orthonormal(n, generic_q(), ctx.tolerance)?)
                }));
                out.push(Check::new(13, "highest-weight", params!("N" => n), move |ctx| {
                    Ok(VerificationOutcome::all(verify_highest_weight(n, generic_q(), ctx.tolerance)?))
                }));
                for l in 0..=n / 2 {
                    out.push(Check::new(13, "special-coefficients", params!("N" => n, "l" => l), move |ctx| {
                        Ok(verify_special_coefficients(n, l, generic_q(), ctx.tolerance)?)
                    }));
                }
            }
            for &r in &g.ybe_r {
                out.push(Check::new(13, "rsos-identity", params!("r" => r), move |_| Ok(verify_identity_at_zero(r))));
                let samples = g.ybe_samples;
                out.push(Check::new(13, "face-ybe", params!("r" => r, "samples" => samples), move |ctx| {
                    Ok(verify_face_ybe(r, samples, ctx.sample_seed(), ctx.tolerance))
                }));
            }
        }
        14 => {
            for n in 1..=g.div_n {
                for l in 1..=g.div_l.min(n) {
                    for lambda in partitions(l, l, l) {
                        let label = lambda.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(",");
                        let max_deg = g.div_deg;
                        let lam = lambda.clone();
                        out.push(Check::new(14, "divisibility", params!("N" => n, "l" => l, "lambda" => label, "mode" => "barred"), move |_| {
                            Ok(factor_divisibility_check(n, l, &lam, DualMode::Barred, max_deg)?)
                        }));
                        for r in 3..=n + 3 {
                            if restriction_mu(n, l, r) < 1 {
                                continue;
                            }
                            let lam = lambda.clone();
                            out.push(Check::new(14, "divisibility", params!("N" => n, "l" => l, "lambda" => label, "mode" => format!("r{}", r)), move |_| {
                                Ok(factor_divisibility_check(n, l, &lam, DualMode::Restricted { r }, max_deg)?)
                            }));
                        }
                    }
                }
            }
        }
        _ => {}
    }
    out
}

/// The restricted character plus the two degenerate regimes: a zero table
/// below `μ = 1` and the unrestricted table above `μ = l`.
fn char_mr_check(ctx: &Ctx, n: usize, l: usize, r: usize, max_deg: i64) -> Result<VerificationOutcome> {
    let engine = ctx.engine(n);
    let mut e = engine.lock().unwrap_or_else(|e| e.into_inner());
    let table = char_m_restricted_truncated(&mut e, l, r, max_deg)?;
    let mu = restriction_mu(n, l, r);
    let regime = if mu < 1 {
        VerificationOutcome::compare(format!("{:?}", vec![0i64; table.dims.len()]), format!("{:?}", table.dims))
            .with_detail("mu < 1 regime")
    } else if mu as usize > l {
        let plain = char_m_truncated(&mut e, l, max_deg)?;
        VerificationOutcome::compare(format!("{:?}", plain.dims), format!("{:?}", table.dims)).with_detail("mu > l regime")
    } else {
        VerificationOutcome::pass("", "")
    };
    let main = table.outcome();
    Ok(if regime.status == Status::Fail { regime } else { main })
}

/// Route one: relations in the current algebra. Route two: the unbarred
/// dual space. Both must equal the Gaussian binomial and each other.
fn zbar_check(n: usize, max_deg: usize) -> Result<VerificationOutcome> {
    let route_one = zbar_character(n, max_deg);
    let expected = expected_zbar_table(n, max_deg);
    let fmt = |v: &[usize]| v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",");
    let mut want = Vec::new();
    let mut got = Vec::new();
    for l in 0..=n {
        let route_two: Vec<usize> = dual_space_dims(n, l, max_deg, DualMode::Unbarred)?.dims.iter().map(|&d| d as usize).collect();
        want.push(fmt(&expected[l]));
        got.push(format!("{}|{}", fmt(&route_one[l]), fmt(&route_two)));
        if route_one[l] != expected[l] || route_two != expected[l] {
            return Ok(VerificationOutcome::fail(
                fmt(&expected[l]),
                format!("zbar {} dual {}", fmt(&route_one[l]), fmt(&route_two)),
                format!("N={} l={}", n, l),
            ));
        }
    }
    if route_one[n + 1].iter().any(|&d| d != 0) {
        return Ok(VerificationOutcome::fail("0", fmt(&route_one[n + 1]), format!("N={} l={}", n, n + 1)));
    }
    Ok(VerificationOutcome::pass(want.join(";"), got.join(";")))
}

/// Runs checks on a pool of `jobs` threads (0 = one per core). Results
/// come back in canonical order. The flag is set if any check panicked.
pub fn run_checks(checks: Vec<Check>, ctx: &Ctx, jobs: usize, timings: bool) -> Result<(Vec<CheckResult>, bool)> {
    let pool = rayon::ThreadPoolBuilder::new().num_threads(jobs).build()?;
    let results: Vec<(CheckResult, bool)> = pool.install(|| {
        checks
            .par_iter()
            .map(|c| {
                let start = Instant::now();
                let res = catch_unwind(AssertUnwindSafe(|| (c.run)(ctx)));
                let elapsed_ms = if timings { start.elapsed().as_millis() as u64 } else { 0 };
                let (out, internal) = match res {
                    Ok(Ok(o)) => (o, false),
                    Ok(Err(e)) => (VerificationOutcome::fail("", "", format!("error: {:#}", e)), false),
                    Err(p) => {
                        let msg = p
                            .downcast_ref::<String>()
                            .cloned()
                            .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                            .unwrap_or_default();
                        (VerificationOutcome::fail("", "", format!("internal error: {}", msg)), true)
                    }
                };
                let result = CheckResult {
                    criterion: c.criterion,
                    check: c.name.clone(),
                    params: c.params.clone(),
                    status: out.status.as_str().to_string(),
                    expected: out.expected,
                    computed: out.computed,
                    detail: out.detail,
                    elapsed_ms,
                };
                (result, internal)
            })
            .collect()
    });
    let internal = results.iter().any(|(_, i)| *i);
    Ok((results.into_iter().map(|(r, _)| r).collect(), internal))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suites_resolve_by_name_and_number() {
        assert_eq!(resolve_suite("zbar", Level::Quick).unwrap(), vec![8]);
        assert_eq!(resolve_suite("12", Level::Quick).unwrap(), vec![12]);
        assert_eq!(resolve_suite("all", Level::Quick).unwrap().len(), 14);
        assert_eq!(resolve_suite("all", Level::Full).unwrap().len(), 15);
        assert!(resolve_suite("15", Level::Quick).is_err());
    }

    #[test]
    fn every_criterion_has_checks() {
        for k in 0..=14 {
            assert!(!criterion_checks(k, Level::Quick).is_empty(), "criterion {}", k);
        }
    }

    #[test]
    fn seeded_points_are_distinct_and_positive() {
        let ctx = Ctx::new(1e-9, Some(3));
        let c = ctx.generic_point(6);
        let mut v: Vec<_> = c.iter().cloned().collect();
        v.sort();
        v.dedup();
        assert_eq!(v.len(), 6);
        assert!(c.iter().all(|x| *x > rat(0)));
    }
}
