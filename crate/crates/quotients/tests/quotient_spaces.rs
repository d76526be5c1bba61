//! Integration tests for the graded cycle spaces, their quotients, the dual
//! functional spaces and the divisibility checks.

use mincyc_core::perm::{binomial, partitions};
use mincyc_core::rat;
use mincyc_cycles::{default_generic_point, is_minimal, named_cycle, wedge, NamedCycle};
use mincyc_quotients::space::{ext_to_cycle, ext_wedge, exponent_tuples};
use mincyc_quotients::*;
use proptest::prelude::*;

/// Number of partitions of `d` into at most `n` parts, counted by a
/// standard recursion rather than the generating series.
fn partitions_at_most(d: usize, n: usize) -> i64 {
    let mut p = vec![vec![0i64; n + 1]; d + 1];
    for k in 0..=n {
        p[0][k] = 1;
    }
    for m in 1..=d {
        for k in 1..=n {
            p[m][k] = p[m][k - 1] + if m >= k { p[m - k][k] } else { 0 };
        }
    }
    p[d][n]
}

#[test]
fn weight_zero_is_symmetric_polynomials() {
    for n in 1..=4 {
        let mut e = QuotientEngine::new(n);
        let t = char_w_truncated(&mut e, 0, 6).unwrap();
        let want: Vec<i64> = (0..=6).map(|d| partitions_at_most(d, n)).collect();
        assert_eq!(t.dims, want, "N={}", n);
    }
}

#[test]
fn w_table_starts_at_the_lowest_degree() {
    for n in 1..=4usize {
        for l in 0..=n {
            assert_eq!(min_degree(n, l), -((l * n - l * (l + 1) / 2) as i64));
            let b = graded_basis_w(n, l, min_degree(n, l) - 1).unwrap();
            assert_eq!(b.dim(), 0);
        }
    }
}

#[test]
fn small_character_grid() {
    for n in 1..=4usize {
        let mut e = QuotientEngine::new(n);
        for l in 0..=n {
            let w = char_w_truncated(&mut e, l, 4).unwrap();
            assert!(w.outcome().is_pass(), "{:?}", w.outcome());
            let m = char_m_truncated(&mut e, l, 4).unwrap();
            assert!(m.outcome().is_pass(), "{:?}", m.outcome());
            for r in 3..=5 {
                let t = char_m_restricted_truncated(&mut e, l, r, 4).unwrap();
                assert!(t.outcome().is_pass(), "r={} {:?}", r, t.outcome());
            }
        }
    }
}

#[test]
fn hand_computed_tables() {
    let mut e = QuotientEngine::new(2);
    let w = char_w_truncated(&mut e, 1, 3).unwrap();
    assert_eq!(w.degrees().zip(w.dims.iter().copied()).filter(|(d, _)| *d >= 0).map(|x| x.1).collect::<Vec<_>>(), vec![1, 2, 3, 4]);
    let m = char_m_truncated(&mut e, 1, 3).unwrap();
    assert_eq!(m.degrees().zip(m.dims.iter().copied()).filter(|(d, _)| *d >= 0).map(|x| x.1).collect::<Vec<_>>(), vec![0, 1, 1, 2]);
    // μ = 1 for r = 3, N = 3, l = 1: the character is q²/(q)_3.
    let mut e3 = QuotientEngine::new(3);
    let t = char_m_restricted_truncated(&mut e3, 1, 3, 4).unwrap();
    let dims: Vec<i64> = t.degrees().zip(t.dims.iter().copied()).filter(|(d, _)| *d >= 0).map(|x| x.1).collect();
    assert_eq!(dims, vec![0, 0, 1, 1, 2]);
}

#[test]
fn restricted_degenerates_for_large_r() {
    for n in 1..=4usize {
        let mut e = QuotientEngine::new(n);
        for l in 0..=n {
            let m = char_m_truncated(&mut e, l, 4).unwrap();
            // μ = r − 1 − N + 2l exceeds l for r ≥ N + 1 once l ≥ 1; at
            // l = 0 it takes r ≥ N + 2.
            let r_min = if l == 0 { n + 2 } else { n + 1 };
            for r in r_min.max(3)..=r_min.max(3) + 1 {
                let t = char_m_restricted_truncated(&mut e, l, r, 4).unwrap();
                assert_eq!(m.dims, t.dims, "N={} l={} r={}", n, l, r);
            }
        }
    }
}

#[test]
fn restricted_below_range_is_zero() {
    // N − 2l = 5 > r − 2 = 1 gives μ < 1.
    let mut e = QuotientEngine::new(5);
    let t = char_m_restricted_truncated(&mut e, 0, 3, 3).unwrap();
    assert!(t.dims.iter().all(|&x| x == 0));
    assert!(t.note.is_some());
    assert!(t.outcome().is_pass());
}

#[test]
fn basis_vectors_are_minimal_cycles() {
    for (n, l, d) in [(2, 1, 1), (3, 1, 0), (3, 2, 0), (3, 2, 1), (4, 2, 0)] {
        let b = graded_basis_w(n, l, d).unwrap();
        assert!(b.dim() > 0);
        for c in b.cycles() {
            c.check().unwrap();
            assert!(is_minimal(&c), "N={} l={} d={}", n, l, d);
            assert_eq!(c.homogeneous_degree(), Some(d));
        }
    }
}

#[test]
fn coordinate_wedge_matches_polynomial_wedge() {
    for n in 2..=4usize {
        let s1 = named_cycle(NamedCycle::Sigma1, n).unwrap();
        let s2 = named_cycle(NamedCycle::Sigma2, n).unwrap();
        let b = graded_basis_w(n, 1, 0).unwrap();
        for v in b.vectors.iter().take(2) {
            let ext = b.ambient.to_ext(v);
            let c = ext_to_cycle(n, 1, &ext);
            for s in [&s1, &s2].into_iter().filter(|s| s.l() < n) {
                let lhs = wedge(s, &c).unwrap();
                let rhs = ext_to_cycle(n, s.l() + 1, &ext_wedge(&s.exterior_coefficients(), &ext));
                assert_eq!(lhs.body(), rhs.body(), "N={} weight {}", n, s.l());
            }
        }
    }
}

#[test]
fn generic_dimensions() {
    for n in 1..=5usize {
        let c = default_generic_point(n);
        for l in 0..=n {
            let (dim, out) = dim_ec_m(n, l, &c, None).unwrap();
            assert!(out.is_pass(), "{:?}", out);
            assert_eq!(dim as i64, (binomial(n as i64, l as i64) - binomial(n as i64, l as i64 - 1)).max(0));
            for r in 3..=5 {
                let (_, out) = dim_ec_m(n, l, &c, Some(r)).unwrap();
                assert!(out.is_pass(), "r={} {:?}", r, out);
            }
        }
    }
}

#[test]
fn generic_dimension_is_the_rank_of_the_graded_character() {
    // Σ_d (dims of M) · (q)_N at q = 1 is the number of free generators,
    // which must equal the generic-point dimension.
    for (n, l) in [(2usize, 1usize), (3, 1), (4, 1), (4, 2)] {
        let numer = mincyc_quotients::character::kostka_or_zero(n as i64 - 2 * l as i64, n);
        let generators: i64 = mincyc_qchar::int_coeffs(&numer).iter().sum();
        let (dim, _) = dim_ec_m(n, l, &default_generic_point(n), None).unwrap();
        assert_eq!(dim as i64, generators, "N={} l={}", n, l);
    }
}

#[test]
fn dual_tables_match() {
    for n in 1..=3usize {
        for l in 0..=n + 1 {
            let u = dual_space_dims(n, l, 5, DualMode::Unbarred).unwrap();
            assert!(u.outcome().is_pass(), "{:?}", u.outcome());
            let b = dual_space_dims(n, l, 5, DualMode::Barred).unwrap();
            assert!(b.outcome().is_pass(), "{:?}", b.outcome());
        }
        for l in 1..=n {
            for r in 3..=5 {
                let t = dual_space_dims(n, l, 5, DualMode::Restricted { r }).unwrap();
                assert!(t.outcome().is_pass(), "{:?}", t.outcome());
            }
        }
    }
    let t = dual_space_dims(2, 1, 3, DualMode::Barred).unwrap();
    assert_eq!(t.dims, vec![0, 1, 0, 0]);
}

#[test]
fn divisibility_on_all_partitions() {
    for n in 1..=3usize {
        for l in 1..=2usize {
            for lam in partitions(l, l, l) {
                let out = factor_divisibility_check(n, l, &lam, DualMode::Barred, 6).unwrap();
                assert!(out.is_pass(), "{:?}", out);
                for r in 3..=n + 2 {
                    let mu = restriction_mu(n, l, r);
                    if mu >= 1 {
                        let out = factor_divisibility_check(n, l, &lam, DualMode::Restricted { r }, 6).unwrap();
                        assert!(out.is_pass(), "{:?}", out);
                    }
                }
            }
        }
    }
    assert!(factor_divisibility_check(3, 2, &[1], DualMode::Barred, 2).is_err());
}

#[test]
fn free_basis_determinant() {
    for n in 1..=3usize {
        for l in 1..=n {
            let out = verify_free_determinant(n, l).unwrap();
            assert!(out.is_pass(), "{:?}", out);
        }
    }
}

#[test]
fn exponent_tuples_are_strictly_decreasing() {
    for n in 1..=5usize {
        for l in 0..=n {
            let ts = exponent_tuples(n, l);
            assert_eq!(ts.len() as i64, binomial(n as i64, l as i64));
            assert!(ts.iter().all(|j| j.windows(2).all(|w| w[0] > w[1]) && j.iter().all(|&x| (x as usize) < n)));
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn coordinates_round_trip(n in 1usize..=4, l_seed in 0usize..5, d in -3i64..3, seed in proptest::collection::vec(-5i64..5, 64)) {
        let l = l_seed % (n + 1);
        let amb = Ambient::new(n, l, d);
        let v: Vec<_> = (0..amb.len()).map(|i| rat(seed[i % seed.len()])).collect();
        prop_assert_eq!(amb.coords(&amb.to_ext(&v)), v);
    }

    #[test]
    fn wedge_is_graded_commutative(n in 2usize..=4, a in 0usize..3, b in 0usize..3) {
        let s1 = named_cycle(NamedCycle::Sigma1, n).unwrap().exterior_coefficients();
        let s2 = named_cycle(NamedCycle::Sigma2, n).unwrap().exterior_coefficients();
        let pick = |k: usize| if k % 2 == 0 { (1usize, s1.clone()) } else { (2usize, s2.clone()) };
        let ((la, ea), (lb, eb)) = (pick(a), pick(b));
        prop_assume!(la + lb <= n);
        let ab = ext_wedge(&ea, &eb);
        let ba = ext_wedge(&eb, &ea);
        let sign = if (la * lb) % 2 == 0 { 1 } else { -1 };
        for (j, p) in &ab {
            let q = ba.get(j).cloned().unwrap_or_else(|| p.scale(&mincyc_core::GaussianRational::from_int(0)));
            prop_assert_eq!(p.clone(), q.scale(&mincyc_core::GaussianRational::from_int(sign)));
        }
        prop_assert_eq!(ab.len(), ba.len());
    }
}
