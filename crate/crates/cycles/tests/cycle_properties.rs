//! Property tests for the cycle layer, each compared against an independent
//! brute-force route.

use mincyc_cycles::{
    cmap, evaluate_ec, is_minimal, named_cycle, wedge, default_generic_point, CyclePoly, NamedCycle,
};
use mincyc_core::perm::{combinations, factorial, partitions};
use mincyc_core::{frac, rat, BigRational, Echelon, GaussianRational, MPoly, VarContext};
use proptest::prelude::*;

/// `Skew(P1(X1..Xl1) P2(X_{l1+1}..Xl)) / (l1! l2!)`, summed over all of
/// `S_l` instead of over shuffles.
fn wedge_by_full_skew(p1: &CyclePoly, p2: &CyclePoly) -> MPoly {
    let n = p1.n();
    let (l1, l2) = (p1.l(), p2.l());
    let l = l1 + l2;
    let ctx = VarContext::cycle(l, n);
    let m1: Vec<Option<usize>> = (0..l1).map(Some).chain((0..n).map(|j| Some(l + j))).collect();
    let m2: Vec<Option<usize>> = (0..l2).map(|i| Some(l1 + i)).chain((0..n).map(|j| Some(l + j))).collect();
    let prod = &p1.body().embed(&ctx, &m1) * &p2.body().embed(&ctx, &m2);
    let xs: Vec<usize> = (0..l).collect();
    let norm = (factorial(l1) * factorial(l2)) as i64;
    prod.skew_symmetrize(&xs).scale(&GaussianRational::from_frac(1, norm))
}

/// A cycle built from a small integer combination of `cmap` values,
/// symmetrized in the `z` variables.
fn cycle_from(n: usize, l: usize, coeffs: &[i64]) -> CyclePoly {
    let mut acc = CyclePoly::zero(n, l);
    for (subset, &c) in combinations(n, l).iter().zip(coeffs.iter().cycle()) {
        let word: Vec<usize> = subset.iter().map(|m| m + 1).collect();
        acc = acc.add(&cmap(n, &word).unwrap().scale(&GaussianRational::from_int(c)));
    }
    let zs: Vec<usize> = (l..l + n).collect();
    CyclePoly::new(n, l, acc.body().symmetrize(&zs)).unwrap()
}

/// Evaluates `P(X1 = 1/t, X2.., z1 = t, z2 = −t, z3..)` numerically at a
/// rational point, without clearing denominators symbolically.
fn minimality_at_point(p: &CyclePoly, t: &BigRational, rest_x: &[BigRational], rest_z: &[BigRational]) -> GaussianRational {
    let l = p.l();
    let mut vals: Vec<GaussianRational> = Vec::new();
    vals.push(GaussianRational::from_real(num_traits::Inv::inv(t.clone())));
    vals.extend(rest_x.iter().cloned().map(GaussianRational::from_real));
    vals.push(GaussianRational::from_real(t.clone()));
    vals.push(GaussianRational::from_real(-t.clone()));
    vals.extend(rest_z.iter().cloned().map(GaussianRational::from_real));
    assert_eq!(vals.len(), l + p.n());
    let mut acc = p.body().clone();
    for (i, v) in vals.iter().enumerate() {
        acc = acc.eval_var(i, v);
    }
    acc.constant_term()
}

fn brute_minimal(p: &CyclePoly) -> bool {
    let (n, l) = (p.n(), p.l());
    let ts = [frac(1, 2), rat(3), frac(-5, 7), rat(11), frac(13, 3), rat(-2), frac(7, 5)];
    let extra = [rat(5), frac(2, 3), rat(-7), frac(9, 4), rat(17)];
    for (k, t) in ts.iter().enumerate() {
        let rest_x: Vec<BigRational> = (0..l - 1).map(|i| &extra[(i + k) % 5] + rat(i as i64)).collect();
        let rest_z: Vec<BigRational> = (0..n - 2).map(|i| &extra[(i + 2 * k + 1) % 5] - rat(i as i64)).collect();
        if !num_traits::Zero::is_zero(&minimality_at_point(p, t, &rest_x, &rest_z)) {
            return false;
        }
    }
    true
}

/// The monomial basis `X^a m_λ(z)` of `C_{N,1}` up to a total z-degree.
fn c_n1_basis(n: usize, max_z_deg: usize) -> Vec<CyclePoly> {
    let ctx = VarContext::cycle(1, n);
    let zs: Vec<usize> = (1..=n).collect();
    let mut out = Vec::new();
    for a in 0..n {
        for d in 0..=max_z_deg {
            for lambda in partitions(d, n, d.max(1)) {
                let mut e = vec![0u16; n + 1];
                e[0] = a as u16;
                for (j, &part) in lambda.iter().enumerate() {
                    e[1 + j] = part as u16;
                }
                let mono = MPoly::monomial(&ctx, e, GaussianRational::from_int(1));
                out.push(CyclePoly::new(n, 1, mono.symmetrize(&zs)).unwrap());
            }
        }
    }
    out
}

#[test]
fn minimality_agrees_with_numeric_substitution_on_monomial_basis() {
    for n in 2..=4usize {
        let basis = c_n1_basis(n, 3);
        for b in &basis {
            assert_eq!(is_minimal(b), brute_minimal(b), "N={} basis element {}", n, b);
        }
        let sigma = named_cycle(NamedCycle::Sigma1, n).unwrap();
        assert!(brute_minimal(&sigma));
        // Adding a non-minimal basis element must break minimality.
        let mixed = sigma.add(&basis[0]);
        assert_eq!(is_minimal(&mixed), brute_minimal(&mixed));
        assert!(!is_minimal(&mixed));
    }
}

#[test]
fn named_cycles_pass_numeric_minimality() {
    for n in 2..=5usize {
        for kind in [NamedCycle::Sigma1, NamedCycle::Sigma2, NamedCycle::Gamma1 { r: n as i64 }, NamedCycle::Gamma2] {
            let c = named_cycle(kind, n).unwrap();
            assert!(brute_minimal(&c), "{:?} N={}", kind, n);
        }
    }
}

#[test]
fn degree_n_terms_cancel_in_sigmas() {
    for n in 1..=5usize {
        let s1 = named_cycle(NamedCycle::Sigma1, n).unwrap();
        assert!((s1.body().degree_in(0).unwrap_or(0) as usize) < n);
        if n >= 2 {
            let s2 = named_cycle(NamedCycle::Sigma2, n).unwrap();
            for x in 0..2 {
                assert!((s2.body().degree_in(x).unwrap_or(0) as usize) < n);
            }
        }
    }
}

#[test]
fn sigma1_wedge_itself_vanishes() {
    for n in 2..=5usize {
        let s = named_cycle(NamedCycle::Sigma1, n).unwrap();
        assert!(wedge(&s, &s).unwrap().is_zero());
    }
}

#[test]
fn wedge_of_minimal_cycles_is_minimal() {
    for n in 2..=5usize {
        let s1 = named_cycle(NamedCycle::Sigma1, n).unwrap();
        let g1 = named_cycle(NamedCycle::Gamma1 { r: n as i64 }, n).unwrap();
        let p = wedge(&s1, &g1).unwrap();
        assert!(is_minimal(&p) && brute_minimal(&p), "N={}", n);
        if n >= 3 {
            let s2 = named_cycle(NamedCycle::Sigma2, n).unwrap();
            let q = wedge(&s2, &g1).unwrap();
            assert!(is_minimal(&q) && brute_minimal(&q), "N={}", n);
        }
    }
}

#[test]
fn wedge_with_too_many_x_is_rejected() {
    let s = named_cycle(NamedCycle::Sigma2, 3).unwrap();
    assert!(wedge(&s, &s).is_err());
}

#[test]
fn wedge_with_unit_is_identity() {
    for n in 1..=4usize {
        let s = named_cycle(NamedCycle::Sigma1, n).unwrap();
        assert_eq!(wedge(&CyclePoly::one(n), &s).unwrap(), s);
        assert_eq!(wedge(&s, &CyclePoly::one(n)).unwrap(), s);
    }
}

/// `cmap` is injective on each fixed-`l` block: at the default generic
/// point the images of the `C(N, l)` monomials are linearly independent.
#[test]
fn cmap_is_injective_at_a_generic_point() {
    for n in 1..=4usize {
        let c = default_generic_point(n);
        for l in 0..=n {
            let words: Vec<Vec<usize>> =
                combinations(n, l).into_iter().map(|s| s.iter().map(|m| m + 1).collect()).collect();
            let images: Vec<MPoly> =
                words.iter().map(|w| evaluate_ec(&cmap(n, w).unwrap(), &c, true).unwrap()).collect();
            let mut monos: Vec<_> = images.iter().flat_map(|p| p.terms().keys().cloned()).collect();
            monos.sort();
            monos.dedup();
            let mut ech = Echelon::<GaussianRational>::new(monos.len());
            for p in &images {
                let row: Vec<GaussianRational> = monos.iter().map(|m| p.coeff(m)).collect();
                ech.insert(&mincyc_core::linalg::sparsify(&row));
            }
            assert_eq!(ech.rank(), words.len(), "N={} l={}", n, l);
        }
    }
}

#[test]
fn generic_point_rejects_vanishing_factors() {
    let s = named_cycle(NamedCycle::Sigma1, 3).unwrap();
    let err = evaluate_ec(&s, &[rat(1), rat(-1), rat(2)], true).unwrap_err();
    assert!(err.to_string().contains("c1 + c2"), "{}", err);
    let err = evaluate_ec(&s, &[rat(1), rat(0), rat(2)], true).unwrap_err();
    assert!(err.to_string().contains("c2"), "{}", err);
    assert!(evaluate_ec(&s, &[rat(1), rat(-1), rat(2)], false).is_ok());
    let one = CyclePoly::one(3);
    assert_eq!(evaluate_ec(&one, &default_generic_point(3), true).unwrap().to_string(), "1");
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn wedge_matches_normalized_full_skew(n in 2usize..=4, l1 in 0usize..=2, l2 in 0usize..=2,
                                          c1 in prop::collection::vec(-3i64..=3, 1..4),
                                          c2 in prop::collection::vec(-3i64..=3, 1..4)) {
        prop_assume!(l1 + l2 <= n);
        let p1 = cycle_from(n, l1, &c1);
        let p2 = cycle_from(n, l2, &c2);
        let w = wedge(&p1, &p2).unwrap();
        prop_assert_eq!(w.body(), &wedge_by_full_skew(&p1, &p2));
        prop_assert!(w.check().is_ok());
    }

    #[test]
    fn wedge_is_graded_commutative(n in 2usize..=4, l1 in 0usize..=2, l2 in 0usize..=2,
                                   c1 in prop::collection::vec(-3i64..=3, 1..4),
                                   c2 in prop::collection::vec(-3i64..=3, 1..4)) {
        prop_assume!(l1 + l2 <= n);
        let p1 = cycle_from(n, l1, &c1);
        let p2 = cycle_from(n, l2, &c2);
        let a = wedge(&p1, &p2).unwrap();
        let b = wedge(&p2, &p1).unwrap();
        let sign = if (l1 * l2) % 2 == 0 { 1 } else { -1 };
        prop_assert_eq!(a, b.scale(&GaussianRational::from_int(sign)));
    }

    #[test]
    fn wedge_is_associative(n in 3usize..=4, c in prop::collection::vec(-2i64..=2, 3..6)) {
        let p1 = cycle_from(n, 1, &c);
        let p2 = cycle_from(n, 1, &c[1..]);
        let p3 = cycle_from(n, 1, &c[2..]);
        let left = wedge(&wedge(&p1, &p2).unwrap(), &p3).unwrap();
        let right = wedge(&p1, &wedge(&p2, &p3).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn wedge_degree_is_additive(n in 2usize..=5) {
        let s1 = named_cycle(NamedCycle::Sigma1, n).unwrap();
        let g1 = named_cycle(NamedCycle::Gamma1 { r: n as i64 }, n).unwrap();
        let w = wedge(&s1, &g1).unwrap();
        prop_assert_eq!(w.homogeneous_degree(), Some(1));
    }

    #[test]
    fn cmap_images_are_skew_and_degree_bounded(n in 1usize..=4, seed in 0usize..16) {
        let l = seed % (n + 1);
        let subsets = combinations(n, l);
        let s = &subsets[seed % subsets.len()];
        let word: Vec<usize> = s.iter().map(|m| m + 1).collect();
        let c = cmap(n, &word).unwrap();
        prop_assert!(c.body().is_skew_in(&c.x_vars()));
        for x in c.x_vars() {
            prop_assert!((c.body().degree_in(x).unwrap_or(0) as usize) < n.max(1));
        }
    }
}
