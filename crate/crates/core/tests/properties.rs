use std::sync::Arc;

use mincyc_core::{
    frac, nullspace_rank, rat, Field, GaussianRational, MPoly, QSeries, SparseMatrix, VarContext,
};
use proptest::prelude::*;

fn ctx() -> Arc<VarContext> {
    VarContext::cycle(3, 2)
}

/// A random polynomial with small integer coefficients and exponents.
fn poly_strategy(max_terms: usize) -> impl Strategy<Value = MPoly> {
    prop::collection::vec((prop::collection::vec(0u16..3, 5), -4i64..5, -2i64..3), 0..max_terms).prop_map(
        |terms| {
            let c = ctx();
            let mut p = MPoly::zero(&c);
            for (e, re, im) in terms {
                let coef = GaussianRational::new(rat(re), rat(im));
                p = &p + &MPoly::monomial(&c, e, coef);
            }
            p
        },
    )
}

fn series_strategy() -> impl Strategy<Value = QSeries> {
    (-3i64..3, prop::collection::vec(-5i64..6, 0..6), 4i64..9).prop_map(|(lo, cs, t)| {
        QSeries::new(false, lo, cs.into_iter().map(rat).collect(), Some(t))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_laws(a in poly_strategy(5), b in poly_strategy(5), c in poly_strategy(4)) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
    }

    #[test]
    fn divide_after_multiply_recovers(p in poly_strategy(5), d in poly_strategy(4)) {
        prop_assume!(!d.is_zero());
        let prod = &p * &d;
        prop_assert_eq!(prod.exact_divide(&d).unwrap(), p);
    }

    #[test]
    fn skew_is_projector_up_to_factorial(p in poly_strategy(6)) {
        let xs = [0usize, 1, 2];
        let s = p.skew_symmetrize(&xs);
        prop_assert_eq!(s.skew_symmetrize(&xs), s.scale(&GaussianRational::from_int(6)));
        prop_assert!(s.is_skew_in(&xs));
    }

    #[test]
    fn nullspace_vectors_are_annihilated(
        rows in prop::collection::vec(prop::collection::vec((-2i64..3, -1i64..2), 5), 1..5)
    ) {
        let dense: Vec<Vec<GaussianRational>> = rows
            .iter()
            .map(|r| r.iter().map(|&(a, b)| GaussianRational::new(rat(a), rat(b))).collect())
            .collect();
        let m = SparseMatrix::from_dense(&dense);
        let (rank, basis) = nullspace_rank(&m);
        prop_assert_eq!(rank + basis.len(), 5);
        for v in &basis {
            prop_assert!(m.apply(v).iter().all(|x| Field::is_zero(x)));
        }
    }

    #[test]
    fn series_ring_laws(a in series_strategy(), b in series_strategy(), c in series_strategy()) {
        let lhs = &(&a + &b) * &c;
        let rhs = &(&a * &c) + &(&b * &c);
        let t = lhs.trunc_order().unwrap().min(rhs.trunc_order().unwrap());
        prop_assert_eq!(lhs.truncate(t), rhs.truncate(t));
        prop_assert_eq!(&a * &b, &b * &a);
    }

    #[test]
    fn series_times_inverse_is_one(a in series_strategy()) {
        prop_assume!(!a.is_zero());
        let inv = a.invert_unit().unwrap();
        let p = &a * &inv;
        let t = p.trunc_order().unwrap();
        prop_assert_eq!(p, QSeries::one().truncate(t));
    }
}

#[test]
fn half_integer_coefficients_render_as_fractions() {
    let s = QSeries::poly(true, -1, vec![frac(1, 2), rat(0), rat(3)]);
    assert_eq!(s.to_string(), "1/2*q^(-1/2) + 3*q^(1/2)");
}
