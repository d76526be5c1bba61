//! Integration tests for path counting and the numeric representation
//! layer.

use mincyc_paths::q3j::{all_path_vectors, bilinear};
use mincyc_paths::*;
use proptest::prelude::*;

const TOL: f64 = DEFAULT_TOLERANCE;

#[test]
fn classical_counts_agree_for_n_up_to_twelve() {
    for n in 1..=12 {
        for m in 0..=n as i64 {
            let out = verify_classical_count(n, m);
            assert!(out.is_pass(), "{:?}", out);
        }
    }
}

#[test]
fn restricted_counts_agree_on_the_full_grid() {
    for r in 3..=6 {
        for n in 1..=12 {
            for m in 0..=n as i64 {
                let (_, out) = count_restricted(r, n, m);
                assert!(out.is_pass(), "{:?}", out);
            }
        }
    }
    assert_eq!(count_restricted(3, 3, 1).0, 1);
}

#[test]
fn restricted_counts_grow_with_r_and_stabilize() {
    for n in 1..=10usize {
        for m in 0..=n as i64 {
            let classical = count_paths(n, m, Restriction::Classical);
            let mut prev = 0;
            for r in 3..=n + 4 {
                let c = count_paths(n, m, Restriction::Level(r));
                assert!(c >= prev);
                if r - 2 >= n {
                    assert_eq!(c, classical, "N={} m={} r={}", n, m, r);
                }
                prev = c;
            }
        }
    }
}

#[test]
fn path_vectors_are_orthonormal() {
    for n in 1..=6 {
        let out = verify_orthonormal(n, generic_q(), TOL).unwrap();
        assert!(out.is_pass(), "{:?}", out);
    }
}

#[test]
fn path_vectors_are_highest_weight() {
    for n in 1..=6 {
        for out in verify_highest_weight(n, generic_q(), TOL).unwrap() {
            assert!(out.is_pass(), "{:?}", out);
        }
    }
}

#[test]
fn special_path_coefficients() {
    for n in 2..=7 {
        for l in 0..=n / 2 {
            let out = verify_special_coefficients(n, l, generic_q(), TOL).unwrap();
            assert!(out.is_pass(), "{:?}", out);
        }
    }
}

#[test]
fn coefficients_have_unit_bilinear_norm() {
    let q = generic_q();
    for n in 1..=6 {
        for (p, m, v) in all_path_vectors(n, q).unwrap() {
            if m != p.weight() {
                continue;
            }
            let l = (n as i64 - p.weight()) / 2;
            let mut sum = Scalar::new(0.0, 0.0);
            for code in 0..(1usize << n) {
                let set: Vec<usize> = (1..=n).filter(|k| code >> (n - k) & 1 == 1).collect();
                if set.len() as i64 == l {
                    let c = coeff_cjm(&p, &set, q).unwrap();
                    sum += c * c;
                }
            }
            assert!((sum - Scalar::new(1.0, 0.0)).norm() < TOL, "{}", p.display());
            assert!((bilinear(&v, &v) - sum).norm() < TOL);
        }
    }
}

#[test]
fn rsos_weights() {
    for r in 3..=6 {
        assert!(verify_identity_at_zero(r).is_pass());
    }
    for r in [4, 5] {
        let out = verify_face_ybe(r, 20, 2024, TOL);
        assert!(out.is_pass(), "{:?}", out);
    }
}

#[test]
fn face_ybe_detects_a_perturbed_weight() {
    // Doubling the spectral argument of the crossed weight alone breaks the
    // relation, so the residual test is not vacuous.
    assert!(ybe_residual(5, 0.3, 0.7) < 1e-12);
    let perturbed = ybe_residual_for(5, 0.3, 0.7, |quad, beta| {
        let w = rsos_weight(5, quad, beta)?;
        Ok(match mincyc_paths::rsos::face_type(quad)? {
            FaceType::Crossed => rsos_weight(5, quad, 2.0 * beta)?,
            _ => w,
        })
    });
    assert!(perturbed > 1e-3, "{}", perturbed);
}

#[test]
fn root_modules() {
    for r in 3..=6 {
        for out in verify_all_modules(r, 1e-10).unwrap() {
            assert!(out.is_pass(), "{:?}", out);
        }
        let (m, _) = root_module(ModuleKind::X, r, 0, 1, 1e-10).unwrap();
        assert_eq!(m.dim(), 2 * r);
        let (m, _) = root_module(ModuleKind::W, r, 1, -1, 1e-10).unwrap();
        assert_eq!(m.dim(), r);
    }
    assert!(root_module(ModuleKind::X, 4, 3, 1, 1e-10).is_err());
}

#[test]
fn good_and_bad_dimensions() {
    for r in 3..=6 {
        for n in 1..=12 {
            let out = verify_goodbad(r, n);
            assert!(out.is_pass(), "{:?}", out);
        }
    }
    let g = goodbad_dims(5, 1);
    assert_eq!((g.dim_good(), g.dim_bad()), (2, 0));
}

#[test]
fn rplus_and_pi_preserve_omega() {
    for n in 2..=6 {
        for l in 0..=n / 2 {
            for r in 3..=6 {
                for out in rplus_pi(n, l, r, TOL) {
                    assert!(out.is_pass(), "{:?}", out);
                }
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn fused_states_have_unit_norm(tj in 0i64..8, k in 0i64..8, up in any::<bool>()) {
        // The new state |j±½, m+½⟩ has bilinear norm 1.
        let tm = -tj + 2 * (k % (tj + 1));
        let q = generic_q();
        let branch = if up { Branch::Up } else { Branch::Down };
        prop_assume!(up || tj >= 1);
        prop_assume!((tm + 1).abs() <= if up { tj + 1 } else { tj - 1 });
        let a = q3j(tj, branch, tm, 1, q).unwrap();
        let b = q3j(tj, branch, tm + 2, -1, q).unwrap();
        prop_assert!((a * a + b * b - Scalar::new(1.0, 0.0)).norm() < 1e-10);
    }

    #[test]
    fn enumeration_matches_transfer(n in 1usize..=10, m in 0i64..=10, r in 3usize..=7) {
        let listed = enumerate_paths(n, m, Restriction::Level(r));
        prop_assert_eq!(listed.len() as u128, count_paths(n, m, Restriction::Level(r)));
        prop_assert!(listed.windows(2).all(|w| w[0] < w[1]));
        prop_assert!(listed.iter().all(|p| p.is_restricted(r) && p.weight() == m));
    }
}
