use mincyc_core::QSeries;
use mincyc_qchar::virasoro::{sector_lhs, first_difference};
use mincyc_qchar::*;
use num_traits::{Signed, ToPrimitive};

/// Number of height sequences `j_1 = 1/2, j_{n+1} = j_n ± 1/2`, `j_n >= 0`,
/// with `2 j_n <= cap`, ending at `2 j_N = m`. Written in doubled heights.
fn path_count(n: usize, m: usize, cap: usize) -> i64 {
    let mut cur = vec![0i64; cap + 2];
    if cap >= 1 {
        cur[1] = 1;
    } else {
        return 0;
    }
    for _ in 1..n {
        let mut next = vec![0i64; cap + 2];
        for h in 0..=cap {
            if cur[h] == 0 {
                continue;
            }
            if h + 1 <= cap {
                next[h + 1] += cur[h];
            }
            if h >= 1 {
                next[h - 1] += cur[h];
            }
        }
        cur = next;
    }
    if m <= cap {
        cur[m]
    } else {
        0
    }
}

fn at_one(p: &QPoly) -> i64 {
    p.eval_at_one().to_integer().to_i64().unwrap()
}

#[test]
fn binomial_symmetry_and_pascal() {
    for n in 0..10i64 {
        for l in 0..=n {
            let b = gaussian_binomial(n, l);
            assert_eq!(b, gaussian_binomial(n, n - l));
            let c = int_coeffs(&b);
            assert_eq!(c.len() as i64 - 1, l * (n - l));
            let mut rev = c.clone();
            rev.reverse();
            assert_eq!(c, rev, "palindromic");
            assert!(c.iter().all(|&x| x >= 0));
            if n >= 1 {
                let rhs = &gaussian_binomial(n - 1, l - 1) + &gaussian_binomial(n - 1, l).shift(l);
                assert_eq!(b, rhs);
            }
        }
    }
}

#[test]
fn fermionic_equals_closed_form_up_to_twelve() {
    for n in 0..=12usize {
        for m in 0..=n as i64 + 1 {
            let f = kostka_fermionic(m, &vec![1; n]);
            assert_eq!(f, kostka_closed(m, n as i64), "m={} N={}", m, n);
        }
    }
}

#[test]
fn restricted_fermionic_equals_alternating_sum() {
    for k in 1..=4usize {
        for n in 0..=10usize {
            for m in 0..=k as i64 {
                assert_eq!(
                    restricted_kostka(k, m, n),
                    restricted_kostka_altsum(k, m, n),
                    "k={} m={} N={}",
                    k,
                    m,
                    n
                );
            }
        }
    }
}

#[test]
fn restricted_at_one_counts_paths() {
    for r in 3..=6usize {
        for n in 1..=12usize {
            for m in 0..=r - 2 {
                let k = restricted_kostka(r - 2, m as i64, n);
                assert_eq!(at_one(&k), path_count(n, m, r - 2), "r={} N={} m={}", r, n, m);
            }
        }
    }
}

#[test]
fn large_level_recovers_unrestricted() {
    for n in 0..=8usize {
        for m in 0..=n as i64 {
            assert_eq!(restricted_kostka(n.max(1), m, n), kostka_closed(m, n as i64));
            // Only the i = 0 term survives in the alternating sum.
            assert_eq!(restricted_kostka_altsum(n.max(1), m, n), kostka_closed(m, n as i64));
        }
    }
}

#[test]
fn sector_identity_grid() {
    for r in 3..=4i64 {
        for m in 0..=r - 2 {
            for l in 0..=3i64 {
                let out = verify_vir_identity(r, m, l, 10);
                assert!(out.is_pass(), "r={} m={} L={}: {:?}", r, m, l, out.detail);
            }
            assert!(verify_vir_single_term(r, m, 10).is_pass());
        }
    }
}

#[test]
fn sector_window_is_closed() {
    // Doubling the order leaves the coefficients below the old order intact.
    for (r, m, l) in [(3, 1, 3), (4, 2, 2), (4, 0, 1)] {
        let (a, _) = sector_lhs(r, m, l, 10);
        let (b, _) = sector_lhs(r, m, l, 20);
        assert_eq!(first_difference(&a, &b, 20), None);
    }
}

#[test]
fn characters_have_nonnegative_integer_coefficients() {
    for r in 3..=6i64 {
        for b in 1..r {
            for a in 1..=r {
                let s = virasoro_char(VirasoroParams::new(r, b, a), 25);
                assert!(s.is_integral());
                assert!(s.coeffs().iter().all(|c| !c.is_negative()), "r={} b={} a={}", r, b, a);
            }
        }
    }
}

#[test]
fn finitization_stabilizes() {
    for r in 3..=5i64 {
        for b in 1..r {
            for a in 1..=r {
                for l in (8..=16i64).filter(|l| (l - b + a) % 2 == 0) {
                    let p = VirasoroParams::new(r, b, a);
                    let fin = abf_finitized(p, l, false);
                    let order = l / 4;
                    let chi = virasoro_char(p, order.max(1));
                    for e in 0..order {
                        assert_eq!(fin.coeff(e), chi.coeff(e), "r={} b={} a={} L={} e={}", r, b, a, l, e);
                    }
                }
            }
        }
    }
}

#[test]
fn sector_character_at_zero_is_a_virasoro_character() {
    // q^{offset} · series at L = 0 must equal q^{h_{m+1,1}} χ̂_{m+1,1}.
    for r in 3..=5i64 {
        for m in 0..=r - 2 {
            let (offset, series) = rsg_sector_char(r, m, 0, 8);
            let p = VirasoroParams::new(r, m + 1, 1);
            assert_eq!(offset, p.weight());
            let chi = virasoro_char(p, 8).to_half();
            assert_eq!(first_difference(&series, &chi, 16), None);
        }
    }
}

#[test]
fn lemma_iden_grid() {
    for n in 0..=8i64 {
        assert!(verify_lemma_iden(n, n + 2).is_pass(), "N={}", n);
    }
}

#[test]
fn empty_tensor_power_has_only_weight_zero() {
    for k in 1..=4usize {
        for m in 0..=k as i64 {
            let expect = if m == 0 { QSeries::one() } else { QSeries::zero() };
            assert_eq!(restricted_kostka(k, m, 0), expect);
        }
    }
}
