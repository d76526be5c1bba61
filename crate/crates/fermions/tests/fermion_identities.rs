//! Integration checks for the Grassmann realization, the kernel relations,
//! the cycle correspondence and the bigraded algebra of currents.

use mincyc_core::perm::sign_of;
use mincyc_core::MPoly;
use mincyc_fermions::*;
use proptest::prelude::*;

/// `[N, l]` coefficients by direct enumeration of `l`-subsets of
/// `{0..N−1}`, graded by `Σ a − l(l−1)/2`.
fn gaussian_by_subsets(n: usize, l: usize, max_deg: usize) -> Vec<usize> {
    let mut out = vec![0usize; max_deg + 1];
    if l > n {
        return out;
    }
    for mask in 0u32..(1 << n) {
        if mask.count_ones() as usize != l {
            continue;
        }
        let sum: usize = (0..n).filter(|i| mask & (1 << i) != 0).sum();
        let s = sum - l * l.saturating_sub(1) / 2;
        if s <= max_deg {
            out[s] += 1;
        }
    }
    out
}

#[test]
fn zbar_character_matches_subset_count() {
    for n in 1..=4 {
        let table = zbar_character(n, 6);
        for (l, row) in table.iter().enumerate() {
            assert_eq!(row, &gaussian_by_subsets(n, l, 6), "N={} l={}", n, l);
        }
    }
}

#[test]
fn zbar_character_matches_gaussian_binomial() {
    for n in 1..=4 {
        let out = verify_zbar_character(n, 6);
        assert!(out.is_pass(), "{:?}", out);
    }
}

#[test]
fn polynomial_representation() {
    for n in 1..=5 {
        let out = verify_polynomial_rep(n, 3);
        assert!(out.is_pass(), "N={}: {:?}", n, out);
    }
}

#[test]
fn kernel_relations() {
    for n in 1..=5 {
        let out = verify_kernel_relations(n);
        assert!(out.is_pass(), "N={}: {:?}", n, out);
    }
}

#[test]
fn correspondence_identities() {
    for n in 1..=5 {
        let out = verify_correspondence(n);
        assert!(out.is_pass(), "N={}: {:?}", n, out);
    }
}

#[test]
fn recursion_families() {
    for n in 1..=5 {
        let out = verify_appb_recursions(n);
        assert!(out.is_pass(), "N={}: {:?}", n, out);
    }
}

#[test]
fn kernel_current_is_nonzero_below_threshold() {
    // At N = 2 the lowest coefficient of I_1 is ψ-linear and survives.
    let coeffs = current_i(2, 1).unwrap();
    assert!(!coeffs[0].is_zero());
}

fn mask_strategy(n: usize) -> impl Strategy<Value = (u32, u32)> {
    (0u32..(1 << n), 0u32..(1 << n)).prop_map(|(a, b)| (a, b & !a))
}

proptest! {
    #[test]
    fn reorder_sign_is_permutation_sign((a, b) in mask_strategy(8)) {
        let mut word: Vec<usize> = mask_to_indices(a);
        word.extend(mask_to_indices(b));
        prop_assert_eq!(reorder_sign(a, b), sign_of(&word_rank(&word)));
    }

    #[test]
    fn grassmann_product_is_associative(a in 0u32..16, b in 0u32..16, c in 0u32..16) {
        let ctx = current_context(4);
        let m = |mask| GrassmannElem::monomial(4, mask, MPoly::one(&ctx));
        let lhs = m(a).mul(&m(b)).mul(&m(c));
        let rhs = m(a).mul(&m(b).mul(&m(c)));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn zmono_sign_is_permutation_sign(a in proptest::collection::btree_set(0u16..8, 0..4), b in proptest::collection::btree_set(0u16..8, 0..4)) {
        let ma = ZMono { xi: a.iter().copied().collect(), eta: vec![] };
        let mb = ZMono { xi: b.iter().copied().collect(), eta: vec![] };
        match ma.mul(&mb) {
            None => prop_assert!(a.intersection(&b).next().is_some()),
            Some((_, s)) => {
                let word: Vec<usize> = a.iter().chain(b.iter()).map(|&i| i as usize).collect();
                prop_assert_eq!(s, sign_of(&word_rank(&word)));
            }
        }
    }
}

/// Replaces each entry by its rank, giving a permutation of `0..len`.
fn word_rank(word: &[usize]) -> Vec<usize> {
    let mut sorted = word.to_vec();
    sorted.sort_unstable();
    word.iter().map(|w| sorted.iter().position(|s| s == w).unwrap()).collect()
}
