//! The map `C_N` from fermionic monomials `ψ_{m1}⋯ψ_{ml} v₊^{⊗N}` to cycles.

use std::sync::Arc;

use mincyc_core::{GaussianRational, MPoly, VarContext};

use crate::cycle::CyclePoly;
use crate::error::CycleError;

/// `G_m(X_x) = Π_{j<m}(1 + z_j X_x) Π_{j>m}(1 − z_j X_x)` in `ctx`, whose `z`
/// block starts at `z0`. `m` is 1-based.
pub fn g_poly(ctx: &Arc<VarContext>, x: usize, z0: usize, n: usize, m: usize) -> MPoly {
    let mut acc = MPoly::one(ctx);
    for j in 1..=n {
        if j == m {
            continue;
        }
        let mut e = vec![0u16; ctx.len()];
        e[x] = 1;
        e[z0 + j - 1] = 1;
        let sign = if j < m { 1 } else { -1 };
        acc = &acc * &(&MPoly::one(ctx) + &MPoly::monomial(ctx, e, GaussianRational::from_int(sign)));
    }
    acc
}

/// `C_N(ψ_{m1}⋯ψ_{ml}) = Skew(G_{m1}(X1)⋯G_{ml}(Xl))` for 1-based indices.
///
/// The empty word maps to the constant cycle `1`. A single image is skew in
/// `X` with degree below `N` in each `X_p`; symmetry in `z` holds only for
/// the combinations coming from symmetric fermionic elements, so the result
/// is not validated against that invariant.
pub fn cmap(n: usize, word: &[usize]) -> Result<CyclePoly, CycleError> {
    let l = word.len();
    if l > n {
        return Err(CycleError::TooManyX { l, n });
    }
    for &m in word {
        if m == 0 || m > n {
            return Err(CycleError::IndexOutOfRange { m, n });
        }
    }
    let ctx = VarContext::cycle(l, n);
    let mut prod = MPoly::one(&ctx);
    for (p, &m) in word.iter().enumerate() {
        prod = &prod * &g_poly(&ctx, p, l, n, m);
    }
    let xs: Vec<usize> = (0..l).collect();
    Ok(CyclePoly::from_body_unchecked(n, l, prod.skew_symmetrize(&xs)))
}

/// The coefficient matrix `G_{mj}` with `G_m(X) = Σ_j G_{mj} X^j`, entries in
/// `z1..zN`; rows `m = 1..N`, columns `j = 0..N−1`.
pub fn g_matrix(n: usize) -> Vec<Vec<MPoly>> {
    let ctx = VarContext::cycle(1, n);
    let zctx = VarContext::cycle(0, n);
    (1..=n)
        .map(|m| {
            let by_power = g_poly(&ctx, 0, 1, n, m).collect_in(0);
            (0..n)
                .map(|j| {
                    let map: Vec<Option<usize>> = std::iter::once(None).chain((0..n).map(Some)).collect();
                    by_power.get(&(j as u16)).map_or(MPoly::zero(&zctx), |p| p.embed(&zctx, &map))
                })
                .collect()
        })
        .collect()
}

/// Determinant of a square polynomial matrix by fraction-free (Bareiss)
/// elimination with row pivoting.
pub fn det_poly(mut a: Vec<Vec<MPoly>>) -> Result<MPoly, CycleError> {
    let n = a.len();
    assert!(a.iter().all(|r| r.len() == n), "square matrix expected");
    if n == 0 {
        panic!("determinant of an empty matrix needs a context");
    }
    let ctx = a[0][0].ctx().clone();
    let mut sign = 1i64;
    let mut prev = MPoly::one(&ctx);
    for k in 0..n {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                Some(i) => {
                    a.swap(k, i);
                    sign = -sign;
                }
                None => return Ok(MPoly::zero(&ctx)),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &(&a[i][j] * &a[k][k]) - &(&a[i][k] * &a[k][j]);
                a[i][j] = num.exact_divide(&prev)?;
            }
        }
        prev = a[k][k].clone();
    }
    Ok(a[n - 1][n - 1].scale(&GaussianRational::from_int(sign)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_and_single_words() {
        assert_eq!(cmap(3, &[]).unwrap().to_string(), "1");
        assert_eq!(cmap(1, &[1]).unwrap().to_string(), "1");
    }

    #[test]
    fn g_determinant_is_product_of_pair_sums() {
        for n in 1..=4usize {
            let det = det_poly(g_matrix(n)).unwrap();
            let zctx = VarContext::cycle(0, n);
            let mut expect = MPoly::one(&zctx);
            for i in 0..n {
                for j in i + 1..n {
                    expect = &expect * &(&MPoly::var(&zctx, i) + &MPoly::var(&zctx, j));
                }
            }
            assert_eq!(det, expect, "N={}", n);
        }
    }
}
