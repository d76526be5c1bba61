//! The action of `E, F, T` on `V^{⊗n}`, the operators `R⁺` and `Π_{n,l}`,
//! and the highest-weight spaces `Ω_{n,l} = Ker E ∩ (V^{⊗n})_l`.

use mincyc_core::VerificationOutcome;
use nalgebra::DMatrix;

use crate::q3j::residual_outcome;
use crate::qnum::{root_of_unity, Scalar};

pub type CMatrix = DMatrix<Scalar>;

/// Coproduct used to extend the action to tensor powers.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Coproduct {
    /// `E ↦ E⊗1 + T⊗E`, `F ↦ F⊗T^{−1} + 1⊗F`.
    Standard,
    /// `E ↦ E⊗T + 1⊗E`, `F ↦ F⊗1 + T^{−1}⊗F`.
    Opposite,
}

fn c(re: f64) -> Scalar {
    Scalar::new(re, 0.0)
}

/// `E = σ⁺` (`v_− ↦ v_+`), `F = σ⁻`, `T = q^{σ^z}` on `V = ℂv_+ ⊕ ℂv_−`.
pub fn site_generators(q: Scalar) -> (CMatrix, CMatrix, CMatrix) {
    let e = CMatrix::from_row_slice(2, 2, &[c(0.0), c(1.0), c(0.0), c(0.0)]);
    let f = CMatrix::from_row_slice(2, 2, &[c(0.0), c(0.0), c(1.0), c(0.0)]);
    let t = CMatrix::from_row_slice(2, 2, &[q, c(0.0), c(0.0), q.inv()]);
    (e, f, t)
}

/// Kronecker product of a list of factors, first factor most significant.
pub fn kron_all(factors: &[CMatrix]) -> CMatrix {
    factors.iter().skip(1).fold(factors[0].clone(), |acc, m| acc.kronecker(m))
}

/// `(E, F, T)` on `V^{⊗n}`.
pub fn tensor_generators(n: usize, q: Scalar, coproduct: Coproduct) -> (CMatrix, CMatrix, CMatrix) {
    let (e, f, t) = site_generators(q);
    let id = CMatrix::identity(2, 2);
    let tinv = t.clone().try_inverse().expect("T invertible");
    let dim = 1 << n;
    let mut big_e = CMatrix::zeros(dim, dim);
    let mut big_f = CMatrix::zeros(dim, dim);
    for i in 0..n {
        let (before_e, after_e, before_f, after_f) = match coproduct {
            Coproduct::Standard => (&t, &id, &id, &tinv),
            Coproduct::Opposite => (&id, &t, &tinv, &id),
        };
        let fe: Vec<CMatrix> =
            (0..n).map(|k| if k < i { before_e.clone() } else if k == i { e.clone() } else { after_e.clone() }).collect();
        let ff: Vec<CMatrix> =
            (0..n).map(|k| if k < i { before_f.clone() } else if k == i { f.clone() } else { after_f.clone() }).collect();
        big_e += kron_all(&fe);
        big_f += kron_all(&ff);
    }
    let big_t = kron_all(&vec![t; n]);
    (big_e, big_f, big_t)
}

/// Basis indices with exactly `l` factors `v_−`.
pub fn weight_indices(n: usize, l: usize) -> Vec<usize> {
    (0..1usize << n).filter(|i| i.count_ones() as usize == l).collect()
}

/// Orthonormal (Hermitian) basis of `Ω_{n,l}` as columns, from the
/// numerical null space of `E` restricted to the weight space.
pub fn omega_basis(e: &CMatrix, n: usize, l: usize, tol: f64) -> CMatrix {
    let idx = weight_indices(n, l);
    let k = idx.len();
    let rows = e.nrows();
    // Pad with zero rows so the SVD returns a full right factor.
    let mut a = CMatrix::zeros(rows.max(k), k);
    for (col, &i) in idx.iter().enumerate() {
        for r in 0..rows {
            a[(r, col)] = e[(r, i)];
        }
    }
    let svd = a.svd(false, true);
    let v_t = svd.v_t.expect("requested");
    let null: Vec<usize> = (0..k).filter(|&s| svd.singular_values[s] <= tol).collect();
    let mut out = CMatrix::zeros(1 << n, null.len());
    for (col, &s) in null.iter().enumerate() {
        for (pos, &i) in idx.iter().enumerate() {
            out[(i, col)] = v_t[(s, pos)].conj();
        }
    }
    out
}

/// Numerical rank by singular values above `tol`.
pub fn numeric_rank(m: &CMatrix, tol: f64) -> usize {
    if m.ncols() == 0 || m.nrows() == 0 {
        return 0;
    }
    m.clone().svd(false, false).singular_values.iter().filter(|&&s| s > tol).count()
}

/// `R⁺` on `V⊗V` at `ε`.
pub fn rplus(eps: Scalar) -> CMatrix {
    // Basis order v++, v+−, v−+, v−−.
    let z = c(0.0);
    let mut m = CMatrix::from_element(4, 4, z);
    m[(0, 0)] = eps;
    m[(3, 3)] = eps;
    m[(2, 1)] = c(1.0);
    m[(2, 2)] = eps - eps.inv();
    m[(1, 2)] = c(1.0);
    m
}

/// `R⁺_{i,i+1}` on `V^{⊗n}` (`i` is 1-based).
pub fn rplus_at(n: usize, i: usize, eps: Scalar) -> CMatrix {
    embed_pair(n, i, &rplus(eps))
}

fn embed_pair(n: usize, i: usize, op: &CMatrix) -> CMatrix {
    let mut factors = Vec::new();
    if i > 1 {
        factors.push(CMatrix::identity(1 << (i - 1), 1 << (i - 1)));
    }
    factors.push(op.clone());
    if i + 1 < n {
        factors.push(CMatrix::identity(1 << (n - i - 1), 1 << (n - i - 1)));
    }
    kron_all(&factors)
}

/// The flip `P` on `V⊗V`.
pub fn flip() -> CMatrix {
    let mut m = CMatrix::zeros(4, 4);
    m[(0, 0)] = c(1.0);
    m[(3, 3)] = c(1.0);
    m[(1, 2)] = c(1.0);
    m[(2, 1)] = c(1.0);
    m
}

/// `Π_{n,l} = P_{n−1,n} ⋯ P_{12} D_1^{l−n/2−1}` with
/// `D^{1/2} v_± = e^{∓iπ/2r} v_±`.
pub fn pi_operator(n: usize, l: usize, r: usize) -> CMatrix {
    let power = l as f64 - n as f64 / 2.0 - 1.0;
    let phase = |s: f64| Scalar::from_polar(1.0, -s * std::f64::consts::PI * power / r as f64);
    let d = CMatrix::from_row_slice(2, 2, &[phase(1.0), c(0.0), c(0.0), phase(-1.0)]);
    let mut factors = vec![d];
    if n > 1 {
        factors.push(CMatrix::identity(1 << (n - 1), 1 << (n - 1)));
    }
    let mut acc = kron_all(&factors);
    for i in 1..n {
        acc = embed_pair(n, i, &flip()) * acc;
    }
    acc
}

/// Checks at level `r`: every `R⁺_{i,i+1}` commutes with `E, F, T` in the
/// opposite-coproduct action, and `R⁺_{i,i+1}` and `Π_{n,l}` map a computed
/// basis of `Ω_{n,l}` into `Ω_{n,l}`.
pub fn rplus_pi(n: usize, l: usize, r: usize, tol: f64) -> Vec<VerificationOutcome> {
    let eps = root_of_unity(r);
    let (e, f, t) = tensor_generators(n, eps, Coproduct::Opposite);
    let mut out = Vec::new();
    let mut worst = 0.0f64;
    for i in 1..n {
        let rp = rplus_at(n, i, eps);
        for g in [&e, &f, &t] {
            worst = worst.max((&rp * g - g * &rp).norm());
        }
    }
    out.push(residual_outcome(worst, tol, format!("n={} r={}: [R+, U] residual", n, r)));

    let omega = omega_basis(&e, n, l, 1e-8);
    let dim = omega.ncols();
    let mut ops: Vec<(String, CMatrix)> = (1..n).map(|i| (format!("R+_{}{}", i, i + 1), rplus_at(n, i, eps))).collect();
    ops.push(("Pi".to_string(), pi_operator(n, l, r)));
    let weight: Vec<bool> = (0..1usize << n).map(|i| i.count_ones() as usize == l).collect();
    let mut worst = 0.0f64;
    for (_, op) in &ops {
        let img = op * &omega;
        // Leaves the weight space: components outside it must vanish.
        for row in 0..img.nrows() {
            if !weight[row] {
                for col in 0..dim {
                    worst = worst.max(img[(row, col)].norm());
                }
            }
        }
        worst = worst.max((&e * &img).norm());
        // Rank test: [Ω | image] has rank dim Ω.
        let mut joined = CMatrix::zeros(img.nrows(), 2 * dim);
        joined.columns_mut(0, dim).copy_from(&omega);
        joined.columns_mut(dim, dim).copy_from(&img);
        if numeric_rank(&joined, 1e-8) != dim {
            worst = worst.max(1.0);
        }
    }
    out.push(residual_outcome(worst, tol, format!("n={} l={} r={}: Omega invariance (dim {})", n, l, r, dim)));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rplus_two_sites() {
        let eps = root_of_unity(4);
        let m = rplus(eps);
        // v+− ↦ v−+ and v−+ ↦ (ε − ε^{−1}) v−+ + v+−.
        assert_eq!(m[(2, 1)], c(1.0));
        assert_eq!(m[(1, 2)], c(1.0));
        assert!((m[(2, 2)] - (eps - eps.inv())).norm() < 1e-15);
    }

    #[test]
    fn omega_dimensions_at_generic_q() {
        let q = crate::qnum::generic_q();
        let (e, _, _) = tensor_generators(4, q, Coproduct::Opposite);
        assert_eq!(omega_basis(&e, 4, 0, 1e-9).ncols(), 1);
        assert_eq!(omega_basis(&e, 4, 1, 1e-9).ncols(), 3);
        assert_eq!(omega_basis(&e, 4, 2, 1e-9).ncols(), 2);
    }
}
