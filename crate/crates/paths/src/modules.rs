//! The modules `V^s(α)`, `W^s(α)`, `X^s(α)` at `ε = e^{−iπ/r}` as explicit
//! matrices, with checks of the defining relations and of the two short
//! exact sequences
//! `0 → V^{r−2−s}(−α) → W^s(α) → V^s(α) → 0` and
//! `0 → W^s(α) → X^s(α) → W^{r−2−s}(−α) → 0`.

use mincyc_core::VerificationOutcome;

use crate::error::PathError;
use crate::q3j::residual_outcome;
use crate::qnum::{qint, qpow, root_of_unity, Scalar};
use crate::tensor::CMatrix;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ModuleKind {
    V,
    W,
    X,
}

/// A module with its generator matrices; column `k` is the image of the
/// `k`-th basis vector.
#[derive(Clone, Debug)]
pub struct RootModule {
    pub kind: ModuleKind,
    pub r: usize,
    pub s: usize,
    pub alpha: i64,
    pub e: CMatrix,
    pub f: CMatrix,
    pub t: CMatrix,
}

impl RootModule {
    pub fn dim(&self) -> usize {
        self.e.nrows()
    }

    /// Largest residual of `TET^{−1} = ε²E`, `TFT^{−1} = ε^{−2}F` and
    /// `[E,F] = (T − T^{−1})/(ε − ε^{−1})`.
    pub fn relation_residual(&self) -> f64 {
        let eps = root_of_unity(self.r);
        let tinv = self.t.clone().try_inverse().expect("T is diagonal with unit entries");
        let r1 = (&self.t * &self.e * &tinv - &self.e * (eps * eps)).norm();
        let r2 = (&self.t * &self.f * &tinv - &self.f * (eps * eps).inv()).norm();
        let comm = &self.e * &self.f - &self.f * &self.e;
        let r3 = (comm - (&self.t - &tinv) / (eps - eps.inv())).norm();
        r1.max(r2).max(r3)
    }
}

fn sc(x: f64) -> Scalar {
    Scalar::new(x, 0.0)
}

/// Builds `V^s(α)` (`0 ≤ s ≤ r−2`), `W^s(α)` (`0 ≤ s ≤ r−1`) or `X^s(α)`
/// (`0 ≤ s ≤ r−2`).
///
/// The basis of `X^s` is ordered `x_0..x_s, a_0..a_{r−2−s}, b_0..b_{r−2−s},
/// y_0..y_s`.
pub fn build_module(kind: ModuleKind, r: usize, s: usize, alpha: i64) -> Result<RootModule, PathError> {
    if r < 3 || alpha.abs() != 1 {
        return Err(PathError::OutOfRange(format!("r = {}, alpha = {}", r, alpha)));
    }
    let max_s = if kind == ModuleKind::W { r - 1 } else { r - 2 };
    if s > max_s {
        return Err(PathError::OutOfRange(format!("s = {} exceeds {} for {:?} at r = {}", s, max_s, kind, r)));
    }
    let eps = root_of_unity(r);
    let a = alpha as f64;
    let qi = |n: i64| qint(eps, n as f64);
    let tw = |x: i64| qpow(eps, x as f64);
    // A string of length `len` with top weight `top`: E coefficient of
    // step k, T eigenvalue of vector k.
    let (e, f, t) = match kind {
        ModuleKind::V | ModuleKind::W => {
            let len = if kind == ModuleKind::V { s + 1 } else { r };
            let mut e = CMatrix::zeros(len, len);
            let mut f = CMatrix::zeros(len, len);
            let mut t = CMatrix::zeros(len, len);
            for k in 0..len {
                let ki = k as i64;
                if k >= 1 {
                    e[(k - 1, k)] = qi(ki) * qi(s as i64 + 1 - ki) * a;
                }
                if k + 1 < len {
                    f[(k + 1, k)] = sc(1.0);
                }
                t[(k, k)] = tw(s as i64 - 2 * ki) * a;
            }
            (e, f, t)
        }
        ModuleKind::X => {
            let ns = s + 1;
            let na = r - 1 - s;
            let (x0, a0, b0, y0) = (0, ns, ns + na, ns + 2 * na);
            let dim = 2 * r;
            let mut e = CMatrix::zeros(dim, dim);
            let mut f = CMatrix::zeros(dim, dim);
            let mut t = CMatrix::zeros(dim, dim);
            let si = s as i64;
            let ri = r as i64;
            for k in 0..ns {
                let ki = k as i64;
                if k >= 1 {
                    e[(x0 + k - 1, x0 + k)] = qi(ki) * qi(si + 1 - ki) * a;
                    e[(y0 + k - 1, y0 + k)] = qi(ki) * qi(si + 1 - ki) * a;
                }
                t[(x0 + k, x0 + k)] = tw(si - 2 * ki) * a;
                t[(y0 + k, y0 + k)] = tw(si - 2 * ki) * a;
                // x_{s+1} = a_0, y_{s+1} = 0.
                f[(if k + 1 < ns { x0 + k + 1 } else { a0 }, x0 + k)] = sc(1.0);
                if k + 1 < ns {
                    f[(y0 + k + 1, y0 + k)] = sc(1.0);
                }
            }
            e[(a0 + na - 1, y0)] = sc(1.0);
            for k in 0..na {
                let ki = k as i64;
                if k >= 1 {
                    e[(a0 + k - 1, a0 + k)] = -qi(ki) * qi(ri - 1 - si - ki) * a;
                    e[(b0 + k - 1, b0 + k)] = -qi(ki) * qi(ri - 1 - si - ki) * a;
                    e[(a0 + k - 1, b0 + k)] += sc(1.0);
                }
                t[(a0 + k, a0 + k)] = -tw(ri - 2 - si - 2 * ki) * a;
                t[(b0 + k, b0 + k)] = -tw(ri - 2 - si - 2 * ki) * a;
                // a_{r−1−s} = 0, b_{r−1−s} = y_0.
                if k + 1 < na {
                    f[(a0 + k + 1, a0 + k)] = sc(1.0);
                    f[(b0 + k + 1, b0 + k)] = sc(1.0);
                } else {
                    f[(y0, b0 + k)] = sc(1.0);
                }
            }
            e[(x0 + ns - 1, b0)] = sc(1.0);
            (e, f, t)
        }
    };
    Ok(RootModule { kind, r, s, alpha, e, f, t })
}

/// `‖G|_{sub} − G_sub‖` for the submodule spanned by `idx`, plus the norm
/// of the components of `G·sub` leaving the span.
fn sub_residual(big: &RootModule, idx: &[usize], sub: &RootModule) -> f64 {
    let mut worst = 0.0f64;
    for (g, h) in [(&big.e, &sub.e), (&big.f, &sub.f), (&big.t, &sub.t)] {
        for (j, &cj) in idx.iter().enumerate() {
            for row in 0..big.dim() {
                let want = idx.iter().position(|&x| x == row).map(|i| h[(i, j)]).unwrap_or(sc(0.0));
                worst = worst.max((g[(row, cj)] - want).norm());
            }
        }
    }
    worst
}

/// `‖G|_{quotient} − G_quot‖` on the complement `idx`.
fn quotient_residual(big: &RootModule, idx: &[usize], quot: &RootModule) -> f64 {
    let mut worst = 0.0f64;
    for (g, h) in [(&big.e, &quot.e), (&big.f, &quot.f), (&big.t, &quot.t)] {
        for (j, &cj) in idx.iter().enumerate() {
            for (i, &ri) in idx.iter().enumerate() {
                worst = worst.max((g[(ri, cj)] - h[(i, j)]).norm());
            }
        }
    }
    worst
}

/// Builds the module and checks its relations, its dimension and, for
/// `W^s` (`s ≤ r−2`) and `X^s`, the short exact sequence it sits in.
pub fn root_module(kind: ModuleKind, r: usize, s: usize, alpha: i64, tol: f64) -> Result<(RootModule, VerificationOutcome), PathError> {
    let m = build_module(kind, r, s, alpha)?;
    let label = format!("{:?}^{}({}) r={}", kind, s, alpha, r);
    let want_dim = match kind {
        ModuleKind::V => s + 1,
        ModuleKind::W => r,
        ModuleKind::X => 2 * r,
    };
    if m.dim() != want_dim {
        let out = VerificationOutcome::fail(want_dim, m.dim(), format!("{}: dimension", label));
        return Ok((m, out));
    }
    let mut worst = m.relation_residual();
    match kind {
        ModuleKind::W if s + 2 <= r => {
            let sub = build_module(ModuleKind::V, r, r - 2 - s, -alpha)?;
            let quot = build_module(ModuleKind::V, r, s, alpha)?;
            let sub_idx: Vec<usize> = (s + 1..r).collect();
            let quot_idx: Vec<usize> = (0..=s).collect();
            if sub.dim() + quot.dim() != m.dim() {
                worst = f64::INFINITY;
            }
            worst = worst.max(sub_residual(&m, &sub_idx, &sub)).max(quotient_residual(&m, &quot_idx, &quot));
        }
        ModuleKind::X => {
            let sub = build_module(ModuleKind::W, r, s, alpha)?;
            let quot = build_module(ModuleKind::W, r, r - 2 - s, -alpha)?;
            let na = r - 1 - s;
            // W^s ↪ x_0..x_s, a_0..a_{r−2−s}; W^{r−2−s} ↞ b_0.., y_0...
            let sub_idx: Vec<usize> = (0..s + 1 + na).collect();
            let quot_idx: Vec<usize> = (s + 1 + na..2 * r).collect();
            if sub.dim() + quot.dim() != m.dim() {
                worst = f64::INFINITY;
            }
            worst = worst.max(sub_residual(&m, &sub_idx, &sub)).max(quotient_residual(&m, &quot_idx, &quot));
        }
        _ => {}
    }
    Ok((m, residual_outcome(worst, tol, label)))
}

/// Every module for `r`, both signs of `α`.
pub fn verify_all_modules(r: usize, tol: f64) -> Result<Vec<VerificationOutcome>, PathError> {
    let mut out = Vec::new();
    for alpha in [1, -1] {
        for s in 0..=r - 2 {
            out.push(root_module(ModuleKind::V, r, s, alpha, tol)?.1);
            out.push(root_module(ModuleKind::X, r, s, alpha, tol)?.1);
        }
        for s in 0..=r - 1 {
            out.push(root_module(ModuleKind::W, r, s, alpha, tol)?.1);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tensor::site_generators;

    #[test]
    fn v_one_is_the_spin_half_module() {
        for r in 3..=6 {
            let m = build_module(ModuleKind::V, r, 1, 1).unwrap();
            let (e, f, t) = site_generators(root_of_unity(r));
            assert!((m.e - e).norm() < 1e-12);
            assert!((m.f - f).norm() < 1e-12);
            assert!((m.t - t).norm() < 1e-12);
        }
    }

    #[test]
    fn out_of_range_is_rejected() {
        assert!(build_module(ModuleKind::V, 4, 3, 1).is_err());
        assert!(build_module(ModuleKind::W, 4, 3, 1).is_ok());
    }
}
