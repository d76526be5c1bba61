//! q-deformed 3j symbols for spin-½ fusion and the path vectors `u_{J,m}`.
//!
//! Spins and magnetic numbers are passed doubled (`2j`, `2m`). The tensor
//! space `(ℂ²)^{⊗N}` uses the index `Σ_n b_n 2^{N−n}` with `b_n = 1` for
//! `v_−` in factor `n`.

use mincyc_core::VerificationOutcome;

use crate::error::PathError;
use crate::path::{enumerate_paths, special_path, Path, Restriction};
use crate::qnum::{qint, qpow, Scalar};
use crate::tensor::{numeric_rank, omega_basis, tensor_generators, CMatrix, Coproduct};
use nalgebra::DVector;

/// Which fused spin: `j + ½` (`Up`) or `j − ½` (`Down`).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Branch {
    Up,
    Down,
}

/// `[j ½ j±½; m ε/2 m+ε/2]`, zero when the labels violate the selection
/// rules.
pub fn q3j(twice_j: i64, branch: Branch, twice_m: i64, eps: i64, q: Scalar) -> Result<Scalar, PathError> {
    assert!(eps == 1 || eps == -1, "eps is a sign");
    let zero = Scalar::new(0.0, 0.0);
    let out_j = match branch {
        Branch::Up => twice_j + 1,
        Branch::Down => twice_j - 1,
    };
    let out_m = twice_m + eps;
    if twice_j < 0 || twice_m.abs() > twice_j || (twice_j - twice_m) % 2 != 0 || out_j < 0 || out_m.abs() > out_j {
        return Ok(zero);
    }
    let (j, m, e) = (twice_j as f64 / 2.0, twice_m as f64 / 2.0, eps as f64);
    let denom = qint(q, 2.0 * j + 1.0);
    if denom.norm() < 1e-12 {
        return Err(PathError::VanishingDenominator(format!("{}", twice_j + 1)));
    }
    Ok(match branch {
        Branch::Up => qpow(q, (e * j - m) / 2.0) * (qint(q, j + e * m + 1.0) / denom).sqrt(),
        Branch::Down => qpow(q, (-e * (j + 1.0) - m) / 2.0) * (qint(q, j - e * m) / denom).sqrt() * e,
    })
}

/// The factor of `u_J` at step `n` (0-based `n ≥ 1`) for sign `eps`.
fn step_factor(path: &Path, n: usize, twice_m_prev: i64, eps: i64, q: Scalar) -> Result<Scalar, PathError> {
    let (a, b) = (path.twice[n - 1], path.twice[n]);
    let branch = if b == a + 1 { Branch::Up } else { Branch::Down };
    q3j(a, branch, twice_m_prev, eps, q)
}

/// Index of `v_{ε_1} ⊗ … ⊗ v_{ε_N}`.
pub fn basis_index(eps: &[i64]) -> usize {
    eps.iter().fold(0, |acc, &e| 2 * acc + usize::from(e < 0))
}

/// `u_{J,m_N}` as a dense vector of length `2^N`.
pub fn path_vector(path: &Path, twice_m: i64, q: Scalar) -> Result<Vec<Scalar>, PathError> {
    let n = path.len();
    let mut out = vec![Scalar::new(0.0, 0.0); 1 << n];
    if !path.is_classical() || twice_m.abs() > path.weight() || (path.weight() - twice_m) % 2 != 0 {
        return Ok(out);
    }
    for code in 0..(1usize << n) {
        let eps: Vec<i64> = (0..n).map(|k| if code >> (n - 1 - k) & 1 == 1 { -1 } else { 1 }).collect();
        if eps.iter().sum::<i64>() != twice_m {
            continue;
        }
        out[code] = coefficient(path, &eps, q)?;
    }
    Ok(out)
}

/// `u_J = u_{J,j_N}`.
pub fn path_vector_uj(path: &Path, q: Scalar) -> Result<Vec<Scalar>, PathError> {
    path_vector(path, path.weight(), q)
}

/// The product of 3j symbols attached to the sign sequence `eps`.
fn coefficient(path: &Path, eps: &[i64], q: Scalar) -> Result<Scalar, PathError> {
    let mut acc = Scalar::new(1.0, 0.0);
    let mut m = eps[0];
    for n in 1..path.len() {
        acc *= step_factor(path, n, m, eps[n], q)?;
        if acc.norm() == 0.0 {
            return Ok(acc);
        }
        m += eps[n];
    }
    Ok(acc)
}

/// `C_{J,M}`: the coefficient of `v_M` in `u_J`, with `M` the 1-based
/// positions of `v_−`.
pub fn coeff_cjm(path: &Path, m_set: &[usize], q: Scalar) -> Result<Scalar, PathError> {
    let n = path.len();
    let eps: Vec<i64> = (1..=n).map(|k| if m_set.contains(&k) { -1 } else { 1 }).collect();
    if eps.iter().sum::<i64>() != path.weight() {
        return Ok(Scalar::new(0.0, 0.0));
    }
    coefficient(path, &eps, q)
}

/// Symmetric bilinear pairing in which the `v_M` are orthonormal.
pub fn bilinear(a: &[Scalar], b: &[Scalar]) -> Scalar {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// All `u_{J,m}` for classical paths of length `n`.
pub fn all_path_vectors(n: usize, q: Scalar) -> Result<Vec<(Path, i64, Vec<Scalar>)>, PathError> {
    let mut out = Vec::new();
    for w in (0..=n as i64).rev().filter(|w| (n as i64 - w) % 2 == 0) {
        for p in enumerate_paths(n, w, Restriction::Classical) {
            for m in (-w..=w).step_by(2) {
                let v = path_vector(&p, m, q)?;
                out.push((p.clone(), m, v));
            }
        }
    }
    Ok(out)
}

/// The bilinear Gram matrix of all `u_{J,m}` is the identity.
pub fn verify_orthonormal(n: usize, q: Scalar, tol: f64) -> Result<VerificationOutcome, PathError> {
    let vecs = all_path_vectors(n, q)?;
    if vecs.len() != 1 << n {
        return Ok(VerificationOutcome::fail(1usize << n, vecs.len(), format!("N={}: vector count", n)));
    }
    let mut worst = 0.0f64;
    for (i, (_, _, a)) in vecs.iter().enumerate() {
        for (k, (_, _, b)) in vecs.iter().enumerate().skip(i) {
            let target = if i == k { 1.0 } else { 0.0 };
            worst = worst.max((bilinear(a, b) - target).norm());
        }
    }
    Ok(residual_outcome(worst, tol, format!("N={} Gram residual", n)))
}

/// Coefficients of `C_{J_{N,l},M}` against the closed form: nonzero
/// exactly on `M` built from `l` pairs `(ε_p, −ε_p)` followed by `+`, where
/// it equals `(−1)^{½Σ(ε_p+1)} q^{½Σε_p} / [2]^{l/2}`.
pub fn verify_special_coefficients(n: usize, l: usize, q: Scalar, tol: f64) -> Result<VerificationOutcome, PathError> {
    let path = special_path(n, l).ok_or_else(|| PathError::OutOfRange(format!("2l = {} > N = {}", 2 * l, n)))?;
    let two = qint(q, 2.0);
    let mut worst = 0.0f64;
    for code in 0..(1usize << n) {
        let m_set: Vec<usize> = (1..=n).filter(|k| code >> (n - k) & 1 == 1).collect();
        if m_set.len() != l {
            continue;
        }
        let got = coeff_cjm(&path, &m_set, q)?;
        let eps: Vec<i64> = (1..=n).map(|k| if m_set.contains(&k) { -1 } else { 1 }).collect();
        let paired = (0..l).all(|p| eps[2 * p] == -eps[2 * p + 1]) && eps[2 * l..].iter().all(|&e| e == 1);
        let want = if paired {
            let firsts: Vec<i64> = (0..l).map(|p| eps[2 * p]).collect();
            let sign = if firsts.iter().map(|&e| (e + 1) / 2).sum::<i64>() % 2 == 0 { 1.0 } else { -1.0 };
            qpow(q, firsts.iter().sum::<i64>() as f64 / 2.0) * sign / two.powf(l as f64 / 2.0)
        } else {
            Scalar::new(0.0, 0.0)
        };
        worst = worst.max((got - want).norm());
    }
    Ok(residual_outcome(worst, tol, format!("N={} l={} C(J_Nl, M) residual", n, l)))
}

/// `E u_J = 0` in the opposite-coproduct action for every classical path,
/// and for each weight the `u_J` span a space of dimension
/// `dim Ω_{N,l}` computed as the numerical null space of `E`.
pub fn verify_highest_weight(n: usize, q: Scalar, tol: f64) -> Result<Vec<VerificationOutcome>, PathError> {
    let (e, _, _) = tensor_generators(n, q, Coproduct::Opposite);
    let mut worst = 0.0f64;
    let mut out = Vec::new();
    for l in 0..=n / 2 {
        let w = (n - 2 * l) as i64;
        let paths = enumerate_paths(n, w, Restriction::Classical);
        let mut cols = CMatrix::zeros(1 << n, paths.len());
        for (k, p) in paths.iter().enumerate() {
            let u = DVector::from_vec(path_vector_uj(p, q)?);
            worst = worst.max((&e * &u).norm());
            cols.set_column(k, &u);
        }
        let span = numeric_rank(&cols, 1e-8);
        let omega = omega_basis(&e, n, l, 1e-8).ncols();
        let label = format!("N={} l={}: rank u_J vs dim Omega", n, l);
        out.push(if span == omega && span == paths.len() {
            VerificationOutcome::pass(omega, span).with_detail(label)
        } else {
            VerificationOutcome::fail(omega, format!("{} of {}", span, paths.len()), label)
        });
    }
    out.insert(0, residual_outcome(worst, tol, format!("N={}: |E u_J|", n)));
    Ok(out)
}

pub(crate) fn residual_outcome(worst: f64, tol: f64, label: String) -> VerificationOutcome {
    let expected = format!("<= {:e}", tol);
    let computed = format!("{:.3e}", worst);
    if worst <= tol {
        VerificationOutcome::pass(expected, computed).with_detail(label)
    } else {
        VerificationOutcome::fail(expected, computed, label)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qnum::generic_q;

    #[test]
    fn trivial_symbol() {
        let v = q3j(0, Branch::Up, 0, 1, generic_q()).unwrap();
        assert!((v - Scalar::new(1.0, 0.0)).norm() < 1e-12);
        assert_eq!(q3j(1, Branch::Up, 3, 1, generic_q()).unwrap(), Scalar::new(0.0, 0.0));
    }

    #[test]
    fn single_site_is_v_plus() {
        let p = Path::new(vec![1]).unwrap();
        let u = path_vector_uj(&p, generic_q()).unwrap();
        assert_eq!(u, vec![Scalar::new(1.0, 0.0), Scalar::new(0.0, 0.0)]);
    }

    #[test]
    fn two_site_singlet_coefficient() {
        let q = generic_q();
        let p = special_path(2, 1).unwrap();
        let c = coeff_cjm(&p, &[1], q).unwrap();
        assert!((c.norm() - 1.0 / qint(q, 2.0).norm().sqrt()).abs() < 1e-12);
    }
}
