//! Boltzmann weights of the RSOS model at `ε = e^{−iπ/r}` and the checks
//! that they reduce to the identity at `β = 0` and satisfy the face
//! Yang–Baxter equation.

use std::collections::BTreeMap;

use mincyc_core::VerificationOutcome;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::PathError;
use crate::q3j::residual_outcome;
use crate::qnum::{qint, qint_complex, root_of_unity, Scalar};

/// Which of the three weight formulas a face uses.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FaceType {
    /// `W(j∓½, j, j, j±½) = 1`.
    Straight,
    /// `W(j, j±½, j±½, j)`.
    Diagonal,
    /// `W(j, j±½, j∓½, j)`.
    Crossed,
}

/// Classifies a face given doubled heights `(a, b, c, d)`.
pub fn face_type(quad: [i64; 4]) -> Result<FaceType, PathError> {
    let [a, b, c, d] = quad;
    let adjacent = |x: i64, y: i64| (x - y).abs() == 1;
    if !(adjacent(a, b) && adjacent(a, c) && adjacent(b, d) && adjacent(c, d)) {
        return Err(PathError::NotAFace(quad));
    }
    Ok(if a != d {
        FaceType::Straight
    } else if b == c {
        FaceType::Diagonal
    } else {
        FaceType::Crossed
    })
}

/// The weight `W(j_{i−1}, j_i, j_i′, j_{i+1} | β)` with doubled heights,
/// `u = −β/(πi)` and q-integers at `ε`.
pub fn rsos_weight(r: usize, quad: [i64; 4], beta: f64) -> Result<Scalar, PathError> {
    for &h in &quad {
        if h < 0 || h > r as i64 - 2 {
            return Err(PathError::Inadmissible { twice_j: h, r });
        }
    }
    let eps = root_of_unity(r);
    let u = Scalar::new(0.0, beta / std::f64::consts::PI);
    let one = Scalar::new(1.0, 0.0);
    let [a, b, c, _] = quad;
    let tj = a as f64;
    Ok(match face_type(quad)? {
        FaceType::Straight => one,
        FaceType::Diagonal => {
            let s = if b > a { 1.0 } else { -1.0 };
            qint_complex(eps, Scalar::new(tj + 1.0, 0.0) - u * s) / qint(eps, tj + 1.0) / qint_complex(eps, one + u)
        }
        FaceType::Crossed => {
            let _ = c;
            (qint(eps, tj) * qint(eps, tj + 2.0)).sqrt() / qint(eps, tj + 1.0) * qint_complex(eps, u)
                / qint_complex(eps, one + u)
        }
    })
}

/// Local transfer operator on the middle height: entries
/// `W(left, h, h′, right | β)` for admissible `h, h′`.
fn local(r: usize, left: i64, right: i64, beta: f64) -> BTreeMap<(i64, i64), Scalar> {
    let mut out = BTreeMap::new();
    let mids: Vec<i64> = [left - 1, left + 1].into_iter().filter(|&h| h >= 0 && h <= r as i64 - 2 && (h - right).abs() == 1).collect();
    for &h in &mids {
        for &h2 in &mids {
            if let Ok(w) = rsos_weight(r, [left, h, h2, right], beta) {
                out.insert((h, h2), w);
            }
        }
    }
    out
}

/// Admissible labels `0..=r−2`.
fn labels(r: usize) -> Vec<i64> {
    (0..=r as i64 - 2).collect()
}

/// At `β = 0` every admissible face weight is `δ(j_i, j_i′)`.
///
/// Crossed weights carry the factor `[0]` and must vanish exactly. The
/// diagonal weight is `[2j+1]/[2j+1] · 1/[1]`, which is 1 in formula and
/// is allowed a rounding error of `1e-14`.
pub fn verify_identity_at_zero(r: usize) -> VerificationOutcome {
    let mut worst = 0.0f64;
    let mut faces = 0;
    for a in labels(r) {
        for d in labels(r) {
            for ((h, h2), w) in local(r, a, d, 0.0) {
                faces += 1;
                let err = if h == h2 {
                    let e = (w - Scalar::new(1.0, 0.0)).norm();
                    if e <= 1e-14 {
                        0.0
                    } else {
                        e
                    }
                } else {
                    w.norm()
                };
                worst = worst.max(err);
            }
        }
    }
    if worst == 0.0 {
        VerificationOutcome::pass("identity", "identity").with_detail(format!("r={}: {} faces", r, faces))
    } else {
        VerificationOutcome::fail("identity", format!("residual {:e}", worst), format!("r={}", r))
    }
}

/// Face Yang–Baxter equation
/// `A₁(y) A₂(x+y) A₁(x) = A₂(x) A₁(x+y) A₂(y)` on three-step strips with
/// fixed ends, where `A_i(β)` replaces the `i`-th inner height.
///
/// This is the consistency condition of the exchange relation
/// `ψ(…β_{i+1},β_i…) = A_i(β_i − β_{i+1}) ψ(…β_i,β_{i+1}…)` for
/// `(x, y) = (β₁ − β₂, β₂ − β₃)`.
pub fn ybe_residual(r: usize, x: f64, y: f64) -> f64 {
    ybe_residual_for(r, x, y, |quad, beta| rsos_weight(r, quad, beta))
}

/// [`ybe_residual`] for an arbitrary face weight.
pub fn ybe_residual_for<W>(r: usize, x: f64, y: f64, weight: W) -> f64
where
    W: Fn([i64; 4], f64) -> Result<Scalar, PathError>,
{
    let mut worst = 0.0f64;
    for h0 in labels(r) {
        for h3 in labels(r) {
            // States (h1, h2) with h0-h1-h2-h3 adjacent.
            let states: Vec<(i64, i64)> = labels(r)
                .into_iter()
                .flat_map(|h1| labels(r).into_iter().map(move |h2| (h1, h2)))
                .filter(|&(h1, h2)| (h0 - h1).abs() == 1 && (h1 - h2).abs() == 1 && (h2 - h3).abs() == 1)
                .collect();
            if states.is_empty() {
                continue;
            }
            let k = states.len();
            let a1 = |beta: f64| {
                let mut m = vec![vec![Scalar::new(0.0, 0.0); k]; k];
                for (i, &(h1, h2)) in states.iter().enumerate() {
                    for (j, &(g1, g2)) in states.iter().enumerate() {
                        if h2 == g2 {
                            if let Ok(w) = weight([h0, h1, g1, h2], beta) {
                                m[i][j] = w;
                            }
                        }
                    }
                }
                m
            };
            let a2 = |beta: f64| {
                let mut m = vec![vec![Scalar::new(0.0, 0.0); k]; k];
                for (i, &(h1, h2)) in states.iter().enumerate() {
                    for (j, &(g1, g2)) in states.iter().enumerate() {
                        if h1 == g1 {
                            if let Ok(w) = weight([h1, h2, g2, h3], beta) {
                                m[i][j] = w;
                            }
                        }
                    }
                }
                m
            };
            let lhs = mul(&mul(&a1(y), &a2(x + y)), &a1(x));
            let rhs = mul(&mul(&a2(x), &a1(x + y)), &a2(y));
            for i in 0..k {
                for j in 0..k {
                    worst = worst.max((lhs[i][j] - rhs[i][j]).norm());
                }
            }
        }
    }
    worst
}

fn mul(a: &[Vec<Scalar>], b: &[Vec<Scalar>]) -> Vec<Vec<Scalar>> {
    let k = a.len();
    (0..k).map(|i| (0..k).map(|j| (0..k).map(|t| a[i][t] * b[t][j]).sum()).collect()).collect()
}

/// Largest face-YBE residual over `samples` random `(x, y)` pairs drawn
/// from a seeded generator.
pub fn verify_face_ybe(r: usize, samples: usize, seed: u64, tol: f64) -> VerificationOutcome {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut worst = 0.0f64;
    for _ in 0..samples {
        let x: f64 = rng.gen_range(-2.0..2.0);
        let y: f64 = rng.gen_range(-2.0..2.0);
        worst = worst.max(ybe_residual(r, x, y));
    }
    residual_outcome(worst, tol, format!("r={}: face YBE over {} samples", r, samples))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn straight_faces_are_one() {
        let w = rsos_weight(5, [0, 1, 1, 2], 0.7).unwrap();
        assert_eq!(w, Scalar::new(1.0, 0.0));
    }

    #[test]
    fn inadmissible_label_is_rejected() {
        assert!(matches!(rsos_weight(4, [1, 2, 2, 3], 0.1), Err(PathError::Inadmissible { .. })));
    }

    #[test]
    fn identity_at_zero() {
        for r in 3..=6 {
            assert!(verify_identity_at_zero(r).is_pass());
        }
    }
}
