//! The theta polynomials and the named null cycles built from them.

use std::sync::Arc;

use mincyc_core::{GaussianRational, MPoly, VarContext};

use crate::cycle::CyclePoly;
use crate::error::CycleError;

/// The named polynomials of the cycle layer.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NamedCycle {
    /// `Θ(X) = Π_j (1 − z_j X)`; degree `N` in `X`, so not itself a cycle.
    Theta,
    /// `Θ(X1,X2) = Θ(X1)Θ(X2) − Θ(−X1)Θ(−X2)`; also exceeds the degree bound.
    Theta2,
    /// `Σ1(X) = Θ(−X) − (−1)^N Θ(X)`.
    Sigma1,
    /// `Σ2 = (X1−X2)/(X1+X2)·Θ(X1,X2) + (−1)^N Θ(X1,−X2)`.
    Sigma2,
    /// `Γ1 = X^{-1}(Θ(X) − (−1)^{N+r} Θ(−X))`, defined for `r ≡ N mod 2`.
    Gamma1 { r: i64 },
    /// `Γ2 = X1^{-1}X2^{-1}((X1−X2)/(X1+X2)·Θ(X1,X2) − Θ(X1,−X2))`.
    Gamma2,
    /// `G_m(X) = Π_{j<m}(1 + z_j X) Π_{j>m}(1 − z_j X)`.
    G { m: usize },
}

/// `Π_j (1 − sign·z_j X_x)` in `ctx`, whose `z` block starts at `z0`.
pub fn theta_factor(ctx: &Arc<VarContext>, x: usize, z0: usize, n: usize, sign: i64) -> MPoly {
    let mut acc = MPoly::one(ctx);
    for j in 0..n {
        let mut e = vec![0u16; ctx.len()];
        e[x] = 1;
        e[z0 + j] = 1;
        let f = &MPoly::one(ctx) - &MPoly::monomial(ctx, e, GaussianRational::from_int(sign));
        acc = &acc * &f;
    }
    acc
}

fn sign_pow(k: usize) -> i64 {
    if k % 2 == 0 {
        1
    } else {
        -1
    }
}

/// `Θ(s1·X1, s2·X2)` in the `l = 2` context.
fn theta2(ctx: &Arc<VarContext>, n: usize, s1: i64, s2: i64) -> MPoly {
    let a = &theta_factor(ctx, 0, 2, n, s1) * &theta_factor(ctx, 1, 2, n, s2);
    let b = &theta_factor(ctx, 0, 2, n, -s1) * &theta_factor(ctx, 1, 2, n, -s2);
    &a - &b
}

/// Builds a named cycle for `N` spectral variables.
///
/// `Σ2` and `Γ2` are formed from their polynomial numerators by exact
/// division; a division failure would indicate a construction bug and is
/// reported as an error rather than hidden.
pub fn named_cycle(kind: NamedCycle, n: usize) -> Result<CyclePoly, CycleError> {
    match kind {
        NamedCycle::Theta => {
            let ctx = VarContext::cycle(1, n);
            Ok(CyclePoly::from_body_unchecked(n, 1, theta_factor(&ctx, 0, 1, n, 1)))
        }
        NamedCycle::Theta2 => {
            let ctx = VarContext::cycle(2, n);
            Ok(CyclePoly::from_body_unchecked(n, 2, theta2(&ctx, n, 1, 1)))
        }
        NamedCycle::Sigma1 => {
            let ctx = VarContext::cycle(1, n);
            let body = &theta_factor(&ctx, 0, 1, n, -1)
                - &theta_factor(&ctx, 0, 1, n, 1).scale(&GaussianRational::from_int(sign_pow(n)));
            CyclePoly::new(n, 1, body)
        }
        NamedCycle::Sigma2 => {
            let ctx = VarContext::cycle(2, n);
            let (x1, x2) = (MPoly::var(&ctx, 0), MPoly::var(&ctx, 1));
            let plus = &x1 + &x2;
            let minus = &x1 - &x2;
            let num = &(&minus * &theta2(&ctx, n, 1, 1))
                + &(&plus * &theta2(&ctx, n, 1, -1)).scale(&GaussianRational::from_int(sign_pow(n)));
            let body = num.exact_divide(&plus)?;
            CyclePoly::new(n, 2, body)
        }
        NamedCycle::Gamma1 { r } => {
            if (n as i64 - r).rem_euclid(2) != 0 {
                return Err(CycleError::Parity { n, r });
            }
            let ctx = VarContext::cycle(1, n);
            // (−1)^{N+r} = 1 under the parity condition.
            let num = &theta_factor(&ctx, 0, 1, n, 1) - &theta_factor(&ctx, 0, 1, n, -1);
            let body = num.exact_divide(&MPoly::var(&ctx, 0))?;
            CyclePoly::new(n, 1, body)
        }
        NamedCycle::Gamma2 => {
            let ctx = VarContext::cycle(2, n);
            let (x1, x2) = (MPoly::var(&ctx, 0), MPoly::var(&ctx, 1));
            let plus = &x1 + &x2;
            let minus = &x1 - &x2;
            let num = &(&minus * &theta2(&ctx, n, 1, 1)) - &(&plus * &theta2(&ctx, n, 1, -1));
            let body = num.exact_divide(&plus)?.exact_divide(&(&x1 * &x2))?;
            CyclePoly::new(n, 2, body)
        }
        NamedCycle::G { m } => {
            if m == 0 || m > n {
                return Err(CycleError::IndexOutOfRange { m, n });
            }
            let ctx = VarContext::cycle(1, n);
            Ok(CyclePoly::from_body_unchecked(n, 1, crate::cmap::g_poly(&ctx, 0, 1, n, m)))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cycle::{evaluate_ec, is_minimal};
    use mincyc_core::rat;

    #[test]
    fn sigma1_small_cases() {
        let s = named_cycle(NamedCycle::Sigma1, 1).unwrap();
        assert_eq!(s.to_string(), "2");
        let s = named_cycle(NamedCycle::Sigma1, 2).unwrap();
        assert_eq!(s.to_string(), "2*X*z1 + 2*X*z2");
        let e = evaluate_ec(&s, &[rat(1), rat(2)], true).unwrap();
        assert_eq!(e.to_string(), "6*X");
    }

    #[test]
    fn gamma1_small_case_and_parity() {
        let g = named_cycle(NamedCycle::Gamma1 { r: 4 }, 2).unwrap();
        assert_eq!(g.to_string(), "-2*z1 - 2*z2");
        assert!(matches!(named_cycle(NamedCycle::Gamma1 { r: 3 }, 2), Err(CycleError::Parity { .. })));
    }

    #[test]
    fn named_cycles_are_minimal_and_homogeneous() {
        for n in 2..=5usize {
            for (kind, deg) in [
                (NamedCycle::Sigma1, 0),
                (NamedCycle::Sigma2, 0),
                (NamedCycle::Gamma1 { r: n as i64 + 2 }, 1),
                (NamedCycle::Gamma2, 2),
            ] {
                let c = named_cycle(kind, n).unwrap();
                assert!(is_minimal(&c), "{:?} N={}", kind, n);
                assert_eq!(c.homogeneous_degree(), Some(deg), "{:?} N={}", kind, n);
            }
        }
    }

    #[test]
    fn constant_cycle_is_not_minimal() {
        let ctx = VarContext::cycle(1, 2);
        let one = CyclePoly::new(2, 1, MPoly::one(&ctx)).unwrap();
        assert!(!is_minimal(&one));
    }
}
