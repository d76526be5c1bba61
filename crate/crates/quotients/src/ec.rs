//! Dimensions of the quotients after evaluating `z` at a generic point.

use mincyc_core::linalg::sparsify;
use mincyc_core::perm::binomial;
use mincyc_core::{BigRational, Echelon, GaussianRational, MPoly, VerificationOutcome};
use mincyc_cycles::{named_cycle, NamedCycle};
use mincyc_qchar::int_coeffs;
use num_traits::Zero;

use crate::character::{restricted_kostka_or_zero, restriction_mu};
use crate::error::QuotientError;
use crate::space::{ext_power, ext_wedge, exponent_tuples, real_part, sort_sign, Ext};

/// An evaluated exterior form: `J` to a number.
type EvalExt = Vec<(Vec<u16>, BigRational)>;

fn evaluate(ext: &Ext, c: &[BigRational]) -> EvalExt {
    ext.iter()
        .map(|(j, p)| (j.clone(), real_part(&eval_at(p, c))))
        .filter(|(_, v)| !v.is_zero())
        .collect()
}

fn eval_at(p: &MPoly, c: &[BigRational]) -> GaussianRational {
    let mut q = p.clone();
    for (i, ci) in c.iter().enumerate() {
        q = q.eval_var(i, &GaussianRational::from_real(ci.clone()));
    }
    q.constant_term()
}

fn check_generic(c: &[BigRational]) -> Result<(), QuotientError> {
    for (j, cj) in c.iter().enumerate() {
        if cj.is_zero() {
            return Err(mincyc_cycles::CycleError::NotGeneric { factor: format!("c{}", j + 1) }.into());
        }
        for (i, ci) in c.iter().enumerate().take(j) {
            if (ci + cj).is_zero() {
                return Err(mincyc_cycles::CycleError::NotGeneric { factor: format!("c{} + c{}", i + 1, j + 1) }.into());
            }
        }
    }
    Ok(())
}

/// `dim e_c(M_{N,l})`, or `dim e_c(M^{(r)}_{N,l})` when `r` is given,
/// computed as `dim A_{N,l}` minus the rank of the evaluated null blocks
/// wedged with `A_{N,l−wt}`, together with the comparison against
/// `C(N,l) − C(N,l−1)` or `K^{(r−2)}_{N−2l,(1^N)}(1)`.
///
/// Negative expected values (`2l > N`) are clamped to zero.
pub fn dim_ec_m(n: usize, l: usize, c: &[BigRational], r: Option<usize>) -> Result<(usize, VerificationOutcome), QuotientError> {
    if l > n || c.len() != n {
        return Err(QuotientError::InvalidParams(format!("N = {}, l = {}, {} values", n, l, c.len())));
    }
    check_generic(c)?;
    let mut blocks: Vec<(usize, Ext)> = vec![(1, named_cycle(NamedCycle::Sigma1, n)?.exterior_coefficients())];
    if n >= 2 {
        blocks.push((2, named_cycle(NamedCycle::Sigma2, n)?.exterior_coefficients()));
    }
    let expected = match r {
        None => (binomial(n as i64, l as i64) - binomial(n as i64, l as i64 - 1)).max(0),
        Some(r) => {
            let mu = restriction_mu(n, l, r);
            let k = restricted_kostka_or_zero(r - 2, n as i64 - 2 * l as i64, n);
            if mu < 1 {
                let out = VerificationOutcome::pass(0, 0).with_detail(format!("mu = {} < 1: no restricted paths", mu));
                return Ok((0, out));
            }
            let mu = mu as usize;
            if n >= 2 {
                let g2 = named_cycle(NamedCycle::Gamma2, n)?.exterior_coefficients();
                let nu = mu / 2;
                if mu % 2 == 0 {
                    blocks.push((2 * nu, ext_power(&g2, nu, n)));
                } else {
                    let g1 = named_cycle(NamedCycle::Gamma1 { r: r as i64 }, n)?.exterior_coefficients();
                    blocks.push((2 * nu + 1, ext_wedge(&g1, &ext_power(&g2, nu, n))));
                    blocks.push((2 * nu + 2, ext_power(&g2, nu + 1, n)));
                }
            } else if mu == 1 {
                blocks.push((1, named_cycle(NamedCycle::Gamma1 { r: r as i64 }, n)?.exterior_coefficients()));
            }
            int_coeffs(&k).iter().sum::<i64>()
        }
    };
    let targets = exponent_tuples(n, l);
    let mut ech = Echelon::<BigRational>::new(targets.len());
    for (wt, ext) in blocks.iter().filter(|(wt, _)| *wt <= l) {
        let e = evaluate(ext, c);
        for j2 in exponent_tuples(n, l - wt) {
            let mut row = vec![BigRational::zero(); targets.len()];
            for (j1, v) in &e {
                if j1.iter().any(|x| j2.contains(x)) {
                    continue;
                }
                let mut j: Vec<u16> = j1.iter().chain(j2.iter()).copied().collect();
                let sign = sort_sign(&j);
                j.sort_unstable_by(|a, b| b.cmp(a));
                let col = targets.iter().position(|t| *t == j).expect("tuple in range");
                if sign > 0 {
                    row[col] += v;
                } else {
                    row[col] -= v;
                }
            }
            ech.insert(&sparsify(&row));
        }
    }
    let dim = targets.len() - ech.rank();
    let label = format!("N={} l={}{}", n, l, r.map(|r| format!(" r={}", r)).unwrap_or_default());
    let out = if dim as i64 == expected {
        VerificationOutcome::pass(expected, dim).with_detail(label)
    } else {
        VerificationOutcome::fail(expected, dim, label)
    };
    Ok((dim, out))
}

#[cfg(test)]
mod tests {
    use super::*;
    use mincyc_cycles::default_generic_point;

    #[test]
    fn small_generic_dims() {
        assert_eq!(dim_ec_m(2, 1, &default_generic_point(2), None).unwrap().0, 1);
        assert_eq!(dim_ec_m(6, 3, &default_generic_point(6), None).unwrap().0, 5);
        assert_eq!(dim_ec_m(3, 1, &default_generic_point(3), Some(3)).unwrap().0, 1);
    }

    #[test]
    fn degenerate_point_is_rejected() {
        let c = vec![mincyc_core::rat(1), mincyc_core::rat(-1)];
        assert!(dim_ec_m(2, 1, &c, None).is_err());
    }
}
