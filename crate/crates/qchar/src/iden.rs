//! The z-expansion identity
//! `Σ_p (z q^{p+1}; q)_∞ z^p q^{p(p−N)} / (q)_p = Σ_s [N, s]_{q^{-1}} z^s`.

use mincyc_core::{QSeries, VerificationOutcome};

use crate::qbinom::{gaussian_binomial, poly_div_exact, QPoly};

/// `(q)_s` times the left coefficient of `z^s`, an exact Laurent polynomial:
/// `Σ_{p=0}^{s} (−1)^{s−p} q^{p(p−N) + (s−p)(p+1) + (s−p)(s−p−1)/2} [s, p]`.
///
/// The `z^{s−p}` coefficient of `(z q^{p+1}; q)_∞` is
/// `(−1)^{s−p} q^{(s−p)(p+1) + (s−p)(s−p−1)/2} / (q)_{s−p}`, and
/// `(q)_s / ((q)_p (q)_{s−p}) = [s, p]`.
pub fn iden_lhs_cleared(n: i64, s: i64) -> QPoly {
    let mut acc = QSeries::zero();
    for p in 0..=s {
        let k = s - p;
        let e = p * (p - n) + k * (p + 1) + k * (k - 1) / 2;
        let mut t = gaussian_binomial(s, p).shift(e);
        if k % 2 == 1 {
            t = -&t;
        }
        acc = &acc + &t;
    }
    acc
}

/// `(q)_s · [N, s]_{q^{-1}}`.
pub fn iden_rhs_cleared(n: i64, s: i64) -> QPoly {
    &gaussian_binomial(n, s).invert_var() * &QSeries::qpoch(s as usize)
}

/// Checks every `z^s` coefficient for `s ≤ s_max` as an identity of rational
/// functions in `q` with common denominator `(q)_s`.
pub fn verify_lemma_iden(n: i64, s_max: i64) -> VerificationOutcome {
    let mut parts = Vec::new();
    for s in 0..=s_max {
        let lhs = iden_lhs_cleared(n, s);
        let rhs = iden_rhs_cleared(n, s);
        if lhs != rhs {
            return VerificationOutcome::fail(&rhs, &lhs, format!("N={} s={}", n, s));
        }
        parts.push(lhs);
    }
    VerificationOutcome::pass(
        format!("{} coefficients", parts.len()),
        format!("{} coefficients", parts.len()),
    )
}

/// The left coefficient of `z^s` itself, `iden_lhs_cleared / (q)_s`, when the
/// division is exact (it is whenever the identity holds).
pub fn iden_lhs_coefficient(n: i64, s: i64) -> Option<QPoly> {
    let num = iden_lhs_cleared(n, s);
    if num.is_zero() {
        return Some(QSeries::zero());
    }
    // Divide a Laurent polynomial by (q)_s after moving it to q^0.
    let low = num.lowest();
    poly_div_exact(&num.shift(-low), &QSeries::qpoch(s as usize)).map(|p| p.shift(low))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hand_values() {
        assert_eq!(iden_lhs_coefficient(3, 0).unwrap(), QSeries::one());
        // N = 2, s = 1: 1 + q^{-1}.
        assert_eq!(iden_lhs_coefficient(2, 1).unwrap().to_string(), "q^-1 + 1");
        assert!(iden_lhs_coefficient(2, 3).unwrap().is_zero());
    }
}
