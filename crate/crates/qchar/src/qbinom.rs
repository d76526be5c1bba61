//! Gaussian binomials and q-Pochhammer quotients as exact polynomials.

use mincyc_core::{rat, BigRational, QSeries};
use num_traits::Zero;

/// An exact Laurent polynomial in `q`.
pub type QPoly = QSeries;

/// `[N, l]` by the q-Pascal rule `[N,l] = [N−1,l−1] + q^l [N−1,l]`.
///
/// Zero when `l < 0` or `l > N`.
pub fn gaussian_binomial(n: i64, l: i64) -> QPoly {
    if l < 0 || n < 0 || l > n {
        return QSeries::zero();
    }
    let l = l as usize;
    let n = n as usize;
    // row[k] holds the coefficient list of [row_n, k] for k <= l.
    let mut row: Vec<Vec<i128>> = vec![vec![1]];
    for m in 1..=n {
        let top = l.min(m);
        let mut next: Vec<Vec<i128>> = Vec::with_capacity(top + 1);
        for k in 0..=top {
            if k == 0 || k == m {
                next.push(vec![1]);
                continue;
            }
            let a = &row[k - 1];
            let empty = Vec::new();
            let b = if k < row.len() { &row[k] } else { &empty };
            let len = a.len().max(b.len() + k);
            let mut c = vec![0i128; len];
            for (i, x) in a.iter().enumerate() {
                c[i] += x;
            }
            for (i, x) in b.iter().enumerate() {
                c[i + k] += x;
            }
            next.push(c);
        }
        row = next;
    }
    QSeries::poly(false, 0, row[l].iter().map(|&c| rat_i128(c)).collect())
}

fn rat_i128(c: i128) -> BigRational {
    BigRational::from_integer(c.into())
}

/// `[N, l]` as the quotient `(q)_N / ((q)_l (q)_{N−l})`, by exact polynomial
/// division. Used as an independent oracle for `gaussian_binomial`.
pub fn gaussian_binomial_quotient(n: i64, l: i64) -> QPoly {
    if l < 0 || n < 0 || l > n {
        return QSeries::zero();
    }
    let num = QSeries::qpoch(n as usize);
    let den = &QSeries::qpoch(l as usize) * &QSeries::qpoch((n - l) as usize);
    poly_div_exact(&num, &den).expect("Gaussian binomial quotient is exact")
}

/// Exact division of polynomials in `q` with nonnegative exponents, `None`
/// when a remainder is left.
pub fn poly_div_exact(num: &QPoly, den: &QPoly) -> Option<QPoly> {
    assert!(num.is_exact() && den.is_exact());
    if den.is_zero() {
        return None;
    }
    if num.is_zero() {
        return Some(QSeries::zero());
    }
    let shift = num.lowest() - den.lowest();
    let a: Vec<BigRational> = num.coeffs().to_vec();
    let b = den.coeffs();
    if a.len() < b.len() {
        return None;
    }
    let mut rem = a;
    let mut quo = vec![BigRational::zero(); rem.len() - b.len() + 1];
    let lead = b[b.len() - 1].clone();
    for i in (0..quo.len()).rev() {
        let c = &rem[i + b.len() - 1] / &lead;
        if !c.is_zero() {
            for (j, bj) in b.iter().enumerate() {
                rem[i + j] -= &c * bj;
            }
        }
        quo[i] = c;
    }
    if rem.iter().all(|c| c.is_zero()) {
        Some(QSeries::poly(false, shift, quo))
    } else {
        None
    }
}

/// `1 / (q)_n` known below `q^order`.
pub fn inv_qpoch(n: usize, order: i64) -> QSeries {
    QSeries::qpoch(n).inverse_to(order).expect("(q)_n has constant term 1")
}

/// Integer coefficient list `[c_0, c_1, …]` of an exact polynomial with
/// nonnegative exponents.
pub fn int_coeffs(p: &QPoly) -> Vec<i64> {
    use num_traits::ToPrimitive;
    match p.highest() {
        None => Vec::new(),
        Some(h) => (0..=h)
            .map(|e| p.coeff(e).unwrap().to_integer().to_i64().expect("integer coefficient"))
            .collect(),
    }
}

/// The constant polynomial `c`.
pub fn qconst(c: i64) -> QPoly {
    QSeries::monomial(false, 0, rat(c))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_binomials() {
        assert_eq!(int_coeffs(&gaussian_binomial(5, 0)), vec![1]);
        assert_eq!(int_coeffs(&gaussian_binomial(2, 1)), vec![1, 1]);
        assert_eq!(int_coeffs(&gaussian_binomial(4, 2)), vec![1, 1, 2, 1, 1]);
        assert!(gaussian_binomial(3, 4).is_zero());
        assert!(gaussian_binomial(3, -1).is_zero());
    }

    #[test]
    fn pascal_agrees_with_quotient() {
        for n in 0..12 {
            for l in -1..=n + 1 {
                assert_eq!(gaussian_binomial(n, l), gaussian_binomial_quotient(n, l), "[{}, {}]", n, l);
            }
        }
    }

    #[test]
    fn geometric_inverse_of_qpoch_one() {
        assert_eq!(inv_qpoch(1, 5).to_string(), "1 + q + q^2 + q^3 + q^4 + O(q^5)");
    }
}
