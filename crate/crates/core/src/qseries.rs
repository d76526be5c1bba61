//! Truncated Laurent series in `q` or `u = q^{1/2}` with rational coefficients.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::CoreError;
use crate::gaussian::fmt_rational;

/// A Laurent series `Σ_k c_k x^k` where `x` is `q` or, when `half_step` is
/// set, `u = q^{1/2}`.
///
/// `coeffs[i]` is the coefficient of `x^{lowest + i}`. Exponents at or above
/// `trunc` are unknown; `trunc = None` marks an exact Laurent polynomial.
/// Stored coefficients never start or end with a zero, and a zero series has
/// `lowest = 0`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QSeries {
    half_step: bool,
    lowest: i64,
    coeffs: Vec<BigRational>,
    trunc: Option<i64>,
}

fn min_opt(a: Option<i64>, b: Option<i64>) -> Option<i64> {
    match (a, b) {
        (Some(x), Some(y)) => Some(x.min(y)),
        (Some(x), None) | (None, Some(x)) => Some(x),
        (None, None) => None,
    }
}

impl QSeries {
    pub fn new(half_step: bool, lowest: i64, coeffs: Vec<BigRational>, trunc: Option<i64>) -> Self {
        let mut s = QSeries { half_step, lowest, coeffs, trunc };
        s.normalize();
        s
    }

    /// An exact Laurent polynomial.
    pub fn poly(half_step: bool, lowest: i64, coeffs: Vec<BigRational>) -> Self {
        Self::new(half_step, lowest, coeffs, None)
    }

    /// An exact polynomial in `q` from integer coefficients starting at `q^0`.
    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::poly(false, 0, coeffs.iter().map(|&c| BigRational::from_integer(BigInt::from(c))).collect())
    }

    pub fn zero() -> Self {
        Self::poly(false, 0, Vec::new())
    }

    pub fn one() -> Self {
        Self::monomial(false, 0, BigRational::one())
    }

    /// `c · x^e`.
    pub fn monomial(half_step: bool, e: i64, c: BigRational) -> Self {
        Self::poly(half_step, e, vec![c])
    }

    /// `(q)_n = Π_{j=1}^{n} (1 − q^j)`, exact.
    pub fn qpoch(n: usize) -> Self {
        let mut acc = Self::one();
        for j in 1..=n as i64 {
            acc = &acc * &(&Self::one() - &Self::monomial(false, j, BigRational::one()));
        }
        acc
    }

    /// `(q)_∞` known below `q^order`.
    pub fn qpoch_inf(order: i64) -> Self {
        let mut acc = Self::one().truncate(order);
        for j in 1..order {
            acc = &acc * &(&Self::one() - &Self::monomial(false, j, BigRational::one()));
        }
        acc
    }

    fn normalize(&mut self) {
        if let Some(t) = self.trunc {
            let keep = (t - self.lowest).max(0) as usize;
            if self.coeffs.len() > keep {
                self.coeffs.truncate(keep);
            }
        }
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
        let lead = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead == self.coeffs.len() {
            self.coeffs.clear();
            self.lowest = 0;
        } else if lead > 0 {
            self.coeffs.drain(..lead);
            self.lowest += lead as i64;
        }
    }

    pub fn half_step(&self) -> bool {
        self.half_step
    }

    pub fn lowest(&self) -> i64 {
        self.lowest
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn trunc_order(&self) -> Option<i64> {
        self.trunc
    }

    pub fn is_exact(&self) -> bool {
        self.trunc.is_none()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Exponent of the highest stored term.
    pub fn highest(&self) -> Option<i64> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.lowest + self.coeffs.len() as i64 - 1)
        }
    }

    /// Lowest exponent with a nonzero coefficient, the truncation order for a
    /// zero truncated series, and `None` for the exact zero.
    pub fn valuation(&self) -> Option<i64> {
        if self.coeffs.is_empty() {
            self.trunc
        } else {
            Some(self.lowest)
        }
    }

    /// Coefficient of `x^e`, `None` when `e` lies at or above the truncation.
    pub fn coeff(&self, e: i64) -> Option<BigRational> {
        if self.trunc.is_some_and(|t| e >= t) {
            return None;
        }
        let i = e - self.lowest;
        if i < 0 || i as usize >= self.coeffs.len() {
            Some(BigRational::zero())
        } else {
            Some(self.coeffs[i as usize].clone())
        }
    }

    /// Same series written in `u = q^{1/2}`.
    pub fn to_half(&self) -> Self {
        if self.half_step {
            return self.clone();
        }
        let mut coeffs = Vec::with_capacity(self.coeffs.len() * 2);
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                coeffs.push(BigRational::zero());
            }
            coeffs.push(c.clone());
        }
        QSeries::new(true, 2 * self.lowest, coeffs, self.trunc.map(|t| 2 * t))
    }

    /// Rewrites a `u`-series with only even exponents as a `q`-series.
    pub fn to_integral(&self) -> Option<Self> {
        if !self.half_step {
            return Some(self.clone());
        }
        if self.lowest % 2 != 0 && !self.coeffs.is_empty() {
            return None;
        }
        let mut coeffs = Vec::new();
        for (i, c) in self.coeffs.iter().enumerate() {
            if i % 2 == 1 {
                if !c.is_zero() {
                    return None;
                }
            } else {
                coeffs.push(c.clone());
            }
        }
        // A truncation at an odd u-exponent rounds up to the next q-exponent.
        let trunc = self.trunc.map(|t| (t + 1).div_euclid(2));
        Some(QSeries::new(false, self.lowest.div_euclid(2), coeffs, trunc))
    }

    fn aligned(a: &QSeries, b: &QSeries) -> (QSeries, QSeries) {
        if a.half_step == b.half_step {
            (a.clone(), b.clone())
        } else {
            (a.to_half(), b.to_half())
        }
    }

    pub fn add(&self, o: &QSeries) -> QSeries {
        let (a, b) = Self::aligned(self, o);
        if a.is_zero() && a.trunc.is_none() {
            return b;
        }
        if b.is_zero() && b.trunc.is_none() {
            return a;
        }
        let lo = if a.is_zero() {
            b.lowest
        } else if b.is_zero() {
            a.lowest
        } else {
            a.lowest.min(b.lowest)
        };
        let hi = a.highest().unwrap_or(lo).max(b.highest().unwrap_or(lo));
        let mut coeffs = vec![BigRational::zero(); (hi - lo + 1) as usize];
        for (s, c) in [&a, &b].iter().flat_map(|s| s.coeffs.iter().enumerate().map(move |(i, c)| (s.lowest + i as i64, c))) {
            coeffs[(s - lo) as usize] += c;
        }
        QSeries::new(a.half_step, lo, coeffs, min_opt(a.trunc, b.trunc))
    }

    pub fn neg(&self) -> QSeries {
        QSeries { half_step: self.half_step, lowest: self.lowest, coeffs: self.coeffs.iter().map(|c| -c).collect(), trunc: self.trunc }
    }

    pub fn sub(&self, o: &QSeries) -> QSeries {
        self.add(&o.neg())
    }

    pub fn scale(&self, c: &BigRational) -> QSeries {
        QSeries::new(self.half_step, self.lowest, self.coeffs.iter().map(|x| x * c).collect(), self.trunc)
    }

    pub fn mul(&self, o: &QSeries) -> QSeries {
        let (a, b) = Self::aligned(self, o);
        let trunc = match (a.trunc, b.trunc) {
            (None, None) => None,
            _ => {
                // Precision of the product: each truncation shifted by the
                // other factor's valuation.
                let ta = a.trunc.and_then(|t| b.valuation().map(|v| t + v));
                let tb = b.trunc.and_then(|t| a.valuation().map(|v| t + v));
                match min_opt(ta, tb) {
                    Some(t) => Some(t),
                    // Exact zero times a truncated series.
                    None => return QSeries::zero_like(a.half_step),
                }
            }
        };
        if a.is_zero() || b.is_zero() {
            return QSeries::new(a.half_step, 0, Vec::new(), trunc);
        }
        let lo = a.lowest + b.lowest;
        let mut len = a.coeffs.len() + b.coeffs.len() - 1;
        if let Some(t) = trunc {
            len = len.min((t - lo).max(0) as usize);
        }
        let mut coeffs = vec![BigRational::zero(); len];
        for (i, x) in a.coeffs.iter().enumerate() {
            if i >= len {
                break;
            }
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.coeffs.iter().enumerate() {
                if i + j >= len {
                    break;
                }
                if !y.is_zero() {
                    coeffs[i + j] += x * y;
                }
            }
        }
        QSeries::new(a.half_step, lo, coeffs, trunc)
    }

    fn zero_like(half_step: bool) -> QSeries {
        QSeries::poly(half_step, 0, Vec::new())
    }

    /// Multiplies by `x^k` (so a shift by `k` half-steps for `u`-series).
    pub fn shift(&self, k: i64) -> QSeries {
        QSeries {
            half_step: self.half_step,
            lowest: if self.coeffs.is_empty() { 0 } else { self.lowest + k },
            coeffs: self.coeffs.clone(),
            trunc: self.trunc.map(|t| t + k),
        }
    }

    /// Forgets every coefficient at or above `order`.
    pub fn truncate(&self, order: i64) -> QSeries {
        QSeries::new(self.half_step, self.lowest, self.coeffs.clone(), min_opt(self.trunc, Some(order)))
    }

    /// Inverse of a truncated series with nonzero leading coefficient.
    ///
    /// The relative precision is preserved: a series known to `x^t` with
    /// valuation `v` has an inverse known to `x^{t−2v}`.
    pub fn invert_unit(&self) -> Result<QSeries, CoreError> {
        let t = self.trunc.ok_or(CoreError::ExactInverse)?;
        self.inverse_to(t - 2 * self.lowest)
    }

    /// Inverse known below `x^order`.
    pub fn inverse_to(&self, order: i64) -> Result<QSeries, CoreError> {
        if self.coeffs.is_empty() {
            return Err(CoreError::ZeroLeading);
        }
        let v = self.lowest;
        let n = (order + v).max(0) as usize;
        let a0_inv = self.coeffs[0].recip();
        let mut inv: Vec<BigRational> = Vec::with_capacity(n);
        for k in 0..n {
            if k == 0 {
                inv.push(a0_inv.clone());
                continue;
            }
            let mut acc = BigRational::zero();
            for j in 1..=k.min(self.coeffs.len() - 1) {
                if !self.coeffs[j].is_zero() {
                    acc += &self.coeffs[j] * &inv[k - j];
                }
            }
            inv.push(-acc * &a0_inv);
        }
        let own = self.trunc.map(|t| t - 2 * v);
        Ok(QSeries::new(self.half_step, -v, inv, min_opt(own, Some(order))))
    }

    /// `x → x^{-1}` on an exact Laurent polynomial.
    pub fn invert_var(&self) -> QSeries {
        assert!(self.trunc.is_none(), "x -> 1/x needs an exact polynomial");
        match self.highest() {
            None => self.clone(),
            Some(h) => {
                let mut coeffs = self.coeffs.clone();
                coeffs.reverse();
                QSeries::poly(self.half_step, -h, coeffs)
            }
        }
    }

    /// Sum of the coefficients of an exact polynomial.
    pub fn eval_at_one(&self) -> BigRational {
        assert!(self.trunc.is_none(), "evaluation at 1 needs an exact polynomial");
        self.coeffs.iter().fold(BigRational::zero(), |a, c| a + c)
    }

    /// `(exponent, coefficient)` for each nonzero stored coefficient.
    pub fn terms(&self) -> Vec<(i64, BigRational)> {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| (self.lowest + i as i64, c.clone()))
            .collect()
    }

    /// Coefficients for exponents `lo..hi`, `None` where unknown.
    pub fn window(&self, lo: i64, hi: i64) -> Vec<Option<BigRational>> {
        (lo..hi).map(|e| self.coeff(e)).collect()
    }

    /// Whether every known coefficient is an integer.
    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_integer())
    }
}

impl<'a> Add<&'a QSeries> for &'a QSeries {
    type Output = QSeries;
    fn add(self, o: &QSeries) -> QSeries {
        QSeries::add(self, o)
    }
}

impl<'a> Sub<&'a QSeries> for &'a QSeries {
    type Output = QSeries;
    fn sub(self, o: &QSeries) -> QSeries {
        QSeries::sub(self, o)
    }
}

impl<'a> Mul<&'a QSeries> for &'a QSeries {
    type Output = QSeries;
    fn mul(self, o: &QSeries) -> QSeries {
        QSeries::mul(self, o)
    }
}

impl<'a> Neg for &'a QSeries {
    type Output = QSeries;
    fn neg(self) -> QSeries {
        QSeries::neg(self)
    }
}

fn render_power(half: bool, e: i64) -> String {
    if half {
        if e % 2 == 0 {
            render_power(false, e / 2)
        } else {
            format!("q^({}/2)", e)
        }
    } else {
        match e {
            0 => String::new(),
            1 => "q".to_string(),
            _ => format!("q^{}", e),
        }
    }
}

impl fmt::Display for QSeries {
    /// E.g. `1 - q - q^2 + O(q^5)` or `q^(-1/2) + 3*q`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (e, c) in self.terms() {
            let neg = c.is_negative();
            let mag = c.abs();
            let p = render_power(self.half_step, e);
            let body = if p.is_empty() {
                fmt_rational(&mag)
            } else if mag.is_one() {
                p
            } else {
                format!("{}*{}", fmt_rational(&mag), p)
            };
            if first {
                write!(f, "{}{}", if neg { "-" } else { "" }, body)?;
            } else {
                write!(f, " {} {}", if neg { "-" } else { "+" }, body)?;
            }
            first = false;
        }
        if let Some(t) = self.trunc {
            let p = render_power(self.half_step, t);
            let p = if p.is_empty() { "1".to_string() } else { p };
            if first {
                write!(f, "O({})", p)?;
            } else {
                write!(f, " + O({})", p)?;
            }
        } else if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl fmt::Debug for QSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(s: &QSeries, lo: i64, hi: i64) -> Vec<i64> {
        use num_traits::ToPrimitive;
        s.window(lo, hi).into_iter().map(|c| c.unwrap().to_integer().to_i64().unwrap()).collect()
    }

    #[test]
    fn geometric_inverse() {
        let s = QSeries::from_ints(&[1, -1]);
        let inv = s.inverse_to(5).unwrap();
        assert_eq!(ints(&inv, 0, 5), vec![1, 1, 1, 1, 1]);
        assert_eq!(inv.trunc_order(), Some(5));
        assert_eq!(inv.to_string(), "1 + q + q^2 + q^3 + q^4 + O(q^5)");
    }

    #[test]
    fn euler_product_matches_pentagonal_numbers() {
        // Independent oracle: coefficients of (q)_inf from Euler's pentagonal
        // theorem, Σ (−1)^k q^{k(3k−1)/2} over all integers k.
        let order = 40;
        let mut oracle = vec![0i64; order as usize];
        for k in -10i64..=10 {
            let e = k * (3 * k - 1) / 2;
            if (0..order).contains(&e) {
                oracle[e as usize] += if k % 2 == 0 { 1 } else { -1 };
            }
        }
        let p = QSeries::qpoch_inf(order);
        assert_eq!(ints(&p, 0, order), oracle);
        assert!(p.to_string().starts_with("1 - q - q^2 + q^5 + q^7"));
    }

    #[test]
    fn shift_moves_lowest_in_half_steps() {
        let s = QSeries::from_ints(&[1, 2]).to_half();
        let t = s.shift(-1);
        assert_eq!(t.lowest(), s.lowest() - 1);
        assert!(t.half_step());
    }

    #[test]
    fn inverting_zero_fails() {
        assert!(matches!(QSeries::zero().inverse_to(3), Err(CoreError::ZeroLeading)));
    }

    #[test]
    fn mixed_lattices_promote_to_half_steps() {
        let a = QSeries::monomial(false, 1, BigRational::one());
        let b = QSeries::monomial(true, 1, BigRational::one());
        let s = &a + &b;
        assert!(s.half_step());
        assert_eq!(s.to_string(), "q^(1/2) + q");
        assert_eq!((&a * &b).to_string(), "q^(3/2)");
    }

    #[test]
    fn truncation_tracks_valuation() {
        let a = QSeries::from_ints(&[0, 1, 1]).truncate(4);
        let b = QSeries::from_ints(&[0, 0, 1]).truncate(6);
        let p = &a * &b;
        // min(4 + 2, 6 + 1) = 6
        assert_eq!(p.trunc_order(), Some(6));
        assert_eq!(p.lowest(), 3);
    }
}
