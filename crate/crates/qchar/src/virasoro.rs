//! Virasoro minimal-series characters, their finitizations and the sector
//! identity that expresses restricted Kostka sums through them.

use mincyc_core::{frac, BigRational, QSeries, VerificationOutcome};

use crate::kostka::restricted_kostka;
use crate::qbinom::{gaussian_binomial, inv_qpoch, QPoly};

/// Labels `(r, b, a)` of the unitary minimal character `χ^{(r,r+1)}_{b,a}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct VirasoroParams {
    pub r: i64,
    pub b: i64,
    pub a: i64,
}

impl VirasoroParams {
    pub fn new(r: i64, b: i64, a: i64) -> Self {
        assert!(r >= 3, "r must be at least 3");
        VirasoroParams { r, b, a }
    }

    /// Central charge `1 − 6/(r(r+1))`.
    pub fn central_charge(&self) -> BigRational {
        frac(1, 1) - frac(6, self.r * (self.r + 1))
    }

    /// Conformal weight `(((r+1)b − ra)² − 1) / (4r(r+1))`.
    pub fn weight(&self) -> BigRational {
        let x = (self.r + 1) * self.b - self.r * self.a;
        frac(x * x - 1, 4 * self.r * (self.r + 1))
    }

    fn first_exponent(&self, n: i64) -> i64 {
        let (r, b, a) = (self.r, self.b, self.a);
        r * (r + 1) * n * n + ((r + 1) * b - r * a) * n
    }

    fn second_exponent(&self, n: i64) -> i64 {
        let (r, b, a) = (self.r, self.b, self.a);
        r * (r + 1) * n * n + ((r + 1) * b + r * a) * n + b * a
    }
}

/// Integers `n` with `f(n) < order` for a convex quadratic `f` whose vertex
/// lies within distance one of the origin; asserts the window is closed.
fn quadratic_window(order: i64, f: impl Fn(i64) -> i64) -> Vec<i64> {
    let mut out = Vec::new();
    let mut n = 0;
    while f(n) < order || f(n + 1) < order {
        if f(n) < order {
            out.push(n);
        }
        n += 1;
    }
    let mut n = -1;
    while f(n) < order || f(n - 1) < order {
        if f(n) < order {
            out.push(n);
        }
        n -= 1;
    }
    out.sort();
    out
}

/// `χ̂^{(r,r+1)}_{b,a}(q)` known below `q^order`.
pub fn virasoro_char(p: VirasoroParams, order: i64) -> QSeries {
    assert!(order >= 1);
    let mut theta = QSeries::zero();
    for n in quadratic_window(order, |n| p.first_exponent(n)) {
        theta = &theta + &QSeries::one().shift(p.first_exponent(n));
    }
    for n in quadratic_window(order, |n| p.second_exponent(n)) {
        theta = &theta - &QSeries::one().shift(p.second_exponent(n));
    }
    let theta = theta.truncate(order);
    let inv = QSeries::qpoch_inf(order).invert_unit().expect("(q)_inf is a unit");
    (&theta * &inv).truncate(order)
}

/// The finitized character `χ̂^{(r,r+1)}_{b,a}(q; L)`, zero unless
/// `L ≡ b − a mod 2`. With `invert_q` the result is taken at `q^{-1}`.
pub fn abf_finitized(p: VirasoroParams, l: i64, invert_q: bool) -> QPoly {
    let (r, b, a) = (p.r, p.b, p.a);
    if (l - b + a).rem_euclid(2) != 0 {
        return QSeries::zero();
    }
    let mut acc = QSeries::zero();
    let span = l / (r + 1) + 2;
    for n in -span..=span {
        let k1 = (l - b + a) / 2 - (r + 1) * n;
        let t1 = gaussian_binomial(l, k1);
        if !t1.is_zero() {
            acc = &acc + &t1.shift(p.first_exponent(n));
        }
        // b + a has the parity of L, so (L − b − a)/2 is an integer.
        let k2 = (l - b - a) / 2 - (r + 1) * n;
        let t2 = gaussian_binomial(l, k2);
        if !t2.is_zero() {
            acc = &acc - &t2.shift(p.second_exponent(n));
        }
    }
    if invert_q {
        acc.invert_var()
    } else {
        acc
    }
}

/// Both sides of the sector identity as `u = q^{1/2}` series known below
/// `q^order`.
#[derive(Clone, Debug)]
pub struct VirIdentitySides {
    pub lhs: QSeries,
    pub rhs: QSeries,
    /// Number of `N` terms summed on the left.
    pub lhs_terms: usize,
    /// The `a` labels that contributed on the right.
    pub rhs_labels: Vec<i64>,
}

/// `Σ_N q^{(N²−m²)/4 − LN/2} K^{(r−2)}_{m,(1^N)}(q) / (q)_N` in `u`, known below
/// `q^order`. Returns the series and the number of summed terms.
///
/// The exponent `(N²−m²)/4 − LN/2` is convex in `N` and the Kostka factor
/// starts at `q^0` or higher, so once `N > L` and the exponent reaches
/// `order` every later term lies entirely above the window.
pub fn sector_lhs(r: i64, m: i64, l: i64, order: i64) -> (QSeries, usize) {
    let t_u = 2 * order;
    let mut acc = QSeries::zero().to_half().truncate(t_u);
    let mut terms = 0;
    let mut n = m;
    loop {
        let e_u = (n * n - m * m) / 2 - l * n;
        if e_u >= t_u {
            if n > l {
                break;
            }
            n += 2;
            continue;
        }
        let k = restricted_kostka((r - 2) as usize, m, n as usize);
        if !k.is_zero() {
            // 1/(q)_N is needed to relative q-order ceil((t_u − e_u)/2).
            let rel = (t_u - e_u + 1) / 2;
            let term = (&k * &inv_qpoch(n as usize, rel)).to_half().shift(e_u);
            acc = &acc + &term;
            terms += 1;
        }
        n += 2;
    }
    (acc.truncate(t_u), terms)
}

/// `Σ_a χ̂_{m+1,a}(q) q^{−(a−1)m/2} χ̂_{1,a}(q^{-1}; L)` over `1 ≤ a ≤ r`,
/// `a ≡ L − 1 mod 2`, in `u`, known below `q^order`.
///
/// Each finitized factor is a Laurent polynomial whose lowest exponent `E`
/// can be negative, so `χ̂_{m+1,a}` is expanded to order
/// `order − E + ⌈(a−1)m/2⌉`.
pub fn sector_rhs(r: i64, m: i64, l: i64, order: i64) -> (QSeries, Vec<i64>) {
    let t_u = 2 * order;
    let mut acc = QSeries::zero().to_half().truncate(t_u);
    let mut labels = Vec::new();
    for a in 1..=r {
        if (a - l - 1).rem_euclid(2) != 0 {
            continue;
        }
        let fin = abf_finitized(VirasoroParams::new(r, 1, a), l, true);
        if fin.is_zero() {
            continue;
        }
        let e_min = fin.lowest();
        let shift_u = -(a - 1) * m;
        let need = order - e_min + ((a - 1) * m + 1) / 2;
        let chi = virasoro_char(VirasoroParams::new(r, m + 1, a), need.max(1));
        let term = (&chi.to_half() * &fin.to_half()).shift(shift_u);
        acc = &acc + &term;
        labels.push(a);
    }
    (acc.truncate(t_u), labels)
}

pub fn vir_identity_sides(r: i64, m: i64, l: i64, order: i64) -> VirIdentitySides {
    let (lhs, lhs_terms) = sector_lhs(r, m, l, order);
    let (rhs, rhs_labels) = sector_rhs(r, m, l, order);
    VirIdentitySides { lhs, rhs, lhs_terms, rhs_labels }
}

/// First `u`-exponent below `t_u` where two series differ.
pub fn first_difference(a: &QSeries, b: &QSeries, t_u: i64) -> Option<i64> {
    let lo = a.lowest().min(b.lowest());
    (lo..t_u).find(|&e| a.coeff(e) != b.coeff(e))
}

/// Coefficientwise check of the sector identity below `q^order`.
pub fn verify_vir_identity(r: i64, m: i64, l: i64, order: i64) -> VerificationOutcome {
    let sides = vir_identity_sides(r, m, l, order);
    let t_u = 2 * order;
    match first_difference(&sides.lhs, &sides.rhs, t_u) {
        None => VerificationOutcome::pass(&sides.rhs, &sides.lhs),
        Some(e) => VerificationOutcome::fail(&sides.rhs, &sides.lhs, format!("first difference at q^({}/2)", e)),
    }
}

/// At `L = 0` the left side equals the single character `χ̂_{m+1,1}(q)`.
pub fn verify_vir_single_term(r: i64, m: i64, order: i64) -> VerificationOutcome {
    let (lhs, _) = sector_lhs(r, m, 0, order);
    let chi = virasoro_char(VirasoroParams::new(r, m + 1, 1), order).to_half();
    match first_difference(&chi, &lhs, 2 * order) {
        None => VerificationOutcome::pass(&chi, &lhs),
        Some(e) => VerificationOutcome::fail(&chi, &lhs, format!("first difference at q^({}/2)", e)),
    }
}

/// The sector character as `q^{offset} · series`.
///
/// The summand exponents `N²/4 − LN/2` sit on the `q^{1/4}` lattice when `m`
/// is odd, so the constant `m²/4` is moved into the offset:
/// `offset = m(m+2)/(4r) + m²/4` and `series` is the left side of the sector
/// identity, a `u`-series.
pub fn rsg_sector_char(r: i64, m: i64, l: i64, order: i64) -> (BigRational, QSeries) {
    assert!(m >= 0 && m <= r - 2);
    let offset = frac(m * (m + 2), 4 * r) + frac(m * m, 4);
    (offset, sector_lhs(r, m, l, order).0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qbinom::int_coeffs;

    #[test]
    fn ising_labels() {
        let p = VirasoroParams::new(3, 1, 1);
        assert_eq!(p.central_charge(), frac(1, 2));
        assert_eq!(p.weight(), frac(0, 1));
        assert_eq!(VirasoroParams::new(3, 2, 1).weight(), frac(1, 2));
    }

    #[test]
    fn constant_terms_are_one() {
        for r in 3..7 {
            for b in 1..r {
                for a in 1..=r {
                    let s = virasoro_char(VirasoroParams::new(r, b, a), 3);
                    assert_eq!(s.coeff(0), Some(frac(1, 1)), "r={} b={} a={}", r, b, a);
                }
            }
        }
    }

    #[test]
    fn finitized_trivial_cases() {
        assert_eq!(int_coeffs(&abf_finitized(VirasoroParams::new(3, 1, 1), 0, false)), vec![1]);
        assert!(abf_finitized(VirasoroParams::new(3, 1, 2), 0, false).is_zero());
    }

    #[test]
    fn ising_vacuum_identity() {
        assert!(verify_vir_identity(3, 0, 0, 10).is_pass());
        assert!(verify_vir_single_term(3, 0, 10).is_pass());
    }
}
