//! Kostka polynomials of type A1: fermionic sums, the closed form for
//! `ν = (1^N)`, and the level-restricted versions.

use mincyc_core::QSeries;

use crate::qbinom::{gaussian_binomial, QPoly};

/// A configuration `n = (n_1, n_2, …)` with its statistics.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FermionicConfig {
    pub n: Vec<i64>,
    /// Exponent `c(n)`.
    pub c: i64,
    /// Vacancy numbers `P_j`, one per entry of `n`.
    pub p: Vec<i64>,
}

impl FermionicConfig {
    /// `q^{c(n)} Π_j [P_j + n_j, n_j]`, zero if some `P_j < 0`.
    pub fn weight(&self) -> QPoly {
        if self.p.iter().any(|&p| p < 0) {
            return QSeries::zero();
        }
        let mut acc = QSeries::one().shift(self.c);
        for (&nj, &pj) in self.n.iter().zip(&self.p) {
            if nj > 0 {
                acc = &acc * &gaussian_binomial(pj + nj, nj);
            }
        }
        acc
    }
}

/// `m_a = #{j : ν_j = a}` for `a = 1..=len`.
fn multiplicities(nu: &[usize], len: usize) -> Vec<i64> {
    let mut m = vec![0i64; len + 1];
    for &a in nu {
        if a >= 1 && a <= len {
            m[a] += 1;
        }
    }
    m
}

/// All `(n_1..n_k)` with `Σ j·n_j = target`.
fn weighted_compositions(k: usize, target: i64) -> Vec<Vec<i64>> {
    fn rec(j: usize, k: usize, rem: i64, cur: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if j > k {
            if rem == 0 {
                out.push(cur.clone());
            }
            return;
        }
        let mut nj = 0;
        while nj * (j as i64) <= rem {
            cur.push(nj);
            rec(j + 1, k, rem - nj * j as i64, cur, out);
            cur.pop();
            nj += 1;
        }
    }
    let mut out = Vec::new();
    if target >= 0 {
        rec(1, k, target, &mut Vec::new(), &mut out);
    }
    out
}

/// The configurations of a (possibly level-restricted) fermionic sum.
///
/// `level = None` gives the unrestricted sum, where `j` runs up to the
/// largest value that can carry a nonzero `n_j`. `level = Some(k)` restricts
/// `j` to `1..=k` and adds the `v_j = max(0, j − k + m)` corrections.
pub fn fermionic_configs(m: i64, nu: &[usize], level: Option<usize>) -> Vec<FermionicConfig> {
    let top_part = nu.iter().copied().max().unwrap_or(0);
    let total: i64 = nu.iter().map(|&a| a as i64).sum();
    let jmax = match level {
        Some(k) => k,
        None => (total.max(0) as usize).max(top_part).max(1),
    };
    let mult = multiplicities(nu, jmax.max(top_part));
    let rhs: i64 = (1..=jmax).map(|j| j as i64 * mult[j]).sum::<i64>() - m;
    if rhs < 0 || rhs % 2 != 0 {
        return Vec::new();
    }
    let v = |j: usize| -> i64 {
        match level {
            Some(k) => (j as i64 - k as i64 + m).max(0),
            None => 0,
        }
    };
    let mut out = Vec::new();
    for n in weighted_compositions(jmax, rhs / 2) {
        let mut c = 0i64;
        for j in 1..=jmax {
            for jp in 1..=jmax {
                c += (j.min(jp) as i64) * n[j - 1] * n[jp - 1];
            }
            c += v(j) * n[j - 1];
        }
        let p: Vec<i64> = (1..=jmax)
            .map(|j| {
                let s: i64 = (1..=jmax).map(|jp| (j.min(jp) as i64) * (mult[jp] - 2 * n[jp - 1])).sum();
                s - v(j)
            })
            .collect();
        out.push(FermionicConfig { n, c, p });
    }
    out
}

/// `K_{m,ν}(q)` by the fermionic sum.
pub fn kostka_fermionic(m: i64, nu: &[usize]) -> QPoly {
    if m < 0 {
        return QSeries::zero();
    }
    fermionic_configs(m, nu, None).iter().fold(QSeries::zero(), |acc, cfg| &acc + &cfg.weight())
}

/// `K_{m,(1^N)}(q) = [N, (N−m)/2] − [N, (N−m−2)/2]` for `m ≡ N mod 2`, else 0.
///
/// Defined for every integer `m`; negative `m` satisfies
/// `K_{m} = −K_{−m−2}`.
pub fn kostka_closed(m: i64, n: i64) -> QPoly {
    if (n - m).rem_euclid(2) != 0 {
        return QSeries::zero();
    }
    &gaussian_binomial(n, (n - m) / 2) - &gaussian_binomial(n, (n - m - 2) / 2)
}

/// Level-`k` restricted `K^{(k)}_{m,ν}(q)` by the fermionic sum.
///
/// Returns zero for `m` outside `0..=k`.
pub fn restricted_kostka_nu(k: usize, m: i64, nu: &[usize]) -> QPoly {
    if m < 0 || m > k as i64 {
        return QSeries::zero();
    }
    fermionic_configs(m, nu, Some(k)).iter().fold(QSeries::zero(), |acc, cfg| &acc + &cfg.weight())
}

/// `K^{(k)}_{m,(1^N)}(q)`.
pub fn restricted_kostka(k: usize, m: i64, n: usize) -> QPoly {
    restricted_kostka_nu(k, m, &vec![1; n])
}

/// `K^{(k)}_{m,(1^N)}(q)` by the alternating sum over unrestricted Kostka
/// polynomials with `r = k + 2`.
pub fn restricted_kostka_altsum(k: usize, m: i64, n: usize) -> QPoly {
    let r = k as i64 + 2;
    let n = n as i64;
    let mut acc = QSeries::zero();
    // Terms vanish once the Kostka index exceeds N.
    let mut i = 0i64;
    while 2 * r * i + m <= n {
        let t = kostka_closed(2 * r * i + m, n).shift(r * i * i + (m + 1) * i);
        acc = &acc + &t;
        i += 1;
    }
    let mut i = 1i64;
    while 2 * r * i - m - 2 <= n {
        let t = kostka_closed(2 * r * i - m - 2, n).shift(r * i * i - (m + 1) * i);
        acc = &acc - &t;
        i += 1;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qbinom::int_coeffs;

    #[test]
    fn closed_form_examples() {
        assert_eq!(int_coeffs(&kostka_closed(0, 2)), vec![0, 1]);
        assert!(kostka_closed(1, 2).is_zero());
        assert_eq!(int_coeffs(&kostka_closed(1, 3)), vec![0, 1, 1]);
    }

    #[test]
    fn fermionic_examples() {
        assert_eq!(int_coeffs(&kostka_fermionic(4, &[1, 1, 1, 1])), vec![1]);
        assert_eq!(int_coeffs(&kostka_fermionic(1, &[1, 1, 1])), vec![0, 1, 1]);
        assert!(kostka_fermionic(2, &[1, 1, 1]).is_zero());
    }

    #[test]
    fn restricted_single_configuration() {
        let cfgs = fermionic_configs(1, &[1, 1, 1], Some(1));
        assert_eq!(cfgs.len(), 1);
        assert_eq!(cfgs[0].n, vec![1]);
        assert_eq!(cfgs[0].c, 2);
        assert_eq!(cfgs[0].p, vec![0]);
        assert_eq!(int_coeffs(&restricted_kostka(1, 1, 3)), vec![0, 0, 1]);
        assert_eq!(int_coeffs(&restricted_kostka_altsum(1, 1, 3)), vec![0, 0, 1]);
    }

    #[test]
    fn reflection_of_closed_form() {
        for n in 0..8 {
            for m in -6..8 {
                assert_eq!(kostka_closed(m, n), -&kostka_closed(-m - 2, n), "m={} N={}", m, n);
            }
        }
    }
}
