//! Truncated characters of `W_{N,l}`, `M_{N,l}` and `M^{(r)}_{N,l}` by
//! per-degree dimension counting.

use mincyc_core::{QSeries, VerificationOutcome};
use mincyc_cycles::NamedCycle;
use mincyc_qchar::{gaussian_binomial, inv_qpoch, kostka_closed, restricted_kostka};
use num_traits::ToPrimitive;

use crate::error::QuotientError;
use crate::space::{ext_power, ext_wedge, min_degree, Block, QuotientEngine};

/// Which quotient a table describes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Space {
    W,
    M,
    Restricted { r: usize },
}

/// Dimensions for degrees `d_min..=max_deg` next to the expected series
/// coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharTable {
    pub n: usize,
    pub l: usize,
    pub space: Space,
    pub d_min: i64,
    pub dims: Vec<i64>,
    pub expected: Vec<i64>,
    pub note: Option<String>,
}

impl CharTable {
    pub fn degrees(&self) -> impl Iterator<Item = i64> + '_ {
        (0..self.dims.len()).map(move |i| self.d_min + i as i64)
    }

    pub fn outcome(&self) -> VerificationOutcome {
        let label = format!("{:?} N={} l={}", self.space, self.n, self.l);
        let out = match self.degrees().zip(self.dims.iter().zip(&self.expected)).find(|(_, (a, b))| a != b) {
            None => VerificationOutcome::pass(fmt_row(&self.expected), fmt_row(&self.dims)),
            Some((d, _)) => {
                VerificationOutcome::fail(fmt_row(&self.expected), fmt_row(&self.dims), format!("{}: first mismatch at degree {}", label, d))
            }
        };
        match (&self.note, out.is_pass()) {
            (Some(n), true) => out.with_detail(format!("{}: {}", label, n)),
            (None, true) => out.with_detail(label),
            _ => out,
        }
    }
}

fn fmt_row(v: &[i64]) -> String {
    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}

/// Coefficients of `numer/(q)_N` at degrees `d_min..=max_deg`.
pub fn expected_coeffs(numer: &QSeries, n: usize, d_min: i64, max_deg: i64) -> Vec<i64> {
    let series = numer.mul(&inv_qpoch(n, max_deg + 1));
    (d_min..=max_deg)
        .map(|d| if d < 0 { 0 } else { series.coeff(d).expect("within truncation").to_integer().to_i64().expect("small") })
        .collect()
}

/// `K_{m,(1^N)}(q)`, zero for `m < 0`.
pub fn kostka_or_zero(m: i64, n: usize) -> QSeries {
    if m < 0 {
        QSeries::zero()
    } else {
        kostka_closed(m, n as i64)
    }
}

/// `K^{(k)}_{m,(1^N)}(q)` by the fermionic sum, zero for `m < 0`.
pub fn restricted_kostka_or_zero(k: usize, m: i64, n: usize) -> QSeries {
    if m < 0 {
        QSeries::zero()
    } else {
        restricted_kostka(k, m, n)
    }
}

fn check(n: usize, l: usize) -> Result<(), QuotientError> {
    if l > n {
        return Err(QuotientError::InvalidParams(format!("l = {} exceeds N = {}", l, n)));
    }
    Ok(())
}

/// `dim W_{N,l,d}` for `d_min ≤ d ≤ max_deg` against `[N,l]/(q)_N`.
pub fn char_w_truncated(engine: &mut QuotientEngine, l: usize, max_deg: i64) -> Result<CharTable, QuotientError> {
    let n = engine.n;
    check(n, l)?;
    let d_min = min_degree(n, l);
    let dims = (d_min..=max_deg).map(|d| engine.basis(l, d).dim() as i64).collect();
    let expected = expected_coeffs(&gaussian_binomial(n as i64, l as i64), n, d_min, max_deg);
    Ok(CharTable { n, l, space: Space::W, d_min, dims, expected, note: None })
}

/// The blocks `Σ1`, `Σ2` spanning the unrestricted null subspace.
pub fn sigma_blocks(n: usize) -> Result<Vec<Block>, QuotientError> {
    let mut out = vec![Block::named(NamedCycle::Sigma1, n)?];
    if n >= 2 {
        out.push(Block::named(NamedCycle::Sigma2, n)?);
    }
    Ok(out)
}

/// The additional restricted blocks for `1 ≤ μ`:
/// `∧^ν Γ2` when `μ = 2ν`, and `Γ1 ∧ (∧^ν Γ2)` with `∧^{ν+1} Γ2` when
/// `μ = 2ν+1`.
pub fn gamma_blocks(n: usize, r: usize, mu: usize) -> Result<Vec<Block>, QuotientError> {
    let g2 = || -> Result<_, QuotientError> {
        if n < 2 {
            return Ok(None);
        }
        Ok(Some(mincyc_cycles::named_cycle(NamedCycle::Gamma2, n)?.exterior_coefficients()))
    };
    let nu = mu / 2;
    let mut out = Vec::new();
    if mu % 2 == 0 {
        if let Some(g) = g2()? {
            out.push(Block::from_ext(format!("Gamma2^{}", nu), 2 * nu, &ext_power(&g, nu, n))?);
        }
    } else {
        // μ odd forces r ≡ N (mod 2), which Γ1 requires.
        assert_eq!((r + n) % 2, 0, "odd mu needs r = N mod 2");
        let g1 = mincyc_cycles::named_cycle(NamedCycle::Gamma1 { r: r as i64 }, n)?.exterior_coefficients();
        match g2()? {
            Some(g) => {
                let p = ext_power(&g, nu, n);
                out.push(Block::from_ext(format!("Gamma1^Gamma2^{}", nu), 2 * nu + 1, &ext_wedge(&g1, &p))?);
                out.push(Block::from_ext(format!("Gamma2^{}", nu + 1), 2 * nu + 2, &ext_power(&g, nu + 1, n))?);
            }
            None if nu == 0 => out.push(Block::from_ext("Gamma1", 1, &g1)?),
            None => {}
        }
    }
    Ok(out)
}

/// `μ = r − 1 − (N − 2l)`.
pub fn restriction_mu(n: usize, l: usize, r: usize) -> i64 {
    r as i64 - 1 - (n as i64 - 2 * l as i64)
}

/// `dim M_{N,l,d} = dim W_{N,l,d} − rank(Σ1 ∧ W_{l−1,d} + Σ2 ∧ W_{l−2,d})`
/// against `K_{N−2l,(1^N)}/(q)_N`.
pub fn char_m_truncated(engine: &mut QuotientEngine, l: usize, max_deg: i64) -> Result<CharTable, QuotientError> {
    let n = engine.n;
    check(n, l)?;
    let blocks = sigma_blocks(n)?;
    let d_min = min_degree(n, l);
    let dims = (d_min..=max_deg).map(|d| (engine.basis(l, d).dim() - engine.span_rank(l, d, &blocks)) as i64).collect();
    let expected = expected_coeffs(&kostka_or_zero(n as i64 - 2 * l as i64, n), n, d_min, max_deg);
    Ok(CharTable { n, l, space: Space::M, d_min, dims, expected, note: None })
}

/// The restricted quotient `M^{(r)}_{N,l}` against
/// `K^{(r−2)}_{N−2l,(1^N)}/(q)_N`.
///
/// For `μ < 1` there are no restricted paths and the zero table is
/// returned with a note. For `μ > l` the `Γ` blocks exceed the weight and
/// the computation reduces to the unrestricted one.
pub fn char_m_restricted_truncated(
    engine: &mut QuotientEngine,
    l: usize,
    r: usize,
    max_deg: i64,
) -> Result<CharTable, QuotientError> {
    let n = engine.n;
    check(n, l)?;
    if r < 3 {
        return Err(QuotientError::InvalidParams(format!("r = {} < 3", r)));
    }
    let d_min = min_degree(n, l);
    let mu = restriction_mu(n, l, r);
    let k = r - 2;
    let expected = expected_coeffs(&restricted_kostka_or_zero(k, n as i64 - 2 * l as i64, n), n, d_min, max_deg);
    let space = Space::Restricted { r };
    if mu < 1 {
        let dims = vec![0; expected.len()];
        let note = Some(format!("mu = {} < 1: no restricted paths", mu));
        return Ok(CharTable { n, l, space, d_min, dims, expected, note });
    }
    let mut blocks = sigma_blocks(n)?;
    blocks.extend(gamma_blocks(n, r, mu as usize)?);
    let dims = (d_min..=max_deg).map(|d| (engine.basis(l, d).dim() - engine.span_rank(l, d, &blocks)) as i64).collect();
    let note = (mu as usize > l).then(|| format!("mu = {} > l: all paths restricted", mu));
    Ok(CharTable { n, l, space, d_min, dims, expected, note })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn w_two_one() {
        let mut e = QuotientEngine::new(2);
        let t = char_w_truncated(&mut e, 1, 6).unwrap();
        assert_eq!(t.d_min, -1);
        assert_eq!(t.dims, vec![0, 1, 2, 3, 4, 5, 6, 7]);
        assert!(t.outcome().is_pass());
    }

    #[test]
    fn m_two_one() {
        let mut e = QuotientEngine::new(2);
        let t = char_m_truncated(&mut e, 1, 3).unwrap();
        assert_eq!(t.dims, vec![0, 0, 1, 1, 2]);
        assert!(t.outcome().is_pass(), "{:?}", t);
    }

    #[test]
    fn restricted_three_one() {
        let mut e = QuotientEngine::new(3);
        let t = char_m_restricted_truncated(&mut e, 1, 3, 4).unwrap();
        assert!(t.outcome().is_pass(), "{:?}", t);
    }
}
