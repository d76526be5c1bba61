//! The exterior algebra on `ψ_1..ψ_N` with polynomial coefficients.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use mincyc_core::{GaussianRational, MPoly, VarContext};

/// Sign of `ψ_A ψ_B` relative to `ψ_{A∪B}` for disjoint subsets given as
/// bitmasks: `(−1)^{#{(a, b) ∈ A×B : a > b}}`.
pub fn reorder_sign(a: u32, b: u32) -> i64 {
    let mut inversions = 0u32;
    let mut bb = b;
    while bb != 0 {
        let j = bb.trailing_zeros();
        bb &= bb - 1;
        // Elements of A strictly above position j must move past ψ_j.
        inversions += (a >> (j + 1)).count_ones();
    }
    if inversions % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Subsets of `{1..N}` as ascending 1-based index lists.
pub fn mask_to_indices(mask: u32) -> Vec<usize> {
    (0..32).filter(|i| mask & (1 << i) != 0).map(|i| i as usize + 1).collect()
}

/// `Σ_A p_A ψ_A` with `p_A` in a shared polynomial context.
#[derive(Clone, PartialEq, Eq)]
pub struct GrassmannElem {
    n: usize,
    ctx: Arc<VarContext>,
    terms: BTreeMap<u32, MPoly>,
}

impl GrassmannElem {
    pub fn zero(n: usize, ctx: &Arc<VarContext>) -> Self {
        assert!(n <= 31, "at most 31 fermions");
        GrassmannElem { n, ctx: ctx.clone(), terms: BTreeMap::new() }
    }

    /// The scalar `p · 1`.
    pub fn scalar(n: usize, p: MPoly) -> Self {
        let mut e = GrassmannElem::zero(n, p.ctx());
        e.add_term(0, p);
        e
    }

    pub fn one(n: usize, ctx: &Arc<VarContext>) -> Self {
        GrassmannElem::scalar(n, MPoly::one(ctx))
    }

    /// The generator `ψ_a` for 1-based `a`.
    pub fn psi(n: usize, ctx: &Arc<VarContext>, a: usize) -> Self {
        assert!(a >= 1 && a <= n, "fermion index out of range");
        let mut e = GrassmannElem::zero(n, ctx);
        e.add_term(1 << (a - 1), MPoly::one(ctx));
        e
    }

    /// `p · ψ_A` for a bitmask `A`.
    pub fn monomial(n: usize, mask: u32, p: MPoly) -> Self {
        let mut e = GrassmannElem::zero(n, p.ctx());
        e.add_term(mask, p);
        e
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn ctx(&self) -> &Arc<VarContext> {
        &self.ctx
    }

    pub fn terms(&self) -> &BTreeMap<u32, MPoly> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, mask: u32) -> MPoly {
        self.terms.get(&mask).cloned().unwrap_or_else(|| MPoly::zero(&self.ctx))
    }

    /// Adds `p ψ_A` in place.
    pub fn add_term(&mut self, mask: u32, p: MPoly) {
        if p.is_zero() {
            return;
        }
        match self.terms.get_mut(&mask) {
            Some(q) => {
                *q = &*q + &p;
                if q.is_zero() {
                    self.terms.remove(&mask);
                }
            }
            None => {
                self.terms.insert(mask, p);
            }
        }
    }

    pub fn add(&self, o: &GrassmannElem) -> GrassmannElem {
        let mut out = self.clone();
        for (&m, p) in &o.terms {
            out.add_term(m, p.clone());
        }
        out
    }

    pub fn sub(&self, o: &GrassmannElem) -> GrassmannElem {
        self.add(&o.neg())
    }

    pub fn neg(&self) -> GrassmannElem {
        self.map_coeffs(|p| -p)
    }

    pub fn scale(&self, c: &GaussianRational) -> GrassmannElem {
        self.map_coeffs(|p| p.scale(c))
    }

    /// Multiplies every coefficient by the polynomial `p`.
    pub fn mul_poly(&self, p: &MPoly) -> GrassmannElem {
        self.map_coeffs(|q| q * p)
    }

    /// Applies `f` to every coefficient, dropping zeros. `f` must keep the
    /// context.
    pub fn map_coeffs<F: FnMut(&MPoly) -> MPoly>(&self, mut f: F) -> GrassmannElem {
        let mut out = GrassmannElem::zero(self.n, &self.ctx);
        for (&m, p) in &self.terms {
            out.add_term(m, f(p));
        }
        out
    }

    /// Like [`GrassmannElem::map_coeffs`] but into another context.
    pub fn map_coeffs_into<F: FnMut(&MPoly) -> MPoly>(&self, ctx: &Arc<VarContext>, mut f: F) -> GrassmannElem {
        let mut out = GrassmannElem::zero(self.n, ctx);
        for (&m, p) in &self.terms {
            out.add_term(m, f(p));
        }
        out
    }

    /// The exterior product, using `ψ_a² = 0` and `ψ_aψ_b = −ψ_bψ_a`.
    pub fn mul(&self, o: &GrassmannElem) -> GrassmannElem {
        assert_eq!(self.n, o.n, "fermion counts differ");
        let mut out = GrassmannElem::zero(self.n, &self.ctx);
        for (&a, p) in &self.terms {
            for (&b, q) in &o.terms {
                if a & b != 0 {
                    continue;
                }
                let prod = p * q;
                let prod = if reorder_sign(a, b) < 0 { -prod } else { prod };
                out.add_term(a | b, prod);
            }
        }
        out
    }

    /// Keeps the terms with exactly `k` fermions.
    pub fn weight_part(&self, k: u32) -> GrassmannElem {
        let mut out = GrassmannElem::zero(self.n, &self.ctx);
        for (&m, p) in &self.terms {
            if m.count_ones() == k {
                out.add_term(m, p.clone());
            }
        }
        out
    }
}

impl fmt::Display for GrassmannElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(&m, p)| {
                let psi: Vec<String> = mask_to_indices(m).iter().map(|a| format!("psi{}", a)).collect();
                let psi = if psi.is_empty() { "1".to_string() } else { psi.join("*") };
                format!("({})*{}", p, psi)
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl fmt::Debug for GrassmannElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GrassmannElem(N={}: {})", self.n, self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn anticommutation_and_nilpotency() {
        let ctx = VarContext::cycle(0, 3);
        let p1 = GrassmannElem::psi(3, &ctx, 1);
        let p2 = GrassmannElem::psi(3, &ctx, 2);
        assert!(p1.mul(&p1).is_zero());
        assert_eq!(p1.mul(&p2), p2.mul(&p1).neg());
        assert_eq!(reorder_sign(0b100, 0b011), 1);
        assert_eq!(reorder_sign(0b010, 0b001), -1);
    }
}
