//! Grassmann-valued rational functions of a current parameter `z` whose
//! denominators are products of the factors `(1 − z_j z)` and `(1 + z_j z)`.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use mincyc_core::{GaussianRational, MPoly, VarContext};

use crate::error::FermionError;
use crate::grassmann::GrassmannElem;

/// The context `z1..zN, z` used for every current.
pub fn current_context(n: usize) -> Arc<VarContext> {
    VarContext::cycle_with_aux(0, n, &["z"])
}

/// A factor `(1 − s z_j z)` with `s = ±1`, keyed by `(j, s)` with 0-based `j`.
pub type Factor = (usize, i8);

/// A denominator: the multiset of factors with multiplicities.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Den(pub BTreeMap<Factor, u32>);

impl Den {
    pub fn one() -> Self {
        Den(BTreeMap::new())
    }

    /// `Π_j (1 − s z_j z)`.
    pub fn theta(n: usize, s: i8) -> Self {
        Den((0..n).map(|j| ((j, s), 1)).collect())
    }

    pub fn single(j: usize, s: i8) -> Self {
        let mut d = Den::one();
        d.0.insert((j, s), 1);
        d
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn times(&self, o: &Den) -> Den {
        let mut out = self.clone();
        for (&f, &e) in &o.0 {
            *out.0.entry(f).or_insert(0) += e;
        }
        out
    }

    /// The least common multiple of two denominators.
    pub fn lcm(&self, o: &Den) -> Den {
        let mut out = self.clone();
        for (&f, &e) in &o.0 {
            let slot = out.0.entry(f).or_insert(0);
            *slot = (*slot).max(e);
        }
        out
    }

    /// `self / o` as a multiset, assuming `o` divides `self`.
    pub fn quotient(&self, o: &Den) -> Den {
        let mut out = self.clone();
        for (&f, &e) in &o.0 {
            let slot = out.0.get_mut(&f).expect("divisor factor present");
            assert!(*slot >= e, "denominator does not divide");
            *slot -= e;
            if *slot == 0 {
                out.0.remove(&f);
            }
        }
        out
    }

    /// Exchanges the two signs, as under `z → −z`.
    pub fn flip(&self) -> Den {
        Den(self.0.iter().map(|(&(j, s), &e)| ((j, -s), e)).collect())
    }

    /// The expanded polynomial in `ctx`, whose `z_j` sit at `j` and `z` at `zi`.
    pub fn to_poly(&self, ctx: &Arc<VarContext>, zi: usize) -> MPoly {
        let mut acc = MPoly::one(ctx);
        for (&(j, s), &e) in &self.0 {
            let f = factor_poly(ctx, zi, j, s);
            for _ in 0..e {
                acc = &acc * &f;
            }
        }
        acc
    }
}

impl fmt::Display for Den {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self
            .0
            .iter()
            .map(|(&(j, s), &e)| {
                let sign = if s > 0 { "-" } else { "+" };
                if e == 1 {
                    format!("(1 {} z{}*z)", sign, j + 1)
                } else {
                    format!("(1 {} z{}*z)^{}", sign, j + 1, e)
                }
            })
            .collect();
        write!(f, "{}", parts.join("*"))
    }
}

/// `1 − s z_j z` in `ctx`.
pub fn factor_poly(ctx: &Arc<VarContext>, zi: usize, j: usize, s: i8) -> MPoly {
    let mut e = vec![0u16; ctx.len()];
    e[j] = 1;
    e[zi] = 1;
    &MPoly::one(ctx) - &MPoly::monomial(ctx, e, GaussianRational::from_int(s as i64))
}

/// `numer / den` with a Grassmann-valued numerator.
#[derive(Clone, PartialEq, Eq)]
pub struct GrassmannCurrent {
    numer: GrassmannElem,
    den: Den,
    zi: usize,
}

impl GrassmannCurrent {
    /// Wraps a numerator and denominator; `zi` is the index of `z`.
    pub fn new(numer: GrassmannElem, den: Den, zi: usize) -> Self {
        GrassmannCurrent { numer, den, zi }
    }

    pub fn polynomial(numer: GrassmannElem, zi: usize) -> Self {
        GrassmannCurrent::new(numer, Den::one(), zi)
    }

    pub fn numer(&self) -> &GrassmannElem {
        &self.numer
    }

    pub fn den(&self) -> &Den {
        &self.den
    }

    pub fn z_index(&self) -> usize {
        self.zi
    }

    pub fn n(&self) -> usize {
        self.numer.n()
    }

    pub fn ctx(&self) -> &Arc<VarContext> {
        self.numer.ctx()
    }

    pub fn is_zero(&self) -> bool {
        self.numer.is_zero()
    }

    /// Re-expresses the current over a multiple of its denominator.
    pub fn lift_to(&self, target: &Den) -> GrassmannCurrent {
        let extra = target.quotient(&self.den);
        if extra.is_one() {
            return self.clone();
        }
        let m = extra.to_poly(self.ctx(), self.zi);
        GrassmannCurrent { numer: self.numer.mul_poly(&m), den: target.clone(), zi: self.zi }
    }

    pub fn add(&self, o: &GrassmannCurrent) -> GrassmannCurrent {
        let d = self.den.lcm(&o.den);
        let a = self.lift_to(&d);
        let b = o.lift_to(&d);
        GrassmannCurrent { numer: a.numer.add(&b.numer), den: d, zi: self.zi }
    }

    pub fn sub(&self, o: &GrassmannCurrent) -> GrassmannCurrent {
        self.add(&o.neg())
    }

    pub fn neg(&self) -> GrassmannCurrent {
        GrassmannCurrent { numer: self.numer.neg(), den: self.den.clone(), zi: self.zi }
    }

    pub fn scale(&self, c: &GaussianRational) -> GrassmannCurrent {
        GrassmannCurrent { numer: self.numer.scale(c), den: self.den.clone(), zi: self.zi }
    }

    /// Product in the exterior algebra; denominators multiply.
    pub fn mul(&self, o: &GrassmannCurrent) -> GrassmannCurrent {
        GrassmannCurrent { numer: self.numer.mul(&o.numer), den: self.den.times(&o.den), zi: self.zi }
    }

    /// Multiplies by `Π_j (1 − s z_j z)`, cancelling against the
    /// denominator where possible.
    pub fn times_theta(&self, s: i8) -> GrassmannCurrent {
        let mut den = self.den.clone();
        let mut numer_factor = MPoly::one(self.ctx());
        for j in 0..self.n() {
            match den.0.get_mut(&(j, s)) {
                Some(e) => {
                    *e -= 1;
                    if *e == 0 {
                        den.0.remove(&(j, s));
                    }
                }
                None => numer_factor = &numer_factor * &factor_poly(self.ctx(), self.zi, j, s),
            }
        }
        GrassmannCurrent { numer: self.numer.mul_poly(&numer_factor), den, zi: self.zi }
    }

    /// The substitution `z → −z`.
    pub fn negate_z(&self) -> GrassmannCurrent {
        let zi = self.zi;
        let ctx = self.ctx().clone();
        let numer = self.numer.map_coeffs(|p| {
            p.map_terms(&ctx, |e| {
                let sign = if e[zi] % 2 == 0 { 1 } else { -1 };
                Some((e.to_vec(), GaussianRational::from_int(sign)))
            })
        });
        GrassmannCurrent { numer, den: self.den.flip(), zi }
    }

    /// Cancels every denominator factor that divides all numerator
    /// coefficients, repeating until no factor cancels.
    pub fn normalize(&self) -> GrassmannCurrent {
        let mut cur = self.clone();
        loop {
            let mut progressed = false;
            let factors: Vec<Factor> = cur.den.0.keys().copied().collect();
            for (j, s) in factors {
                let f = factor_poly(cur.ctx(), cur.zi, j, s);
                let mut divided = GrassmannElem::zero(cur.n(), cur.ctx());
                let mut ok = true;
                for (&m, p) in cur.numer.terms() {
                    match p.exact_divide(&f) {
                        Ok(q) => divided.add_term(m, q),
                        Err(_) => {
                            ok = false;
                            break;
                        }
                    }
                }
                if ok {
                    cur.numer = divided;
                    cur.den = cur.den.quotient(&Den::single(j, s));
                    progressed = true;
                }
            }
            if !progressed {
                return cur;
            }
        }
    }

    /// The numerator after normalization, or an error naming the factors
    /// that fail to cancel.
    pub fn into_polynomial(&self) -> Result<GrassmannElem, FermionError> {
        let n = self.normalize();
        if n.den.is_one() || n.numer.is_zero() {
            Ok(n.numer)
        } else {
            Err(FermionError::NotPolynomial(n.den.to_string()))
        }
    }

    /// Exact equality as rational functions.
    pub fn equals(&self, o: &GrassmannCurrent) -> bool {
        self.sub(o).is_zero()
    }

    /// Power-series coefficients in `z` up to `z^order` inclusive, each a
    /// Grassmann element free of `z`.
    pub fn series(&self, order: u16) -> Vec<GrassmannElem> {
        let ctx = self.ctx().clone();
        let zi = self.zi;
        // 1/(1 − s z_j z) = Σ_k (s z_j z)^k, truncated.
        let mut inv = MPoly::one(&ctx);
        for (&(j, s), &e) in &self.den.0 {
            let mut geo = MPoly::zero(&ctx);
            for k in 0..=order {
                let mut ex = vec![0u16; ctx.len()];
                ex[j] = k;
                ex[zi] = k;
                let c = if s < 0 && k % 2 == 1 { -1 } else { 1 };
                geo = &geo + &MPoly::monomial(&ctx, ex, GaussianRational::from_int(c));
            }
            for _ in 0..e {
                inv = truncate_z(&(&inv * &geo), zi, order);
            }
        }
        let full = self.numer.map_coeffs(|p| truncate_z(&(p * &inv), zi, order));
        (0..=order)
            .map(|k| {
                full.map_coeffs(|p| {
                    p.map_terms(&ctx, |e| {
                        if e[zi] == k {
                            let mut out = e.to_vec();
                            out[zi] = 0;
                            Some((out, GaussianRational::from_int(1)))
                        } else {
                            None
                        }
                    })
                })
            })
            .collect()
    }
}

fn truncate_z(p: &MPoly, zi: usize, order: u16) -> MPoly {
    p.map_terms(p.ctx(), |e| if e[zi] <= order { Some((e.to_vec(), GaussianRational::from_int(1))) } else { None })
}

/// Groups a polynomial Grassmann element by powers of `z`.
pub fn z_coefficients(e: &GrassmannElem, zi: usize) -> BTreeMap<u16, GrassmannElem> {
    let mut out: BTreeMap<u16, GrassmannElem> = BTreeMap::new();
    for (&m, p) in e.terms() {
        for (k, part) in p.collect_in(zi) {
            out.entry(k).or_insert_with(|| GrassmannElem::zero(e.n(), e.ctx())).add_term(m, part);
        }
    }
    out
}

impl fmt::Display for GrassmannCurrent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}] / [{}]", self.numer, self.den)
    }
}

impl fmt::Debug for GrassmannCurrent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GrassmannCurrent({})", self)
    }
}

/// A scalar rational function `num / den` over the current context.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatFn {
    pub num: MPoly,
    pub den: Den,
}

impl RatFn {
    pub fn poly(num: MPoly) -> Self {
        RatFn { num, den: Den::one() }
    }

    pub fn lift_to(&self, target: &Den, zi: usize) -> MPoly {
        let extra = target.quotient(&self.den);
        &self.num * &extra.to_poly(self.num.ctx(), zi)
    }

    pub fn add(&self, o: &RatFn, zi: usize) -> RatFn {
        let d = self.den.lcm(&o.den);
        RatFn { num: &self.lift_to(&d, zi) + &o.lift_to(&d, zi), den: d }
    }

    pub fn sub(&self, o: &RatFn, zi: usize) -> RatFn {
        self.add(&RatFn { num: -&o.num, den: o.den.clone() }, zi)
    }

    pub fn mul(&self, o: &RatFn) -> RatFn {
        RatFn { num: &self.num * &o.num, den: self.den.times(&o.den) }
    }

    pub fn mul_poly(&self, p: &MPoly) -> RatFn {
        RatFn { num: &self.num * p, den: self.den.clone() }
    }

    pub fn scale(&self, c: &GaussianRational) -> RatFn {
        RatFn { num: self.num.scale(c), den: self.den.clone() }
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn series_of_geometric_factor() {
        let ctx = current_context(1);
        let num = GrassmannElem::one(1, &ctx);
        let c = GrassmannCurrent::new(num, Den::single(0, 1), 1);
        let s = c.series(3);
        assert_eq!(s[0].coeff(0).to_string(), "1");
        assert_eq!(s[2].coeff(0).to_string(), "z1^2");
        let c = GrassmannCurrent::new(GrassmannElem::one(1, &ctx), Den::single(0, -1), 1);
        assert_eq!(c.series(3)[3].coeff(0).to_string(), "-z1^3");
    }

    #[test]
    fn normalize_cancels_common_factor() {
        let ctx = current_context(2);
        let f = factor_poly(&ctx, 2, 1, 1);
        let num = GrassmannElem::psi(2, &ctx, 1).mul_poly(&f);
        let c = GrassmannCurrent::new(num, Den::single(1, 1), 2).normalize();
        assert!(c.den().is_one());
        assert_eq!(c.into_polynomial().unwrap(), GrassmannElem::psi(2, &ctx, 1));
    }
}
