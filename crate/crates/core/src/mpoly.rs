//! Sparse multivariate polynomials over the Gaussian rationals.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_traits::{One, Zero};

use crate::context::{same_context, VarContext};
use crate::error::CoreError;
use crate::gaussian::GaussianRational;
use crate::perm::permutations_with_sign;

/// An exponent vector, one entry per context variable.
///
/// Ordered graded-lexicographically: total degree first, then the exponent of
/// the earliest variable.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Mono(pub Vec<u16>);

impl Mono {
    pub fn one(n: usize) -> Self {
        Mono(vec![0; n])
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&e| e as u32).sum()
    }

    /// `self / other` when every exponent allows it.
    pub fn checked_div(&self, other: &Mono) -> Option<Mono> {
        let mut out = Vec::with_capacity(self.0.len());
        for (a, b) in self.0.iter().zip(&other.0) {
            if a < b {
                return None;
            }
            out.push(a - b);
        }
        Some(Mono(out))
    }

    pub fn mul(&self, other: &Mono) -> Mono {
        Mono(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }
}

impl Ord for Mono {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Mono {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[derive(Clone, PartialEq, Eq)]
pub struct MPoly {
    ctx: Arc<VarContext>,
    terms: BTreeMap<Mono, GaussianRational>,
}

impl MPoly {
    pub fn zero(ctx: &Arc<VarContext>) -> Self {
        MPoly { ctx: ctx.clone(), terms: BTreeMap::new() }
    }

    pub fn constant(ctx: &Arc<VarContext>, c: GaussianRational) -> Self {
        let mut p = Self::zero(ctx);
        p.add_term(Mono::one(ctx.len()), c);
        p
    }

    pub fn one(ctx: &Arc<VarContext>) -> Self {
        Self::constant(ctx, GaussianRational::one())
    }

    pub fn from_int(ctx: &Arc<VarContext>, n: i64) -> Self {
        Self::constant(ctx, GaussianRational::from_int(n))
    }

    /// The variable with index `i`.
    pub fn var(ctx: &Arc<VarContext>, i: usize) -> Self {
        let mut e = vec![0u16; ctx.len()];
        e[i] = 1;
        Self::monomial(ctx, e, GaussianRational::one())
    }

    /// The variable with the given name.
    pub fn var_named(ctx: &Arc<VarContext>, name: &str) -> Result<Self, CoreError> {
        Ok(Self::var(ctx, ctx.require(name)?))
    }

    pub fn monomial(ctx: &Arc<VarContext>, exps: Vec<u16>, c: GaussianRational) -> Self {
        assert_eq!(exps.len(), ctx.len(), "exponent vector length");
        let mut p = Self::zero(ctx);
        p.add_term(Mono(exps), c);
        p
    }

    pub fn ctx(&self) -> &Arc<VarContext> {
        &self.ctx
    }

    pub fn terms(&self) -> &BTreeMap<Mono, GaussianRational> {
        &self.terms
    }

    pub fn into_terms(self) -> BTreeMap<Mono, GaussianRational> {
        self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, m: &Mono) -> GaussianRational {
        self.terms.get(m).cloned().unwrap_or_else(GaussianRational::zero)
    }

    /// Constant term.
    pub fn constant_term(&self) -> GaussianRational {
        self.coeff(&Mono::one(self.ctx.len()))
    }

    /// Adds `c·m` in place, dropping the term if it cancels.
    pub fn add_term(&mut self, m: Mono, c: GaussianRational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += &c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// Largest term in graded lexicographic order.
    pub fn leading_term(&self) -> Option<(&Mono, &GaussianRational)> {
        self.terms.iter().next_back()
    }

    /// `true` when every coefficient is real.
    pub fn is_real(&self) -> bool {
        self.terms.values().all(|c| c.is_real())
    }

    fn check_ctx(&self, o: &MPoly) -> Result<(), CoreError> {
        if same_context(&self.ctx, &o.ctx) {
            Ok(())
        } else {
            Err(CoreError::ContextMismatch { left: self.ctx.to_string(), right: o.ctx.to_string() })
        }
    }

    pub fn try_add(&self, o: &MPoly) -> Result<MPoly, CoreError> {
        self.check_ctx(o)?;
        let (big, small) = if self.len() >= o.len() { (self, o) } else { (o, self) };
        let mut out = big.clone();
        for (m, c) in &small.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, o: &MPoly) -> Result<MPoly, CoreError> {
        self.check_ctx(o)?;
        let mut out = self.clone();
        for (m, c) in &o.terms {
            out.add_term(m.clone(), -c);
        }
        Ok(out)
    }

    pub fn try_mul(&self, o: &MPoly) -> Result<MPoly, CoreError> {
        self.check_ctx(o)?;
        let mut acc: std::collections::HashMap<Mono, GaussianRational> = std::collections::HashMap::new();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &o.terms {
                let m = m1.mul(m2);
                let c = c1 * c2;
                match acc.entry(m) {
                    std::collections::hash_map::Entry::Vacant(v) => {
                        v.insert(c);
                    }
                    std::collections::hash_map::Entry::Occupied(mut e) => {
                        *e.get_mut() += &c;
                    }
                }
            }
        }
        let terms = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        Ok(MPoly { ctx: self.ctx.clone(), terms })
    }

    /// Adds `c · self` into `acc` without materializing the product.
    pub fn add_scaled_into(&self, acc: &mut MPoly, c: &GaussianRational) {
        if c.is_zero() {
            return;
        }
        for (m, x) in &self.terms {
            acc.add_term(m.clone(), x * c);
        }
    }

    pub fn scale(&self, c: &GaussianRational) -> MPoly {
        if c.is_zero() {
            return MPoly::zero(&self.ctx);
        }
        MPoly { ctx: self.ctx.clone(), terms: self.terms.iter().map(|(m, x)| (m.clone(), x * c)).collect() }
    }

    pub fn pow(&self, e: u32) -> MPoly {
        let mut acc = MPoly::one(&self.ctx);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Maximal exponent of variable `i`, or `None` for the zero polynomial.
    pub fn degree_in(&self, i: usize) -> Option<u16> {
        self.terms.keys().map(|m| m.0[i]).max()
    }

    /// Minimal exponent of variable `i`, or `None` for the zero polynomial.
    pub fn min_degree_in(&self, i: usize) -> Option<u16> {
        self.terms.keys().map(|m| m.0[i]).min()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.degree()).max()
    }

    /// Exact quotient `self / d`.
    ///
    /// Runs multivariate division by a single divisor in graded lexicographic
    /// order. For a single divisor the remainder is zero exactly when `d`
    /// divides `self`, so a nonzero remainder is reported as an error.
    pub fn exact_divide(&self, d: &MPoly) -> Result<MPoly, CoreError> {
        let (q, r) = self.div_rem(d)?;
        if r.is_zero() {
            Ok(q)
        } else {
            Err(CoreError::NotDivisible { remainder: r })
        }
    }

    /// Quotient and remainder of multivariate division by `d`.
    ///
    /// Panics if `d` is zero.
    pub fn div_rem(&self, d: &MPoly) -> Result<(MPoly, MPoly), CoreError> {
        self.check_ctx(d)?;
        let (lm, lc) = d.leading_term().expect("division by the zero polynomial");
        let lc_inv = lc.inv().expect("nonzero leading coefficient");
        let mut p = self.clone();
        let mut q = MPoly::zero(&self.ctx);
        let mut r = MPoly::zero(&self.ctx);
        while let Some((m, c)) = p.terms.iter().next_back().map(|(m, c)| (m.clone(), c.clone())) {
            match m.checked_div(lm) {
                Some(qm) => {
                    let qc = &c * &lc_inv;
                    for (dm, dc) in &d.terms {
                        p.add_term(qm.mul(dm), -(&qc * dc));
                    }
                    q.add_term(qm, qc);
                }
                None => {
                    p.terms.remove(&m);
                    r.add_term(m, c);
                }
            }
        }
        Ok((q, r))
    }

    /// Rewrites every term through `f`, which returns the new exponent vector
    /// and a multiplier, or `None` to drop the term. The result lives in `target`.
    pub fn map_terms<F>(&self, target: &Arc<VarContext>, mut f: F) -> MPoly
    where
        F: FnMut(&[u16]) -> Option<(Vec<u16>, GaussianRational)>,
    {
        let mut out = MPoly::zero(target);
        for (m, c) in &self.terms {
            if let Some((e, k)) = f(&m.0) {
                debug_assert_eq!(e.len(), target.len());
                out.add_term(Mono(e), if k.is_one() { c.clone() } else { c * &k });
            }
        }
        out
    }

    /// Applies a variable permutation: variable `i` becomes `perm[i]`.
    pub fn permute_vars(&self, perm: &[usize]) -> MPoly {
        self.map_terms(&self.ctx, |e| {
            let mut out = vec![0u16; e.len()];
            for (i, &x) in e.iter().enumerate() {
                out[perm[i]] = x;
            }
            Some((out, GaussianRational::one()))
        })
    }

    /// Swaps variables `i` and `j`.
    pub fn swap_vars(&self, i: usize, j: usize) -> MPoly {
        let mut perm: Vec<usize> = (0..self.ctx.len()).collect();
        perm.swap(i, j);
        self.permute_vars(&perm)
    }

    /// `Σ_σ sgn(σ) p(x_σ(1), …, x_σ(k))` over the listed variables.
    pub fn skew_symmetrize(&self, vars: &[usize]) -> MPoly {
        self.symmetrize_impl(vars, true)
    }

    /// `Σ_σ p(x_σ(1), …, x_σ(k))` over the listed variables.
    pub fn symmetrize(&self, vars: &[usize]) -> MPoly {
        self.symmetrize_impl(vars, false)
    }

    fn symmetrize_impl(&self, vars: &[usize], skew: bool) -> MPoly {
        let mut out = MPoly::zero(&self.ctx);
        for (sigma, sign) in permutations_with_sign(vars.len()) {
            let s = GaussianRational::from_int(if skew { sign } else { 1 });
            for (m, c) in &self.terms {
                let mut e = m.0.clone();
                for (k, &v) in vars.iter().enumerate() {
                    e[vars[sigma[k]]] = m.0[v];
                }
                out.add_term(Mono(e), c * &s);
            }
        }
        out
    }

    /// `true` when swapping any two listed variables negates the polynomial.
    pub fn is_skew_in(&self, vars: &[usize]) -> bool {
        vars.windows(2).all(|w| self.swap_vars(w[0], w[1]) == -self.clone())
            && (vars.len() < 3 || self.swap_vars(vars[0], vars[vars.len() - 1]) == -self.clone())
    }

    /// `true` when swapping any two listed variables fixes the polynomial.
    pub fn is_symmetric_in(&self, vars: &[usize]) -> bool {
        vars.windows(2).all(|w| &self.swap_vars(w[0], w[1]) == self)
            && (vars.len() < 3 || &self.swap_vars(vars[0], vars[vars.len() - 1]) == self)
    }

    /// Substitutes the polynomial `value` for variable `i`.
    pub fn substitute(&self, i: usize, value: &MPoly) -> Result<MPoly, CoreError> {
        self.check_ctx(value)?;
        let mut by_power: BTreeMap<u16, MPoly> = BTreeMap::new();
        for (m, c) in &self.terms {
            let mut e = m.0.clone();
            let k = e[i];
            e[i] = 0;
            by_power.entry(k).or_insert_with(|| MPoly::zero(&self.ctx)).add_term(Mono(e), c.clone());
        }
        let mut out = MPoly::zero(&self.ctx);
        let mut pw = MPoly::one(&self.ctx);
        let mut cur = 0u16;
        for (k, part) in by_power {
            while cur < k {
                pw = &pw * value;
                cur += 1;
            }
            out = &out + &(&part * &pw);
        }
        Ok(out)
    }

    /// Sets variable `i` to the scalar `value`.
    pub fn eval_var(&self, i: usize, value: &GaussianRational) -> MPoly {
        let mut powers: Vec<GaussianRational> = vec![GaussianRational::one()];
        self.map_terms(&self.ctx, |e| {
            let k = e[i] as usize;
            while powers.len() <= k {
                let next = powers.last().unwrap() * value;
                powers.push(next);
            }
            let mut out = e.to_vec();
            out[i] = 0;
            Some((out, powers[k].clone()))
        })
    }

    /// Groups the polynomial by powers of variable `i`.
    pub fn collect_in(&self, i: usize) -> BTreeMap<u16, MPoly> {
        let mut out: BTreeMap<u16, MPoly> = BTreeMap::new();
        for (m, c) in &self.terms {
            let mut e = m.0.clone();
            let k = e[i];
            e[i] = 0;
            out.entry(k).or_insert_with(|| MPoly::zero(&self.ctx)).add_term(Mono(e), c.clone());
        }
        out
    }

    /// Re-expresses the polynomial in `target`, sending variable `i` to
    /// `map[i]`. Variables mapped to `None` must have exponent zero.
    pub fn embed(&self, target: &Arc<VarContext>, map: &[Option<usize>]) -> MPoly {
        self.map_terms(target, |e| {
            let mut out = vec![0u16; target.len()];
            for (i, &x) in e.iter().enumerate() {
                match map[i] {
                    Some(j) => out[j] += x,
                    None => assert_eq!(x, 0, "dropped variable with nonzero exponent"),
                }
            }
            Some((out, GaussianRational::one()))
        })
    }

    /// Embeds by matching variable names; every variable with a nonzero
    /// exponent must exist in `target`.
    pub fn embed_by_name(&self, target: &Arc<VarContext>) -> Result<MPoly, CoreError> {
        let mut map = Vec::with_capacity(self.ctx.len());
        for name in self.ctx.names() {
            map.push(target.index_of(name));
        }
        for (i, m) in map.iter().enumerate() {
            if m.is_none() && self.degree_in(i).unwrap_or(0) > 0 {
                return Err(CoreError::UnknownVariable(self.ctx.name(i).to_string()));
            }
        }
        Ok(self.embed(target, &map))
    }
}

impl<'a> Add<&'a MPoly> for &'a MPoly {
    type Output = MPoly;
    /// Panics on context mismatch; use `try_add` for a recoverable error.
    fn add(self, o: &MPoly) -> MPoly {
        self.try_add(o).unwrap_or_else(|e| panic!("{}", e))
    }
}

impl<'a> Sub<&'a MPoly> for &'a MPoly {
    type Output = MPoly;
    fn sub(self, o: &MPoly) -> MPoly {
        self.try_sub(o).unwrap_or_else(|e| panic!("{}", e))
    }
}

impl<'a> Mul<&'a MPoly> for &'a MPoly {
    type Output = MPoly;
    fn mul(self, o: &MPoly) -> MPoly {
        self.try_mul(o).unwrap_or_else(|e| panic!("{}", e))
    }
}

impl Neg for MPoly {
    type Output = MPoly;
    fn neg(self) -> MPoly {
        MPoly { ctx: self.ctx, terms: self.terms.into_iter().map(|(m, c)| (m, -c)).collect() }
    }
}

impl<'a> Neg for &'a MPoly {
    type Output = MPoly;
    fn neg(self) -> MPoly {
        self.clone().neg()
    }
}

fn render_mono(ctx: &VarContext, m: &Mono) -> String {
    let mut parts = Vec::new();
    for (i, &e) in m.0.iter().enumerate() {
        match e {
            0 => {}
            1 => parts.push(ctx.name(i).to_string()),
            _ => parts.push(format!("{}^{}", ctx.name(i), e)),
        }
    }
    parts.join("*")
}

impl fmt::Display for MPoly {
    /// Terms in decreasing graded lexicographic order, e.g. `-z1^2*X^2 + 1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in self.terms.iter().rev() {
            let mono = render_mono(&self.ctx, m);
            let (neg, mag) = if c.is_real() && c.re() < &num_rational::BigRational::zero() {
                (true, -c)
            } else {
                (false, c.clone())
            };
            let coef = if mag.is_real() {
                mag.to_string()
            } else {
                format!("({})", mag)
            };
            let body = if mono.is_empty() {
                coef
            } else if mag.is_one() {
                mono
            } else {
                format!("{}*{}", coef, mono)
            };
            if first {
                write!(f, "{}{}", if neg { "-" } else { "" }, body)?;
            } else {
                write!(f, " {} {}", if neg { "-" } else { "+" }, body)?;
            }
            first = false;
        }
        Ok(())
    }
}

impl fmt::Debug for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} in {}", self, self.ctx)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::context::Role;

    fn ctx2() -> Arc<VarContext> {
        VarContext::cycle(2, 2)
    }

    #[test]
    fn difference_of_squares() {
        let ctx = VarContext::cycle(1, 1);
        let x = MPoly::var(&ctx, 0);
        let z = MPoly::var(&ctx, 1);
        let one = MPoly::one(&ctx);
        let a = &one - &(&z * &x);
        let b = &one + &(&z * &x);
        let expect = &one - &(&(&z * &z) * &(&x * &x));
        assert_eq!(&a * &b, expect);
        assert_eq!(expect.to_string(), "-X^2*z1^2 + 1");
    }

    #[test]
    fn skew_of_simple_monomials() {
        let ctx = ctx2();
        let x2 = MPoly::var(&ctx, 1);
        let x1 = MPoly::var(&ctx, 0);
        assert_eq!(x2.skew_symmetrize(&[0, 1]), &x2 - &x1);
        assert!((&x1 * &x2).skew_symmetrize(&[0, 1]).is_zero());
        assert_eq!(x1.skew_symmetrize(&[0]), x1);
    }

    #[test]
    fn division_reports_remainder() {
        let ctx = ctx2();
        let x1 = MPoly::var(&ctx, 0);
        let x2 = MPoly::var(&ctx, 1);
        match x1.exact_divide(&x2) {
            Err(CoreError::NotDivisible { remainder }) => assert_eq!(remainder, x1),
            other => panic!("unexpected {:?}", other),
        }
        assert_eq!(x1.exact_divide(&MPoly::one(&ctx)).unwrap(), x1);
    }

    #[test]
    fn context_mismatch_is_reported() {
        let a = MPoly::one(&VarContext::cycle(1, 1));
        let b = MPoly::one(&VarContext::new(vec![("t", Role::Aux)]).unwrap());
        let err = a.try_add(&b).unwrap_err();
        assert!(err.to_string().contains("[X,z1]"));
        assert!(err.to_string().contains("[t]"));
    }

    #[test]
    fn substitution_composes() {
        let ctx = ctx2();
        let x1 = MPoly::var(&ctx, 0);
        let x2 = MPoly::var(&ctx, 1);
        let p = &(&x1 * &x1) + &x2;
        let q = p.substitute(0, &(&x2 + &MPoly::one(&ctx))).unwrap();
        let expect = &(&(&x2 * &x2) + &(&x2 * &MPoly::from_int(&ctx, 3))) + &MPoly::one(&ctx);
        assert_eq!(q, expect);
    }
}
