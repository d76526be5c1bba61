//! Cycle polynomials, their degree grading, wedge products, the minimality
//! predicate and evaluation at a point.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use mincyc_core::perm::{combinations, sign_of};
use mincyc_core::{BigRational, GaussianRational, MPoly, Role, VarContext};
use num_traits::{One, Zero};

use crate::error::CycleError;

/// An element of `C_{N,l}`, stored in the context `X1..Xl, z1..zN`.
#[derive(Clone, PartialEq, Eq)]
pub struct CyclePoly {
    n: usize,
    l: usize,
    body: MPoly,
}

impl CyclePoly {
    /// Wraps a polynomial after checking skew-symmetry, symmetry and the
    /// per-variable degree bound.
    pub fn new(n: usize, l: usize, body: MPoly) -> Result<Self, CycleError> {
        let c = CyclePoly::from_body_unchecked(n, l, body);
        c.check()?;
        Ok(c)
    }

    /// Wraps a polynomial without validation. The body is re-expressed in
    /// the canonical context of `(N, l)` when it lives in an equal one.
    pub fn from_body_unchecked(n: usize, l: usize, body: MPoly) -> Self {
        assert_eq!(body.ctx().len(), l + n, "context size does not match (N, l)");
        CyclePoly { n, l, body }
    }

    pub fn zero(n: usize, l: usize) -> Self {
        CyclePoly { n, l, body: MPoly::zero(&VarContext::cycle(l, n)) }
    }

    /// The constant cycle `1` in `C_{N,0}`.
    pub fn one(n: usize) -> Self {
        CyclePoly { n, l: 0, body: MPoly::one(&VarContext::cycle(0, n)) }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn l(&self) -> usize {
        self.l
    }

    pub fn body(&self) -> &MPoly {
        &self.body
    }

    pub fn into_body(self) -> MPoly {
        self.body
    }

    pub fn ctx(&self) -> &Arc<VarContext> {
        self.body.ctx()
    }

    pub fn x_vars(&self) -> Vec<usize> {
        (0..self.l).collect()
    }

    pub fn z_vars(&self) -> Vec<usize> {
        (self.l..self.l + self.n).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.body.is_zero()
    }

    /// Verifies the three defining properties of `C_{N,l}`.
    pub fn check(&self) -> Result<(), CycleError> {
        if self.l > self.n {
            return Err(CycleError::TooManyX { l: self.l, n: self.n });
        }
        if !self.body.is_skew_in(&self.x_vars()) {
            return Err(CycleError::NotCycle("not skew-symmetric in X".into()));
        }
        if !self.body.is_symmetric_in(&self.z_vars()) {
            return Err(CycleError::NotCycle("not symmetric in z".into()));
        }
        for p in 0..self.l {
            if let Some(d) = self.body.degree_in(p) {
                if d as usize >= self.n {
                    return Err(CycleError::NotCycle(format!("degree {} in X{} is not below N", d, p + 1)));
                }
            }
        }
        Ok(())
    }

    pub fn scale(&self, c: &GaussianRational) -> CyclePoly {
        CyclePoly { n: self.n, l: self.l, body: self.body.scale(c) }
    }

    pub fn add(&self, o: &CyclePoly) -> CyclePoly {
        assert_eq!((self.n, self.l), (o.n, o.l));
        CyclePoly { n: self.n, l: self.l, body: &self.body + &o.body }
    }

    pub fn sub(&self, o: &CyclePoly) -> CyclePoly {
        assert_eq!((self.n, self.l), (o.n, o.l));
        CyclePoly { n: self.n, l: self.l, body: &self.body - &o.body }
    }

    /// Degree of a monomial under `deg X = −1`, `deg z = +1`.
    fn mono_degree(&self, e: &[u16]) -> i64 {
        let x: i64 = e[..self.l].iter().map(|&v| v as i64).sum();
        let z: i64 = e[self.l..].iter().map(|&v| v as i64).sum();
        z - x
    }

    /// Splits the cycle into homogeneous components.
    pub fn graded(&self) -> GradedCycle {
        let mut parts: BTreeMap<i64, MPoly> = BTreeMap::new();
        for (m, c) in self.body.terms() {
            let d = self.mono_degree(&m.0);
            parts.entry(d).or_insert_with(|| MPoly::zero(self.ctx())).add_term(m.clone(), c.clone());
        }
        GradedCycle {
            n: self.n,
            l: self.l,
            parts: parts.into_iter().map(|(d, p)| (d, CyclePoly::from_body_unchecked(self.n, self.l, p))).collect(),
        }
    }

    /// The degree when the cycle is nonzero and homogeneous.
    pub fn homogeneous_degree(&self) -> Option<i64> {
        let g = self.graded();
        if g.parts.len() == 1 {
            g.parts.keys().next().copied()
        } else {
            None
        }
    }

    /// Coefficients in the exterior basis: for every strictly decreasing
    /// exponent tuple `J` the coefficient of `X1^{j1}⋯Xl^{jl}`, a polynomial
    /// in `z1..zN`.
    pub fn exterior_coefficients(&self) -> BTreeMap<Vec<u16>, MPoly> {
        let zctx = VarContext::cycle(0, self.n);
        let mut out: BTreeMap<Vec<u16>, MPoly> = BTreeMap::new();
        for (m, c) in self.body.terms() {
            let j = &m.0[..self.l];
            if j.windows(2).all(|w| w[0] > w[1]) {
                out.entry(j.to_vec())
                    .or_insert_with(|| MPoly::zero(&zctx))
                    .add_term(mincyc_core::Mono(m.0[self.l..].to_vec()), c.clone());
            }
        }
        out
    }
}

impl fmt::Display for CyclePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.body)
    }
}

impl fmt::Debug for CyclePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CyclePoly(N={}, l={}: {})", self.n, self.l, self.body)
    }
}

/// A cycle split by degree.
#[derive(Clone, Debug)]
pub struct GradedCycle {
    pub n: usize,
    pub l: usize,
    pub parts: BTreeMap<i64, CyclePoly>,
}

impl GradedCycle {
    /// Sum of the components.
    pub fn recombine(&self) -> CyclePoly {
        self.parts.values().fold(CyclePoly::zero(self.n, self.l), |acc, p| acc.add(p))
    }
}

/// The exterior product of cycles: the signed sum over shuffles of
/// `P1(X_S) P2(X_{S^c})`.
///
/// This equals `Skew(P1(X1..X_{l1}) P2(X_{l1+1}..X_l)) / (l1! l2!)`, so that
/// the product of the alternants of `J1` and `J2` is the alternant of
/// `J1 ∪ J2` up to sign.
pub fn wedge(p1: &CyclePoly, p2: &CyclePoly) -> Result<CyclePoly, CycleError> {
    if p1.n != p2.n {
        return Err(CycleError::MixedN { left: p1.n, right: p2.n });
    }
    let n = p1.n;
    let (l1, l2) = (p1.l, p2.l);
    let l = l1 + l2;
    if l > n {
        return Err(CycleError::TooManyX { l, n });
    }
    let ctx = VarContext::cycle(l, n);
    let map1: Vec<Option<usize>> = (0..l1).map(Some).chain((0..n).map(|j| Some(l + j))).collect();
    let map2: Vec<Option<usize>> = (0..l2).map(|i| Some(l1 + i)).chain((0..n).map(|j| Some(l + j))).collect();
    let base = &p1.body.embed(&ctx, &map1) * &p2.body.embed(&ctx, &map2);
    let mut acc = MPoly::zero(&ctx);
    for s in combinations(l, l1) {
        let comp: Vec<usize> = (0..l).filter(|i| !s.contains(i)).collect();
        let mut perm: Vec<usize> = s.iter().chain(comp.iter()).copied().collect();
        let sign = sign_of(&perm);
        perm.extend(l..l + n);
        base.permute_vars(&perm).add_scaled_into(&mut acc, &GaussianRational::from_int(sign));
    }
    Ok(CyclePoly::from_body_unchecked(n, l, acc))
}

/// Left-nested wedge of a list of cycles; the empty list gives `1`.
pub fn wedge_all(n: usize, ps: &[CyclePoly]) -> Result<CyclePoly, CycleError> {
    let mut acc = CyclePoly::one(n);
    for p in ps {
        acc = wedge(&acc, p)?;
    }
    Ok(acc)
}

/// The minimality predicate `P|_{z1 = −z2 = X1^{-1}} = 0`.
///
/// Substitutes `z1 → t`, `z2 → −t`, `X1 → t^{-1}` and clears the
/// denominator by `t^{N−1}` (or the `X1`-degree if larger), then tests the
/// result for identical vanishing. For `l = 0` or `N < 2` the condition is
/// vacuous and the predicate returns `true`.
pub fn is_minimal(p: &CyclePoly) -> bool {
    if p.l == 0 || p.n < 2 {
        return true;
    }
    minimality_image(p).is_zero()
}

/// The cleared substitution used by [`is_minimal`], as a polynomial in
/// `t, X2..Xl, z3..zN`.
pub fn minimality_image(p: &CyclePoly) -> MPoly {
    let (n, l) = (p.n, p.l);
    let mut vars: Vec<(String, Role)> = vec![("t".to_string(), Role::Aux)];
    for i in 2..=l {
        vars.push((format!("X{}", i), Role::X));
    }
    for j in 3..=n {
        vars.push((format!("z{}", j), Role::Z));
    }
    let target = VarContext::new(vars).expect("unique names");
    let clear = (n as u16 - 1).max(p.body.degree_in(0).unwrap_or(0));
    p.body.map_terms(&target, |e| {
        let (a, b, c) = (e[0], e[l], e[l + 1]);
        let mut out = Vec::with_capacity(target.len());
        out.push(b + c + clear - a);
        out.extend_from_slice(&e[1..l]);
        out.extend_from_slice(&e[l + 2..]);
        let sign = if c % 2 == 0 { GaussianRational::one() } else { -GaussianRational::one() };
        Some((out, sign))
    })
}

/// `c_j` = the `j`-th prime, a deterministic point satisfying
/// `Π c_j Π_{i<j} (c_i + c_j) ≠ 0`.
pub fn default_generic_point(n: usize) -> Vec<BigRational> {
    let mut primes: Vec<i64> = Vec::with_capacity(n);
    let mut k = 2i64;
    while primes.len() < n {
        if primes.iter().take_while(|&&p| p * p <= k).all(|&p| k % p != 0) {
            primes.push(k);
        }
        k += 1;
    }
    primes.into_iter().map(mincyc_core::rat).collect()
}

/// Substitutes `z_j = c_j`, returning a polynomial in `X1..Xl` only.
///
/// With `require_generic` the point must satisfy
/// `Π c_j Π_{i<j} (c_i + c_j) ≠ 0`; the first vanishing factor is named in
/// the error.
pub fn evaluate_ec(p: &CyclePoly, c: &[BigRational], require_generic: bool) -> Result<MPoly, CycleError> {
    assert_eq!(c.len(), p.n, "one value per z variable");
    if require_generic {
        for (j, cj) in c.iter().enumerate() {
            if cj.is_zero() {
                return Err(CycleError::NotGeneric { factor: format!("c{}", j + 1) });
            }
        }
        for i in 0..c.len() {
            for j in i + 1..c.len() {
                if (&c[i] + &c[j]).is_zero() {
                    return Err(CycleError::NotGeneric { factor: format!("c{} + c{}", i + 1, j + 1) });
                }
            }
        }
    }
    let l = p.l;
    let target = VarContext::cycle(l, 0);
    let gc: Vec<GaussianRational> = c.iter().map(|x| GaussianRational::from_real(x.clone())).collect();
    Ok(p.body.map_terms(&target, |e| {
        let mut k = GaussianRational::one();
        for (j, &ej) in e[l..].iter().enumerate() {
            if ej > 0 {
                k = &k * &gc[j].pow(ej as u32);
            }
        }
        Some((e[..l].to_vec(), k))
    }))
}
