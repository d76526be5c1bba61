//! Homogeneous components of the cycle spaces in exterior coordinates.
//!
//! A homogeneous element of `C_{N,l}` of degree `d` is written uniquely as
//! `Σ c_{J,λ} A_J(X) m_λ(z)` where `A_J` is the alternant of a strictly
//! decreasing exponent tuple `J` with entries below `N`, and `m_λ` is the
//! monomial symmetric polynomial of a partition `λ` with at most `N` parts
//! and `|λ| = d + |J|`. All linear algebra of this crate happens in these
//! coordinates.

use std::collections::{BTreeMap, HashMap};
use std::sync::Arc;

use mincyc_core::linalg::sparsify;
use mincyc_core::perm::{combinations, next_permutation, partitions};
use mincyc_core::{BigRational, Echelon, GaussianRational, MPoly, Mono, SparseVec, VarContext};
use mincyc_cycles::{named_cycle, CyclePoly, NamedCycle};
use num_traits::{One, Zero};

use crate::error::QuotientError;

/// Exterior coefficients: strictly decreasing `J` to a polynomial in `z1..zN`.
pub type Ext = BTreeMap<Vec<u16>, MPoly>;

/// The lowest degree of `C_{N,l}`: `−(lN − l(l+1)/2)`.
pub fn min_degree(n: usize, l: usize) -> i64 {
    -((l * n) as i64 - (l * (l + 1) / 2) as i64)
}

/// Strictly decreasing `l`-tuples with entries in `0..N`.
pub fn exponent_tuples(n: usize, l: usize) -> Vec<Vec<u16>> {
    combinations(n, l).into_iter().map(|c| c.iter().rev().map(|&i| i as u16).collect()).collect()
}

/// Sign that sorts a tuple of distinct entries into decreasing order.
pub fn sort_sign(v: &[u16]) -> i64 {
    let mut inv = 0usize;
    for i in 0..v.len() {
        for j in i + 1..v.len() {
            if v[i] < v[j] {
                inv += 1;
            }
        }
    }
    if inv % 2 == 0 {
        1
    } else {
        -1
    }
}

/// The coordinate system of the degree-`d` component of `C_{N,l}`.
#[derive(Clone, Debug)]
pub struct Ambient {
    pub n: usize,
    pub l: usize,
    pub d: i64,
    /// `(J, λ)` with `λ` padded by zeros to length `N`.
    pub cols: Vec<(Vec<u16>, Vec<u16>)>,
    index: HashMap<(Vec<u16>, Vec<u16>), usize>,
}

impl Ambient {
    pub fn new(n: usize, l: usize, d: i64) -> Self {
        let mut cols = Vec::new();
        if l <= n {
            for j in exponent_tuples(n, l) {
                let zdeg = d + j.iter().map(|&x| x as i64).sum::<i64>();
                if zdeg < 0 {
                    continue;
                }
                for p in partitions(zdeg as usize, n, usize::MAX) {
                    let mut lam: Vec<u16> = p.iter().map(|&x| x as u16).collect();
                    lam.resize(n, 0);
                    cols.push((j.clone(), lam));
                }
            }
        }
        let index = cols.iter().cloned().enumerate().map(|(i, c)| (c, i)).collect();
        Ambient { n, l, d, cols, index }
    }

    pub fn len(&self) -> usize {
        self.cols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cols.is_empty()
    }

    /// Column of `(J, λ)`; `λ` may be unsorted and unpadded.
    pub fn col(&self, j: &[u16], lam: &[u16]) -> Option<usize> {
        let mut key = lam.to_vec();
        key.sort_unstable_by(|a, b| b.cmp(a));
        key.resize(self.n, 0);
        self.index.get(&(j.to_vec(), key)).copied()
    }

    /// Coordinates of a homogeneous element given by exterior coefficients.
    /// Only the sorted monomials `z^λ` are read, which suffices because
    /// every coefficient is symmetric.
    pub fn coords(&self, ext: &Ext) -> Vec<BigRational> {
        let mut v = vec![BigRational::zero(); self.len()];
        for (j, p) in ext {
            for (m, c) in p.terms() {
                if m.0.windows(2).all(|w| w[0] >= w[1]) {
                    if let Some(i) = self.col(j, &m.0) {
                        v[i] += real_part(c);
                    }
                }
            }
        }
        v
    }

    /// Expands coordinates back into exterior coefficients.
    pub fn to_ext(&self, v: &[BigRational]) -> Ext {
        let zctx = VarContext::cycle(0, self.n);
        let mut out = Ext::new();
        for (i, c) in v.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let (j, lam) = &self.cols[i];
            let entry = out.entry(j.clone()).or_insert_with(|| MPoly::zero(&zctx));
            let k = GaussianRational::from_real(c.clone());
            for m in orbit(lam) {
                entry.add_term(Mono(m), k.clone());
            }
        }
        out.retain(|_, p| !p.is_zero());
        out
    }

    /// Expands coordinates into a full cycle polynomial.
    pub fn to_cycle(&self, v: &[BigRational]) -> CyclePoly {
        ext_to_cycle(self.n, self.l, &self.to_ext(v))
    }
}

/// All distinct rearrangements of `λ`.
pub fn orbit(lam: &[u16]) -> Vec<Vec<u16>> {
    let mut a: Vec<usize> = lam.iter().map(|&x| x as usize).collect();
    a.sort_unstable();
    let mut out = Vec::new();
    loop {
        out.push(a.iter().map(|&x| x as u16).collect());
        if !next_permutation(&mut a) {
            break;
        }
    }
    out
}

/// Builds the cycle `Σ_J p_J(z) A_J(X)` in the context of `C_{N,l}`.
pub fn ext_to_cycle(n: usize, l: usize, ext: &Ext) -> CyclePoly {
    let ctx = VarContext::cycle(l, n);
    let mut acc = MPoly::zero(&ctx);
    let xs: Vec<usize> = (0..l).collect();
    for (j, p) in ext {
        let map: Vec<Option<usize>> = (0..n).map(|k| Some(l + k)).collect();
        let mut e = vec![0u16; l + n];
        e[..l].copy_from_slice(j);
        let alt = MPoly::monomial(&ctx, e, GaussianRational::one()).skew_symmetrize(&xs);
        acc = &acc + &(&alt * &p.embed(&ctx, &map));
    }
    CyclePoly::from_body_unchecked(n, l, acc)
}

pub(crate) fn real_part(c: &GaussianRational) -> BigRational {
    assert!(c.im().is_zero(), "cycle coefficients are real");
    c.re().clone()
}

/// Exterior product in exterior coordinates: `A_{J1} ∧ A_{J2}` is the
/// alternant of the concatenated tuple.
pub fn ext_wedge(a: &Ext, b: &Ext) -> Ext {
    let mut out = Ext::new();
    for (j1, p1) in a {
        for (j2, p2) in b {
            if j1.iter().any(|x| j2.contains(x)) {
                continue;
            }
            let mut j: Vec<u16> = j1.iter().chain(j2.iter()).copied().collect();
            let sign = sort_sign(&j);
            j.sort_unstable_by(|x, y| y.cmp(x));
            let prod = (p1 * p2).scale(&GaussianRational::from_int(sign));
            let slot = out.entry(j).or_insert_with(|| MPoly::zero(p1.ctx()));
            *slot = &*slot + &prod;
        }
    }
    out.retain(|_, p| !p.is_zero());
    out
}

/// The rows of the minimality constraint on the ambient space.
///
/// Under `X1 → t^{-1}`, `z1 → t`, `z2 → −t` the basis element
/// `A_J(X) m_λ(z)` becomes
/// `Σ_k (−1)^k Σ_{(a,b)} (−1)^b t^{a+b−J_k} A_{J∖J_k}(X2..) m_{λ∖{a,b}}(z3..)`,
/// where `(a, b)` runs over ordered pairs of values removable from `λ`.
/// The products on the right are linearly independent, so each key
/// `(a+b−J_k, J∖J_k, λ∖{a,b})` gives one linear condition.
pub fn minimality_rows(amb: &Ambient) -> Vec<SparseVec<BigRational>> {
    if amb.n < 2 || amb.l == 0 {
        return Vec::new();
    }
    type Key = (i64, Vec<u16>, Vec<u16>);
    let mut rows: BTreeMap<Key, BTreeMap<usize, i64>> = BTreeMap::new();
    for (col, (j, lam)) in amb.cols.iter().enumerate() {
        for (a, b, rest) in removable_pairs(lam) {
            for k in 0..j.len() {
                let sign = if (k + b as usize) % 2 == 0 { 1 } else { -1 };
                let mut jr = j.clone();
                let jk = jr.remove(k);
                let key = (a as i64 + b as i64 - jk as i64, jr, rest.clone());
                *rows.entry(key).or_default().entry(col).or_insert(0) += sign;
            }
        }
    }
    rows.into_values()
        .map(|r| r.into_iter().filter(|(_, c)| *c != 0).map(|(i, c)| (i, BigRational::from_integer(c.into()))).collect())
        .filter(|r: &SparseVec<BigRational>| !r.is_empty())
        .collect()
}

/// Ordered pairs `(a, b)` of entries of `λ` in distinct positions, each
/// distinct pair of values once, with the remaining multiset.
fn removable_pairs(lam: &[u16]) -> Vec<(u16, u16, Vec<u16>)> {
    let mut out = Vec::new();
    let mut seen_a = Vec::new();
    for ia in 0..lam.len() {
        let a = lam[ia];
        if seen_a.contains(&a) {
            continue;
        }
        seen_a.push(a);
        let mut rest_a = lam.to_vec();
        rest_a.remove(ia);
        let mut seen_b = Vec::new();
        for ib in 0..rest_a.len() {
            let b = rest_a[ib];
            if seen_b.contains(&b) {
                continue;
            }
            seen_b.push(b);
            let mut rest = rest_a.clone();
            rest.remove(ib);
            out.push((a, b, rest));
        }
    }
    out
}

/// A basis of the degree-`d` component `W_{N,l,d}` of the minimal cycles.
#[derive(Clone, Debug)]
pub struct GradedBasis {
    pub n: usize,
    pub l: usize,
    pub d: i64,
    pub ambient: Arc<Ambient>,
    /// Coordinate vectors in `ambient`.
    pub vectors: Vec<Vec<BigRational>>,
}

impl GradedBasis {
    pub fn dim(&self) -> usize {
        self.vectors.len()
    }

    /// The basis as cycle polynomials.
    pub fn cycles(&self) -> Vec<CyclePoly> {
        self.vectors.iter().map(|v| self.ambient.to_cycle(v)).collect()
    }
}

/// Solves the minimality constraints on the degree-`d` component of
/// `C_{N,l}`.
pub fn graded_basis_w(n: usize, l: usize, d: i64) -> Result<GradedBasis, QuotientError> {
    if l > n {
        return Err(QuotientError::InvalidParams(format!("l = {} exceeds N = {}", l, n)));
    }
    let amb = Arc::new(Ambient::new(n, l, d));
    let mut ech = Echelon::<BigRational>::new(amb.len());
    for row in minimality_rows(&amb) {
        ech.insert(&row);
    }
    Ok(GradedBasis { n, l, d, vectors: ech.nullspace(), ambient: amb })
}

/// A homogeneous element used to generate a subspace by wedging.
#[derive(Clone, Debug)]
pub struct Block {
    pub name: String,
    pub weight: usize,
    pub degree: i64,
    /// For each `J1`, the terms `(β, c)` of its symmetric coefficient.
    terms: Vec<(Vec<u16>, Vec<(Vec<u16>, BigRational)>)>,
}

impl Block {
    pub fn from_ext(name: impl Into<String>, weight: usize, ext: &Ext) -> Result<Block, QuotientError> {
        let name = name.into();
        let mut degree = None;
        let mut terms = Vec::new();
        for (j, p) in ext {
            let jsum: i64 = j.iter().map(|&x| x as i64).sum();
            let mut list = Vec::new();
            for (m, c) in p.terms() {
                let deg = m.0.iter().map(|&x| x as i64).sum::<i64>() - jsum;
                if *degree.get_or_insert(deg) != deg {
                    return Err(QuotientError::NotHomogeneous(name));
                }
                list.push((m.0.clone(), real_part(c)));
            }
            terms.push((j.clone(), list));
        }
        Ok(Block { name, weight, degree: degree.unwrap_or(0), terms })
    }

    /// A named cycle as a block.
    pub fn named(kind: NamedCycle, n: usize) -> Result<Block, QuotientError> {
        let c = named_cycle(kind, n)?;
        Block::from_ext(format!("{:?}", kind), c.l(), &c.exterior_coefficients())
    }

    /// The matrix of `w ↦ block ∧ w` from `source` (weight `l − weight`,
    /// degree `d − degree`) into `target`, stored as rows of `target`.
    ///
    /// The coefficient of `z^κ` in `s · p` is `Σ_β s_β p_{κ−β}`, and the
    /// coefficient of the monomial `z^γ` in `p = Σ c_λ m_λ` is `c_{sort γ}`.
    pub fn wedge_matrix(&self, source: &Ambient, target: &Ambient) -> Vec<SparseVec<BigRational>> {
        let mut rows = Vec::with_capacity(target.len());
        for (j, kappa) in &target.cols {
            let mut acc: BTreeMap<usize, BigRational> = BTreeMap::new();
            for (j1, list) in &self.terms {
                if !j1.iter().all(|x| j.contains(x)) {
                    continue;
                }
                let j2: Vec<u16> = j.iter().copied().filter(|x| !j1.contains(x)).collect();
                let concat: Vec<u16> = j1.iter().chain(j2.iter()).copied().collect();
                let sign = sort_sign(&concat);
                for (beta, c) in list {
                    if beta.iter().zip(kappa.iter()).any(|(b, k)| b > k) {
                        continue;
                    }
                    let gamma: Vec<u16> = kappa.iter().zip(beta.iter()).map(|(k, b)| k - b).collect();
                    if let Some(src) = source.col(&j2, &gamma) {
                        let e = acc.entry(src).or_insert_with(BigRational::zero);
                        if sign > 0 {
                            *e += c;
                        } else {
                            *e -= c;
                        }
                    }
                }
            }
            rows.push(acc.into_iter().filter(|(_, c)| !c.is_zero()).collect());
        }
        rows
    }
}

/// Applies a row-stored matrix to a dense vector.
pub fn apply(rows: &[SparseVec<BigRational>], v: &[BigRational]) -> Vec<BigRational> {
    rows.iter()
        .map(|r| r.iter().fold(BigRational::zero(), |acc, (i, c)| acc + c * &v[*i]))
        .collect()
}

/// Memoizes graded bases of `W_{N,l,d}` for one `N`.
#[derive(Debug)]
pub struct QuotientEngine {
    pub n: usize,
    bases: HashMap<(usize, i64), Arc<GradedBasis>>,
}

impl QuotientEngine {
    pub fn new(n: usize) -> Self {
        QuotientEngine { n, bases: HashMap::new() }
    }

    pub fn basis(&mut self, l: usize, d: i64) -> Arc<GradedBasis> {
        let n = self.n;
        self.bases
            .entry((l, d))
            .or_insert_with(|| Arc::new(graded_basis_w(n, l, d).expect("l <= N checked by callers")))
            .clone()
    }

    /// Rank of `Σ_b b ∧ W_{N, l − wt(b), d − deg(b)}` inside `C_{N,l,d}`.
    pub fn span_rank(&mut self, l: usize, d: i64, blocks: &[Block]) -> usize {
        let target = Ambient::new(self.n, l, d);
        let mut ech = Echelon::<BigRational>::new(target.len());
        for b in blocks.iter().filter(|b| b.weight <= l) {
            let src = self.basis(l - b.weight, d - b.degree);
            if src.dim() == 0 {
                continue;
            }
            let m = b.wedge_matrix(&src.ambient, &target);
            for v in &src.vectors {
                ech.insert(&sparsify(&apply(&m, v)));
            }
        }
        ech.rank()
    }
}

/// `∧^k` of a block's exterior form.
pub fn ext_power(base: &Ext, k: usize, n: usize) -> Ext {
    let zctx = VarContext::cycle(0, n);
    let mut acc: Ext = BTreeMap::from([(Vec::new(), MPoly::one(&zctx))]);
    for _ in 0..k {
        acc = ext_wedge(&acc, base);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn orbit_sizes() {
        assert_eq!(orbit(&[2, 1, 0]).len(), 6);
        assert_eq!(orbit(&[1, 1, 0]).len(), 3);
        assert_eq!(orbit(&[0, 0]).len(), 1);
    }

    #[test]
    fn sort_sign_counts_ascents() {
        assert_eq!(sort_sign(&[2, 1, 0]), 1);
        assert_eq!(sort_sign(&[1, 2]), -1);
        assert_eq!(sort_sign(&[0, 1, 2]), -1);
    }

    #[test]
    fn two_fermion_single_x_dims() {
        let dims: Vec<usize> = (0..4).map(|d| graded_basis_w(2, 1, d).unwrap().dim()).collect();
        assert_eq!(dims, vec![1, 2, 3, 4]);
        assert_eq!(graded_basis_w(2, 1, -1).unwrap().dim(), 0);
    }

    #[test]
    fn weight_zero_is_symmetric_polynomials() {
        // Partitions of 4 into at most 3 parts.
        assert_eq!(graded_basis_w(3, 0, 4).unwrap().dim(), 4);
    }

    #[test]
    fn coordinates_round_trip() {
        let amb = Ambient::new(3, 2, 1);
        let v: Vec<BigRational> = (0..amb.len()).map(|i| mincyc_core::rat(((i * 7) % 5) as i64 - 2)).collect();
        assert_eq!(amb.coords(&amb.to_ext(&v)), v);
    }
}
