//! The dual functional spaces of the bigraded current algebras.
//!
//! A functional on the weight-`l` part of `Λ[ξ] ⊗ C[η]` is a tuple
//! `(f_{s,t})_{s+2t=l}` of polynomials skew in `x1..xs` and symmetric in
//! `y1..yt`, paired through `⟨ξ̄(x1)⋯ξ̄(xs) η̄(y1)⋯η̄(yt), f⟩ = f_{s,t}(x; y)`.
//! Orthogonality to an ideal becomes substitution and degree conditions on
//! the tuple, which are solved here degree by degree.

use std::collections::BTreeMap;
use std::sync::Arc;

use mincyc_core::perm::partitions;
use mincyc_core::{Echelon, GaussianRational, MPoly, Mono, QSeries, Role, VarContext, VerificationOutcome};
use mincyc_qchar::gaussian_binomial;
use num_traits::{ToPrimitive, Zero};

use crate::character::{kostka_or_zero, restricted_kostka_or_zero, restriction_mu};
use crate::error::QuotientError;

/// Which ideal the functionals are orthogonal to.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DualMode {
    /// The ideal of the unbarred algebra: the relation `ξ(z)ξ(−z)+η(z)−η(−z)`
    /// and the truncated currents `[J_μ(z)]_{≥N−μ+1}`. Expected dimensions:
    /// the Gaussian binomial `[N, l]`.
    Unbarred,
    /// The same ideal with `ξ0, η0` added. Expected: `K_{N−2l,(1^N)}`.
    Barred,
    /// The barred ideal with the level-`r` vanishing conditions on `g`.
    /// Expected: `K^{(r−2)}_{N−2l,(1^N)}`.
    Restricted { r: usize },
}

/// A tuple `(f_{s,t})_{s+2t=l}` of homogeneous polynomials.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualTuple {
    pub l: usize,
    /// Keyed by `(s, t)`; each lives in [`st_context`]`(s, t)`.
    pub comps: BTreeMap<(usize, usize), MPoly>,
}

/// Variables `x1..xs, y1..yt`.
pub fn st_context(s: usize, t: usize) -> Arc<VarContext> {
    let mut vars: Vec<(String, Role)> = (1..=s).map(|i| (format!("x{}", i), Role::Aux)).collect();
    vars.extend((1..=t).map(|i| (format!("y{}", i), Role::Aux)));
    VarContext::new(vars).expect("unique names")
}

/// Strictly decreasing `s`-tuples of non-negative integers with sum `a`.
fn strict_tuples(s: usize, a: usize) -> Vec<Vec<u16>> {
    let stair = s * s.saturating_sub(1) / 2;
    if a < stair {
        return Vec::new();
    }
    partitions(a - stair, s, usize::MAX)
        .into_iter()
        .map(|p| {
            let mut v: Vec<u16> = p.iter().map(|&x| x as u16).collect();
            v.resize(s, 0);
            v.iter().enumerate().map(|(i, &x)| x + (s - 1 - i) as u16).collect()
        })
        .collect()
}

/// Where a source variable goes under a specialization.
#[derive(Clone, Copy, Debug)]
enum To {
    Zero,
    Var(usize, i64),
}

fn specialize(p: &MPoly, target: &Arc<VarContext>, map: &[To]) -> MPoly {
    p.map_terms(target, |e| {
        let mut out = vec![0u16; target.len()];
        let mut sign = 1i64;
        for (i, &k) in e.iter().enumerate() {
            if k == 0 {
                continue;
            }
            match map[i] {
                To::Zero => return None,
                To::Var(j, s) => {
                    out[j] += k;
                    if s < 0 && k % 2 == 1 {
                        sign = -sign;
                    }
                }
            }
        }
        Some((out, GaussianRational::from_int(sign)))
    })
}

/// Unknown layout of one `(s, t)` component at a fixed degree.
#[derive(Clone, Debug)]
struct Component {
    s: usize,
    t: usize,
    offset: usize,
    /// Basis of `g_{s,t}`.
    g: Vec<MPoly>,
    /// Basis of `f_{s,t}`: `g` times the prefactor in the barred modes.
    f: Vec<MPoly>,
}

/// The solution space at one degree.
#[derive(Clone, Debug)]
pub struct DualSpace {
    pub n: usize,
    pub l: usize,
    pub d: usize,
    pub mode: DualMode,
    comps: Vec<Component>,
    pub solutions: Vec<Vec<GaussianRational>>,
}

impl DualSpace {
    pub fn dim(&self) -> usize {
        self.solutions.len()
    }

    /// The tuple of a coefficient vector over the unknowns.
    pub fn tuple_of(&self, v: &[GaussianRational]) -> DualTuple {
        let mut comps = BTreeMap::new();
        for c in &self.comps {
            let ctx = st_context(c.s, c.t);
            let mut acc = MPoly::zero(&ctx);
            for (i, b) in c.f.iter().enumerate() {
                b.add_scaled_into(&mut acc, &v[c.offset + i]);
            }
            comps.insert((c.s, c.t), acc);
        }
        DualTuple { l: self.l, comps }
    }

    /// The basis of solutions as tuples.
    pub fn tuples(&self) -> Vec<DualTuple> {
        self.solutions.iter().map(|v| self.tuple_of(v)).collect()
    }
}

struct Rows {
    rows: BTreeMap<(usize, Mono), BTreeMap<usize, GaussianRational>>,
    next_id: usize,
}

impl Rows {
    fn new_condition(&mut self) -> usize {
        self.next_id += 1;
        self.next_id
    }

    /// Adds `scale · image` of unknown `col`, keeping only monomials whose
    /// exponent in variable `zvar` exceeds `bound` (all when `bound` is `None`).
    fn add(&mut self, id: usize, col: usize, image: &MPoly, scale: i64, zvar: usize, bound: Option<i64>) {
        for (m, c) in image.terms() {
            if bound.is_some_and(|b| m.0[zvar] as i64 <= b) {
                continue;
            }
            let e = self.rows.entry((id, m.clone())).or_default().entry(col).or_insert_with(GaussianRational::zero);
            *e = &*e + &(c * &GaussianRational::from_int(scale));
        }
    }
}

/// Solves for the functionals of degree `d` and weight `l`.
pub fn dual_space(n: usize, l: usize, d: usize, mode: DualMode) -> DualSpace {
    let barred = mode != DualMode::Unbarred;
    let mut comps = Vec::new();
    let mut offset = 0;
    for t in 0..=l / 2 {
        let s = l - 2 * t;
        let ctx = st_context(s, t);
        let pre = s + 2 * t;
        let mut g = Vec::new();
        let e = if barred { d as i64 - pre as i64 } else { d as i64 };
        if e >= 0 {
            let xs: Vec<usize> = (0..s).collect();
            let ys: Vec<usize> = (s..s + t).collect();
            for a in 0..=e as usize {
                for alpha in strict_tuples(s, a) {
                    for beta in partitions(e as usize - a, t, usize::MAX) {
                        let mut ex = vec![0u16; s + t];
                        ex[..s].copy_from_slice(&alpha);
                        for (k, &b) in beta.iter().enumerate() {
                            ex[s + k] = b as u16;
                        }
                        let mono = MPoly::monomial(&ctx, ex, GaussianRational::from_int(1));
                        g.push(mono.skew_symmetrize(&xs).symmetrize(&ys));
                    }
                }
            }
        }
        let f = if barred {
            let mut ex = vec![1u16; s];
            ex.extend(std::iter::repeat(2).take(t));
            let prefactor = MPoly::monomial(&ctx, ex, GaussianRational::from_int(1));
            g.iter().map(|p| p * &prefactor).collect()
        } else {
            g.clone()
        };
        let len = g.len();
        comps.push(Component { s, t, offset, g, f });
        offset += len;
    }
    let total = offset;
    let comp = |s: usize, t: usize| comps.iter().find(|c| c.s == s && c.t == t);
    let mut rows = Rows { rows: BTreeMap::new(), next_id: 0 };

    // The quadratic relation, paired with f_{s+2,t} and f_{s,t+1}.
    for t in 0..=l / 2 {
        if l < 2 + 2 * t {
            break;
        }
        let s = l - 2 - 2 * t;
        let (big, small) = (comp(s + 2, t).unwrap(), comp(s, t + 1).unwrap());
        let target = z_context(s, t);
        let id = rows.new_condition();
        // Target layout: z, x1..xs, y1..yt.
        let xs = |k: usize| To::Var(1 + k, 1);
        let ys = |k: usize| To::Var(1 + s + k, 1);
        let maps_big: [(Vec<To>, i64); 3] = [
            (big_map(s, t, To::Var(0, 1), To::Var(0, -1), xs, ys), 1),
            (big_map(s, t, To::Var(0, 1), To::Zero, xs, ys), -1),
            (big_map(s, t, To::Zero, To::Var(0, -1), xs, ys), -1),
        ];
        for (i, f) in big.f.iter().enumerate() {
            for (map, sc) in &maps_big {
                rows.add(id, big.offset + i, &specialize(f, &target, map), *sc, 0, None);
            }
        }
        for (sign, sc) in [(1, 1), (-1, -1)] {
            let mut map: Vec<To> = (0..s).map(xs).collect();
            map.push(To::Var(0, sign));
            map.extend((0..t).map(ys));
            for (i, f) in small.f.iter().enumerate() {
                rows.add(id, small.offset + i, &specialize(f, &target, &map), sc, 0, None);
            }
        }
    }

    for c in &comps {
        let (s, t) = (c.s, c.t);
        // Odd currents: deg_z f_{s,t}(z, x2..; z^{ν−1}, y) ≤ N − 2ν + 1.
        if s >= 1 {
            for nu in 1..=t + 1 {
                let target = z_context(s - 1, t + 1 - nu);
                let mut map = vec![To::Var(0, 1)];
                map.extend((1..s).map(|k| To::Var(k, 1)));
                map.extend((0..nu - 1).map(|_| To::Var(0, 1)));
                map.extend((0..t + 1 - nu).map(|k| To::Var(s + k, 1)));
                let id = rows.new_condition();
                let bound = Some(n as i64 - 2 * nu as i64 + 1);
                for (i, f) in c.f.iter().enumerate() {
                    rows.add(id, c.offset + i, &specialize(f, &target, &map), 1, 0, bound);
                }
            }
        }
        // Even currents: deg_z [f_{s,t}(x; z^ν, y) + ν f_{s+2,t−1}(0, z, x; z^{ν−1}, y)] ≤ N − 2ν.
        for nu in 1..=t {
            let target = z_context(s, t - nu);
            let id = rows.new_condition();
            let bound = Some(n as i64 - 2 * nu as i64);
            let mut map: Vec<To> = (0..s).map(|k| To::Var(1 + k, 1)).collect();
            map.extend((0..nu).map(|_| To::Var(0, 1)));
            map.extend((0..t - nu).map(|k| To::Var(1 + s + k, 1)));
            for (i, f) in c.f.iter().enumerate() {
                rows.add(id, c.offset + i, &specialize(f, &target, &map), 1, 0, bound);
            }
            let other = comp(s + 2, t - 1).unwrap();
            let mut map = vec![To::Zero, To::Var(0, 1)];
            map.extend((0..s).map(|k| To::Var(1 + k, 1)));
            map.extend((0..nu - 1).map(|_| To::Var(0, 1)));
            map.extend((0..t - nu).map(|k| To::Var(1 + s + k, 1)));
            for (i, f) in other.f.iter().enumerate() {
                rows.add(id, other.offset + i, &specialize(f, &target, &map), nu as i64, 0, bound);
            }
        }
    }

    if let DualMode::Restricted { r } = mode {
        let mu = restriction_mu(n, l, r).max(0) as usize;
        let nu = mu / 2;
        for c in &comps {
            let (s, t) = (c.s, c.t);
            let ctx = st_context(s, t);
            let ident = |k: usize| To::Var(k, 1);
            // Zero out the first `zx` x-variables and the first `zy` y-variables.
            let mut vanish = |zx: usize, zy: usize| {
                let map: Vec<To> = (0..s)
                    .map(|k| if k < zx { To::Zero } else { ident(k) })
                    .chain((0..t).map(|k| if k < zy { To::Zero } else { ident(s + k) }))
                    .collect();
                let id = rows.new_condition();
                for (i, g) in c.g.iter().enumerate() {
                    rows.add(id, c.offset + i, &specialize(g, &ctx, &map), 1, 0, None);
                }
            };
            if mu % 2 == 0 {
                if t >= nu {
                    vanish(0, nu);
                }
            } else {
                if s >= 1 && t >= nu {
                    vanish(1, nu);
                }
                if t > nu {
                    vanish(0, nu + 1);
                }
            }
        }
    }

    let mut ech = Echelon::<GaussianRational>::new(total);
    for row in rows.rows.into_values() {
        let sv: Vec<(usize, GaussianRational)> = row.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        if !sv.is_empty() {
            ech.insert(&sv);
        }
    }
    DualSpace { n, l, d, mode, comps, solutions: ech.nullspace() }
}

fn z_context(s: usize, t: usize) -> Arc<VarContext> {
    let mut vars = vec![("z".to_string(), Role::Aux)];
    vars.extend((1..=s).map(|i| (format!("x{}", i), Role::Aux)));
    vars.extend((1..=t).map(|i| (format!("y{}", i), Role::Aux)));
    VarContext::new(vars).expect("unique names")
}

/// Map for `f_{s+2,t}(a, b, x1..xs; y1..yt)`.
fn big_map(s: usize, t: usize, a: To, b: To, xs: impl Fn(usize) -> To, ys: impl Fn(usize) -> To) -> Vec<To> {
    let mut m = vec![a, b];
    m.extend((0..s).map(xs));
    m.extend((0..t).map(ys));
    m
}

/// Solution dimensions for `d = 0..=max_deg` and the expected coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualTable {
    pub n: usize,
    pub l: usize,
    pub mode: DualMode,
    pub dims: Vec<i64>,
    pub expected: Vec<i64>,
}

impl DualTable {
    pub fn outcome(&self) -> VerificationOutcome {
        let fmt = |v: &[i64]| v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",");
        let label = format!("{:?} N={} l={}", self.mode, self.n, self.l);
        match self.dims.iter().zip(&self.expected).position(|(a, b)| a != b) {
            None => VerificationOutcome::pass(fmt(&self.expected), fmt(&self.dims)).with_detail(label),
            Some(d) => VerificationOutcome::fail(fmt(&self.expected), fmt(&self.dims), format!("{}: first mismatch at degree {}", label, d)),
        }
    }
}

fn series_row(q: &QSeries, max_deg: usize) -> Vec<i64> {
    (0..=max_deg as i64).map(|d| q.coeff(d).map(|c| c.to_integer().to_i64().expect("small")).unwrap_or(0)).collect()
}

/// The expected generating polynomial of a dual table.
pub fn expected_dual(n: usize, l: usize, mode: DualMode) -> QSeries {
    let m = n as i64 - 2 * l as i64;
    match mode {
        DualMode::Unbarred => gaussian_binomial(n as i64, l as i64),
        DualMode::Barred => kostka_or_zero(m, n),
        DualMode::Restricted { r } => {
            if restriction_mu(n, l, r) < 1 {
                QSeries::zero()
            } else {
                restricted_kostka_or_zero(r - 2, m, n)
            }
        }
    }
}

/// Dimensions of the dual space for every degree up to `max_deg`.
pub fn dual_space_dims(n: usize, l: usize, max_deg: usize, mode: DualMode) -> Result<DualTable, QuotientError> {
    if let DualMode::Restricted { r } = mode {
        if r < 3 {
            return Err(QuotientError::InvalidParams(format!("r = {} < 3", r)));
        }
    }
    let dims = (0..=max_deg).map(|d| dual_space(n, l, d, mode).dim() as i64).collect();
    let expected = series_row(&expected_dual(n, l, mode), max_deg);
    Ok(DualTable { n, l, mode, dims, expected })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn strict_tuples_enumerate() {
        assert_eq!(strict_tuples(2, 3), vec![vec![3, 0], vec![2, 1]]);
        assert_eq!(strict_tuples(3, 2), Vec::<Vec<u16>>::new());
        assert_eq!(strict_tuples(0, 0), vec![Vec::<u16>::new()]);
    }

    #[test]
    fn empty_weight() {
        let t = dual_space_dims(3, 0, 4, DualMode::Barred).unwrap();
        assert_eq!(t.dims, vec![1, 0, 0, 0, 0]);
    }

    #[test]
    fn two_fermion_barred() {
        let t = dual_space_dims(2, 1, 4, DualMode::Barred).unwrap();
        assert_eq!(t.dims, vec![0, 1, 0, 0, 0]);
    }

    #[test]
    fn three_fermion_restricted() {
        let t = dual_space_dims(3, 1, 5, DualMode::Restricted { r: 3 }).unwrap();
        assert!(t.outcome().is_pass(), "{:?}", t);
    }
}
