//! The bigraded algebra `Z = Λ(ξ_0, ξ_1, ..) ⊗ C[η_0, η_1, ..]` and the
//! dimensions of its quotient by the ideal generated by the coefficients of
//! `ξ(z)ξ(−z) + η(z) − η(−z)` and `[J_μ(z)]_{≥N−μ+1}`.

use std::collections::BTreeMap;

use mincyc_core::linalg::sparsify;
use mincyc_core::{BigRational, Echelon, VerificationOutcome};
use mincyc_qchar::gaussian_binomial;
use num_traits::Zero;

/// A monomial `ξ_{i1}⋯ξ_{ia} η_{j1}⋯η_{jb}` with `i1 < ⋯ < ia` and
/// `j1 ≤ ⋯ ≤ jb`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ZMono {
    pub xi: Vec<u16>,
    pub eta: Vec<u16>,
}

impl ZMono {
    pub fn one() -> Self {
        ZMono { xi: Vec::new(), eta: Vec::new() }
    }

    pub fn xi(n: u16) -> Self {
        ZMono { xi: vec![n], eta: Vec::new() }
    }

    pub fn eta(n: u16) -> Self {
        ZMono { xi: Vec::new(), eta: vec![n] }
    }

    /// `Σ` of all indices.
    pub fn deg(&self) -> usize {
        self.xi.iter().chain(self.eta.iter()).map(|&i| i as usize).sum()
    }

    /// `#ξ + 2 #η`.
    pub fn wt(&self) -> usize {
        self.xi.len() + 2 * self.eta.len()
    }

    /// The product with its sign, or `None` when a `ξ` repeats.
    pub fn mul(&self, o: &ZMono) -> Option<(ZMono, i64)> {
        let mut inversions = 0usize;
        for &b in &o.xi {
            if self.xi.contains(&b) {
                return None;
            }
            inversions += self.xi.iter().filter(|&&a| a > b).count();
        }
        let mut xi: Vec<u16> = self.xi.iter().chain(o.xi.iter()).copied().collect();
        xi.sort_unstable();
        let mut eta: Vec<u16> = self.eta.iter().chain(o.eta.iter()).copied().collect();
        eta.sort_unstable();
        Some((ZMono { xi, eta }, if inversions % 2 == 0 { 1 } else { -1 }))
    }
}

/// A rational combination of [`ZMono`]s.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ZElem(pub BTreeMap<ZMono, BigRational>);

impl ZElem {
    pub fn zero() -> Self {
        ZElem(BTreeMap::new())
    }

    pub fn mono(m: ZMono, c: i64) -> Self {
        let mut e = ZElem::zero();
        e.add_term(m, BigRational::from_integer(c.into()));
        e
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn add_term(&mut self, m: ZMono, c: BigRational) {
        if c.is_zero() {
            return;
        }
        let slot = self.0.entry(m.clone()).or_insert_with(BigRational::zero);
        *slot += c;
        if slot.is_zero() {
            self.0.remove(&m);
        }
    }

    pub fn add(&self, o: &ZElem) -> ZElem {
        let mut out = self.clone();
        for (m, c) in &o.0 {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn scale(&self, k: i64) -> ZElem {
        let k = BigRational::from_integer(k.into());
        let mut out = ZElem::zero();
        for (m, c) in &self.0 {
            out.add_term(m.clone(), c * &k);
        }
        out
    }

    pub fn mul(&self, o: &ZElem) -> ZElem {
        let mut out = ZElem::zero();
        for (a, ca) in &self.0 {
            for (b, cb) in &o.0 {
                if let Some((m, s)) = a.mul(b) {
                    let c = ca * cb;
                    out.add_term(m, if s < 0 { -c } else { c });
                }
            }
        }
        out
    }
}

/// A truncated power series in `z` with coefficients in `Z`.
#[derive(Clone, Debug)]
struct Series(Vec<ZElem>);

impl Series {
    fn of(order: usize, f: impl Fn(u16) -> ZElem) -> Series {
        Series((0..=order).map(|k| f(k as u16)).collect())
    }

    fn add(&self, o: &Series) -> Series {
        Series(self.0.iter().zip(o.0.iter()).map(|(a, b)| a.add(b)).collect())
    }

    fn scale(&self, k: i64) -> Series {
        Series(self.0.iter().map(|a| a.scale(k)).collect())
    }

    fn mul(&self, o: &Series) -> Series {
        let d = self.0.len();
        let mut out = vec![ZElem::zero(); d];
        for i in 0..d {
            for j in 0..d - i {
                let p = self.0[i].mul(&o.0[j]);
                out[i + j] = out[i + j].add(&p);
            }
        }
        Series(out)
    }

    fn pow(&self, k: usize) -> Series {
        let mut acc = Series::of(self.0.len() - 1, |i| if i == 0 { ZElem::mono(ZMono::one(), 1) } else { ZElem::zero() });
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }
}

/// A homogeneous generator of the ideal.
#[derive(Clone, Debug)]
pub struct Relation {
    pub deg: usize,
    pub wt: usize,
    pub elem: ZElem,
    /// Human-readable origin, e.g. `J_3 z^2`.
    pub origin: String,
}

/// All ideal generators of degree at most `max_deg` and weight at most
/// `max_wt`.
pub fn relations(n: usize, max_deg: usize, max_wt: usize) -> Vec<Relation> {
    let d = max_deg;
    let xi_bar = Series::of(d, |k| ZElem::mono(ZMono::xi(k), 1));
    let eta_bar = Series::of(d, |k| ZElem::mono(ZMono::eta(k), 1));
    let xi = Series::of(d, |k| if k == 0 { ZElem::zero() } else { ZElem::mono(ZMono::xi(k), 1) });
    let xi_neg = Series::of(d, |k| if k == 0 { ZElem::zero() } else { ZElem::mono(ZMono::xi(k), if k % 2 == 0 { 1 } else { -1 }) });
    let eta_odd2 = Series::of(d, |k| if k % 2 == 1 { ZElem::mono(ZMono::eta(k), 2) } else { ZElem::zero() });
    let xi0 = Series::of(d, |k| if k == 0 { ZElem::mono(ZMono::xi(0), 1) } else { ZElem::zero() });

    let mut out = Vec::new();
    let mut push = |s: &Series, wt: usize, from: usize, name: &str| {
        for (k, e) in s.0.iter().enumerate().skip(from) {
            if !e.is_zero() {
                out.push(Relation { deg: k, wt, elem: e.clone(), origin: format!("{} z^{}", name, k) });
            }
        }
    };
    if max_wt >= 2 {
        // η(z) − η(−z) keeps twice the odd coefficients.
        push(&xi.mul(&xi_neg).add(&eta_odd2), 2, 0, "R");
    }
    for mu in 1..=max_wt {
        let from = (n as i64 - mu as i64 + 1).max(0) as usize;
        let j = if mu % 2 == 1 {
            xi_bar.mul(&eta_bar.pow((mu - 1) / 2))
        } else {
            let nu = mu / 2;
            eta_bar.pow(nu).add(&xi0.mul(&xi).mul(&eta_bar.pow(nu - 1)).scale(nu as i64))
        };
        push(&j, mu, from, &format!("J_{}", mu));
    }
    out
}

/// All monomials of degree `s` and weight `l`.
pub fn monomials(s: usize, l: usize) -> Vec<ZMono> {
    let mut out = Vec::new();
    for a in (0..=l).filter(|a| (l - a) % 2 == 0) {
        let b = (l - a) / 2;
        for s1 in 0..=s {
            for xi in distinct_parts(s1, a) {
                for eta in multiset_parts(s - s1, b) {
                    out.push(ZMono { xi: xi.clone(), eta });
                }
            }
        }
    }
    out.sort();
    out
}

/// Strictly increasing sequences of `k` non-negative integers summing to `s`.
fn distinct_parts(s: usize, k: usize) -> Vec<Vec<u16>> {
    fn rec(rem: usize, k: usize, min: usize, cur: &mut Vec<u16>, out: &mut Vec<Vec<u16>>) {
        if k == 0 {
            if rem == 0 {
                out.push(cur.clone());
            }
            return;
        }
        // The smallest completion uses min, min+1, ..., min+k−1.
        let mut v = min;
        while v * k + k * (k - 1) / 2 <= rem {
            cur.push(v as u16);
            rec(rem - v, k - 1, v + 1, cur, out);
            cur.pop();
            v += 1;
        }
    }
    let mut out = Vec::new();
    rec(s, k, 0, &mut Vec::new(), &mut out);
    out
}

/// Weakly increasing sequences of `k` non-negative integers summing to `s`.
fn multiset_parts(s: usize, k: usize) -> Vec<Vec<u16>> {
    fn rec(rem: usize, k: usize, min: usize, cur: &mut Vec<u16>, out: &mut Vec<Vec<u16>>) {
        if k == 0 {
            if rem == 0 {
                out.push(cur.clone());
            }
            return;
        }
        let mut v = min;
        while v * k <= rem {
            cur.push(v as u16);
            rec(rem - v, k - 1, v, cur, out);
            cur.pop();
            v += 1;
        }
    }
    let mut out = Vec::new();
    rec(s, k, 0, &mut Vec::new(), &mut out);
    out
}

/// `dim Z_{s,l} − rank(ideal ∩ Z_{s,l})` for one bidegree.
pub fn zbar_dimension(rels: &[Relation], s: usize, l: usize) -> usize {
    let basis = monomials(s, l);
    let index: BTreeMap<&ZMono, usize> = basis.iter().enumerate().map(|(i, m)| (m, i)).collect();
    let mut ech = Echelon::<BigRational>::new(basis.len());
    for g in rels.iter().filter(|g| g.deg <= s && g.wt <= l) {
        for m in monomials(s - g.deg, l - g.wt) {
            let prod = g.elem.mul(&ZElem::mono(m, 1));
            if prod.is_zero() {
                continue;
            }
            let mut row = vec![BigRational::zero(); basis.len()];
            for (mm, c) in &prod.0 {
                row[index[mm]] = c.clone();
            }
            ech.insert(&sparsify(&row));
            if ech.rank() == basis.len() {
                return 0;
            }
        }
    }
    basis.len() - ech.rank()
}

/// The table `dims[l][s]` of `dim (Z̄_N)_{s,l}` for `l ≤ N+1`, `s ≤ max_deg`.
pub fn zbar_character(n: usize, max_deg: usize) -> Vec<Vec<usize>> {
    let rels = relations(n, max_deg, n + 1);
    (0..=n + 1).map(|l| (0..=max_deg).map(|s| zbar_dimension(&rels, s, l)).collect()).collect()
}

/// The expected table: the `q^s` coefficient of the Gaussian binomial
/// `[N, l]`, and zero for `l = N + 1`.
pub fn expected_zbar_table(n: usize, max_deg: usize) -> Vec<Vec<usize>> {
    (0..=n + 1)
        .map(|l| {
            let g = gaussian_binomial(n as i64, l as i64);
            (0..=max_deg)
                .map(|s| {
                    let c = g.coeff(s as i64).unwrap_or_else(BigRational::zero);
                    c.to_integer().try_into().expect("small non-negative coefficient")
                })
                .collect()
        })
        .collect()
}

/// Compares [`zbar_character`] with the Gaussian binomials.
pub fn verify_zbar_character(n: usize, max_deg: usize) -> VerificationOutcome {
    let got = zbar_character(n, max_deg);
    let want = expected_zbar_table(n, max_deg);
    if got == want {
        VerificationOutcome::pass(format!("{:?}", want), format!("{:?}", got))
    } else {
        VerificationOutcome::fail(format!("{:?}", want), format!("{:?}", got), format!("N={} max_deg={}", n, max_deg))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn monomial_sign_law() {
        let a = ZMono { xi: vec![3], eta: vec![] };
        let b = ZMono { xi: vec![1], eta: vec![2] };
        assert_eq!(a.mul(&b).unwrap().1, -1);
        assert_eq!(b.mul(&a).unwrap().1, 1);
        assert!(a.mul(&a).is_none());
    }

    #[test]
    fn single_fermion_character() {
        // χ_1 = 1 + z.
        assert_eq!(zbar_character(1, 4), vec![vec![1, 0, 0, 0, 0], vec![1, 0, 0, 0, 0], vec![0; 5]]);
    }

    #[test]
    fn two_fermions_weight_one_row() {
        assert_eq!(zbar_character(2, 3)[1], vec![1, 1, 0, 0]);
    }
}
