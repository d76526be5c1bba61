//! Exact sparse elimination: incremental row echelon form, rank and nullspace.

use std::collections::BTreeMap;

use crate::field::Field;

/// A sparse vector as `(column, value)` pairs with strictly increasing columns
/// and no stored zeros.
pub type SparseVec<F> = Vec<(usize, F)>;

/// Builds a sparse vector from a dense slice.
pub fn sparsify<F: Field>(dense: &[F]) -> SparseVec<F> {
    dense
        .iter()
        .enumerate()
        .filter(|(_, v)| !v.is_zero())
        .map(|(c, v)| (c, v.clone()))
        .collect()
}

/// A row echelon basis that grows one vector at a time.
///
/// Each stored row has leading coefficient one. Rows are kept reduced only
/// against earlier pivots; `rref` finishes the back substitution when a
/// nullspace is needed.
#[derive(Clone, Debug)]
pub struct Echelon<F: Field> {
    ncols: usize,
    rows: Vec<SparseVec<F>>,
    pivot_row: BTreeMap<usize, usize>,
}

impl<F: Field> Echelon<F> {
    pub fn new(ncols: usize) -> Self {
        Echelon { ncols, rows: Vec::new(), pivot_row: BTreeMap::new() }
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Pivot columns in increasing order.
    pub fn pivots(&self) -> Vec<usize> {
        self.pivot_row.keys().copied().collect()
    }

    /// Reduces `v` against the stored rows and returns the remainder.
    pub fn reduce(&self, v: &SparseVec<F>) -> SparseVec<F> {
        if v.is_empty() {
            return Vec::new();
        }
        let mut work: Vec<F> = vec![F::zero(); self.ncols];
        let mut lo = usize::MAX;
        for (c, x) in v {
            assert!(*c < self.ncols, "column {} out of range {}", c, self.ncols);
            work[*c] = x.clone();
            lo = lo.min(*c);
        }
        for c in lo..self.ncols {
            if work[c].is_zero() {
                continue;
            }
            if let Some(&ri) = self.pivot_row.get(&c) {
                let f = work[c].clone();
                for (cc, rv) in &self.rows[ri] {
                    work[*cc] = work[*cc].sub(&f.mul(rv));
                }
            }
        }
        sparsify(&work)
    }

    /// Adds `v` to the span. Returns `true` when it was independent.
    pub fn insert(&mut self, v: &SparseVec<F>) -> bool {
        let r = self.reduce(v);
        if r.is_empty() {
            return false;
        }
        let lead_inv = r[0].1.inv();
        let row: SparseVec<F> = r.into_iter().map(|(c, x)| (c, x.mul(&lead_inv))).collect();
        self.pivot_row.insert(row[0].0, self.rows.len());
        self.rows.push(row);
        true
    }

    /// `true` when `v` lies in the current span.
    pub fn contains(&self, v: &SparseVec<F>) -> bool {
        self.reduce(v).is_empty()
    }

    /// Reduced row echelon rows keyed by pivot column.
    pub fn rref(&self) -> BTreeMap<usize, SparseVec<F>> {
        let mut out: BTreeMap<usize, Vec<F>> = BTreeMap::new();
        // Process from the last pivot backwards so every later row is final.
        for (&p, &ri) in self.pivot_row.iter().rev() {
            let mut dense = vec![F::zero(); self.ncols];
            for (c, x) in &self.rows[ri] {
                dense[*c] = x.clone();
            }
            for (&q, qrow) in out.iter() {
                if q <= p || dense[q].is_zero() {
                    continue;
                }
                let f = dense[q].clone();
                for (c, x) in qrow.iter().enumerate() {
                    if !Field::is_zero(x) {
                        dense[c] = dense[c].sub(&f.mul(x));
                    }
                }
            }
            out.insert(p, dense);
        }
        out.into_iter().map(|(p, d)| (p, sparsify(&d))).collect()
    }

    /// Basis of the vectors `x` with `row · x = 0` for every stored row.
    pub fn nullspace(&self) -> Vec<Vec<F>> {
        let rref = self.rref();
        let mut basis = Vec::new();
        for free in 0..self.ncols {
            if rref.contains_key(&free) {
                continue;
            }
            let mut v = vec![F::zero(); self.ncols];
            v[free] = F::one();
            for (&p, row) in &rref {
                if let Ok(k) = row.binary_search_by_key(&free, |(c, _)| *c) {
                    v[p] = row[k].1.neg();
                }
            }
            basis.push(v);
        }
        basis
    }
}

/// A sparse matrix stored by rows.
#[derive(Clone, Debug)]
pub struct SparseMatrix<F: Field> {
    pub ncols: usize,
    pub rows: Vec<SparseVec<F>>,
}

impl<F: Field> SparseMatrix<F> {
    pub fn new(ncols: usize) -> Self {
        SparseMatrix { ncols, rows: Vec::new() }
    }

    pub fn from_dense(rows: &[Vec<F>]) -> Self {
        let ncols = rows.first().map_or(0, |r| r.len());
        SparseMatrix { ncols, rows: rows.iter().map(|r| sparsify(r)).collect() }
    }

    pub fn push_row(&mut self, row: SparseVec<F>) {
        self.rows.push(row);
    }

    /// `self · v` as a dense vector.
    pub fn apply(&self, v: &[F]) -> Vec<F> {
        self.rows
            .iter()
            .map(|row| row.iter().fold(F::zero(), |acc, (c, x)| acc.add(&x.mul(&v[*c]))))
            .collect()
    }
}

/// Rank and right-nullspace basis of a matrix.
///
/// Rows are eliminated sparsest first, which keeps fill-in low on the
/// substitution matrices this crate produces.
pub fn nullspace_rank<F: Field>(m: &SparseMatrix<F>) -> (usize, Vec<Vec<F>>) {
    let ech = echelon_of(m);
    (ech.rank(), ech.nullspace())
}

/// Rank of a matrix.
pub fn rank<F: Field>(m: &SparseMatrix<F>) -> usize {
    echelon_of(m).rank()
}

fn echelon_of<F: Field>(m: &SparseMatrix<F>) -> Echelon<F> {
    let mut order: Vec<usize> = (0..m.rows.len()).collect();
    order.sort_by_key(|&i| m.rows[i].len());
    let mut ech = Echelon::new(m.ncols);
    for i in order {
        if ech.rank() == m.ncols {
            break;
        }
        ech.insert(&m.rows[i]);
    }
    ech
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gaussian::GaussianRational as G;

    #[test]
    fn identity_has_full_rank() {
        let rows: Vec<Vec<G>> = (0..3)
            .map(|i| (0..3).map(|j| if i == j { G::from_int(1) } else { <G as Field>::zero() }).collect())
            .collect();
        let (r, ns) = nullspace_rank(&SparseMatrix::from_dense(&rows));
        assert_eq!(r, 3);
        assert!(ns.is_empty());
    }

    #[test]
    fn zero_matrix_has_full_nullity() {
        let rows = vec![vec![<G as Field>::zero(); 5]; 2];
        let (r, ns) = nullspace_rank(&SparseMatrix::from_dense(&rows));
        assert_eq!(r, 0);
        assert_eq!(ns.len(), 5);
    }

    #[test]
    fn hermitian_rank_one() {
        // Second row is -i times the first.
        let rows = vec![vec![G::from_int(1), G::i()], vec![-G::i(), G::from_int(1)]];
        let m = SparseMatrix::from_dense(&rows);
        let (r, ns) = nullspace_rank(&m);
        assert_eq!(r, 1);
        assert_eq!(ns.len(), 1);
        assert!(m.apply(&ns[0]).iter().all(|x| Field::is_zero(x)));
    }
}
