//! Sparse rational matrices for the cochain complexes.
//!
//! Wedge-space differentials are very sparse (a 12-dimensional algebra has
//! 4096 wedge monomials but each monomial maps to a handful of targets),
//! so the cohomology module stores them column-major and runs sparse
//! Gaussian elimination for ranks and kernels. Dense matrices stay in
//! [`crate::exactlin`].

use std::collections::BTreeMap;

use crate::exactlin::{Mat, Subspace};
use crate::scalar::Scalar;

/// Column-major sparse matrix; each column holds `(row, coeff)` pairs
/// sorted by row with no zero coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseMat<S> {
    rows: usize,
    cols: usize,
    col_data: Vec<Vec<(usize, S)>>,
}

impl<S: Scalar> SparseMat<S> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        SparseMat {
            rows,
            cols,
            col_data: vec![Vec::new(); cols],
        }
    }

    /// Builds from arbitrary `(row, col, coeff)` triplets, accumulating
    /// duplicates and dropping zeros.
    pub fn from_triplets<I>(rows: usize, cols: usize, triplets: I) -> Self
    where
        I: IntoIterator<Item = (usize, usize, S)>,
    {
        let mut acc: Vec<BTreeMap<usize, S>> = vec![BTreeMap::new(); cols];
        for (r, c, v) in triplets {
            assert!(r < rows && c < cols, "triplet out of bounds");
            if v.is_zero() {
                continue;
            }
            match acc[c].get_mut(&r) {
                Some(slot) => {
                    *slot = slot.clone() + v;
                    if slot.is_zero() {
                        acc[c].remove(&r);
                    }
                }
                None => {
                    acc[c].insert(r, v);
                }
            }
        }
        SparseMat {
            rows,
            cols,
            col_data: acc
                .into_iter()
                .map(|col| col.into_iter().collect())
                .collect(),
        }
    }

    pub fn from_dense(m: &Mat<S>) -> Self {
        let mut triplets = Vec::new();
        for i in 0..m.rows() {
            for j in 0..m.cols() {
                if !m[(i, j)].is_zero() {
                    triplets.push((i, j, m[(i, j)].clone()));
                }
            }
        }
        SparseMat::from_triplets(m.rows(), m.cols(), triplets)
    }

    pub fn to_dense(&self) -> Mat<S> {
        let mut m = Mat::<S>::zeros(self.rows, self.cols);
        for (j, col) in self.col_data.iter().enumerate() {
            for (i, v) in col {
                m[(*i, j)] = v.clone();
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn col(&self, j: usize) -> &[(usize, S)] {
        &self.col_data[j]
    }

    pub fn nnz(&self) -> usize {
        self.col_data.iter().map(Vec::len).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.col_data.iter().all(Vec::is_empty)
    }

    /// Applies the matrix to a dense vector.
    pub fn apply_dense(&self, v: &[S]) -> Vec<S> {
        assert_eq!(v.len(), self.cols);
        let mut out = vec![S::zero(); self.rows];
        for (j, x) in v.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (i, a) in &self.col_data[j] {
                let t = a.clone() * x.clone();
                out[*i] = out[*i].clone() + t;
            }
        }
        out
    }

    /// Sparse product `self · rhs`.
    pub fn mul(&self, rhs: &SparseMat<S>) -> SparseMat<S> {
        assert_eq!(self.cols, rhs.rows, "inner dimensions must agree");
        let mut col_data = Vec::with_capacity(rhs.cols);
        for j in 0..rhs.cols {
            let mut acc: BTreeMap<usize, S> = BTreeMap::new();
            for (k, b) in &rhs.col_data[j] {
                for (i, a) in &self.col_data[*k] {
                    let t = a.clone() * b.clone();
                    match acc.get_mut(i) {
                        Some(slot) => {
                            *slot = slot.clone() + t;
                            if slot.is_zero() {
                                acc.remove(i);
                            }
                        }
                        None => {
                            acc.insert(*i, t);
                        }
                    }
                }
            }
            col_data.push(acc.into_iter().collect());
        }
        SparseMat {
            rows: self.rows,
            cols: rhs.cols,
            col_data,
        }
    }

    /// Stacks `other` below `self`.
    pub fn vstack(&self, other: &SparseMat<S>) -> SparseMat<S> {
        assert_eq!(self.cols, other.cols);
        let col_data = self
            .col_data
            .iter()
            .zip(&other.col_data)
            .map(|(top, bottom)| {
                let mut col = top.clone();
                col.extend(bottom.iter().map(|(i, v)| (self.rows + i, v.clone())));
                col
            })
            .collect();
        SparseMat {
            rows: self.rows + other.rows,
            cols: self.cols,
            col_data,
        }
    }

    fn sparse_rows(&self) -> Vec<Vec<(usize, S)>> {
        let mut rows = vec![Vec::new(); self.rows];
        for (j, col) in self.col_data.iter().enumerate() {
            for (i, v) in col {
                rows[*i].push((j, v.clone()));
            }
        }
        rows
    }

    /// Row rank by sparse forward elimination.
    pub fn rank(&self) -> usize {
        let mut active: Vec<Vec<(usize, S)>> = self
            .sparse_rows()
            .into_iter()
            .filter(|r| !r.is_empty())
            .collect();
        let mut rank = 0;
        while !active.is_empty() {
            // pivot row: smallest leading column, then fewest entries
            let mut best = 0;
            for (idx, row) in active.iter().enumerate() {
                let (bc, bl) = (active[best][0].0, active[best].len());
                let (rc, rl) = (row[0].0, row.len());
                if rc < bc || (rc == bc && rl < bl) {
                    best = idx;
                }
            }
            let pivot_row = active.swap_remove(best);
            let (pc, pv) = (pivot_row[0].0, pivot_row[0].1.clone());
            rank += 1;
            let mut next = Vec::with_capacity(active.len());
            for row in active {
                let reduced = if row[0].0 == pc {
                    let factor = row[0].1.clone() / pv.clone();
                    axpy(&row, &factor, &pivot_row)
                } else {
                    row
                };
                if !reduced.is_empty() {
                    next.push(reduced);
                }
            }
            active = next;
        }
        rank
    }

    /// Canonical RREF basis of the right null space.
    pub fn kernel(&self) -> Subspace<S> {
        let (rref_rows, pivots) = sparse_rref(self.sparse_rows());
        let mut pivot_of_col: Vec<Option<usize>> = vec![None; self.cols];
        for (r, &c) in pivots.iter().enumerate() {
            pivot_of_col[c] = Some(r);
        }
        let mut kernel_rows = Vec::new();
        for free in 0..self.cols {
            if pivot_of_col[free].is_some() {
                continue;
            }
            let mut v = vec![S::zero(); self.cols];
            v[free] = S::one();
            for (r, row) in rref_rows.iter().enumerate() {
                if let Ok(pos) = row.binary_search_by_key(&free, |(c, _)| *c) {
                    let pc = pivots[r];
                    v[pc] = -row[pos].1.clone();
                }
            }
            kernel_rows.push(v);
        }
        Subspace::from_rows(self.cols, kernel_rows)
    }
}

/// `row - factor * pivot_row` on sparse rows sorted by column.
fn axpy<S: Scalar>(
    row: &[(usize, S)],
    factor: &S,
    pivot_row: &[(usize, S)],
) -> Vec<(usize, S)> {
    let mut out = Vec::with_capacity(row.len() + pivot_row.len());
    let (mut a, mut b) = (0, 0);
    while a < row.len() || b < pivot_row.len() {
        match (row.get(a), pivot_row.get(b)) {
            (Some((ca, va)), Some((cb, vb))) => {
                if ca < cb {
                    out.push((*ca, va.clone()));
                    a += 1;
                } else if cb < ca {
                    out.push((*cb, -(factor.clone() * vb.clone())));
                    b += 1;
                } else {
                    let v = va.clone() - factor.clone() * vb.clone();
                    if !v.is_zero() {
                        out.push((*ca, v));
                    }
                    a += 1;
                    b += 1;
                }
            }
            (Some((ca, va)), None) => {
                out.push((*ca, va.clone()));
                a += 1;
            }
            (None, Some((cb, vb))) => {
                out.push((*cb, -(factor.clone() * vb.clone())));
                b += 1;
            }
            (None, None) => unreachable!(),
        }
    }
    out
}

/// Full sparse Gauss-Jordan: returns reduced rows sorted by pivot column
/// and the pivot columns.
fn sparse_rref<S: Scalar>(
    rows: Vec<Vec<(usize, S)>>,
) -> (Vec<Vec<(usize, S)>>, Vec<usize>) {
    let mut active: Vec<Vec<(usize, S)>> = rows.into_iter().filter(|r| !r.is_empty()).collect();
    let mut finished: Vec<Vec<(usize, S)>> = Vec::new();
    while !active.is_empty() {
        let mut best = 0;
        for (idx, row) in active.iter().enumerate() {
            let (bc, bl) = (active[best][0].0, active[best].len());
            let (rc, rl) = (row[0].0, row.len());
            if rc < bc || (rc == bc && rl < bl) {
                best = idx;
            }
        }
        let mut pivot_row = active.swap_remove(best);
        let pc = pivot_row[0].0;
        let inv = S::one() / pivot_row[0].1.clone();
        for (_, v) in pivot_row.iter_mut() {
            *v = v.clone() * inv.clone();
        }
        let eliminate = |row: Vec<(usize, S)>| -> Vec<(usize, S)> {
            match row.binary_search_by_key(&pc, |(c, _)| *c) {
                Ok(pos) => {
                    let factor = row[pos].1.clone();
                    axpy(&row, &factor, &pivot_row)
                }
                Err(_) => row,
            }
        };
        active = active.into_iter().map(eliminate).filter(|r| !r.is_empty()).collect();
        finished = finished
            .into_iter()
            .map(|row| match row.binary_search_by_key(&pc, |(c, _)| *c) {
                Ok(pos) => {
                    let factor = row[pos].1.clone();
                    axpy(&row, &factor, &pivot_row)
                }
                Err(_) => row,
            })
            .collect();
        finished.push(pivot_row);
    }
    finished.sort_by_key(|row| row[0].0);
    let pivots = finished.iter().map(|row| row[0].0).collect();
    (finished, pivots)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin;
    use crate::Rat;

    fn dense(rows: &[&[i64]]) -> Mat<Rat> {
        Mat::from_int_rows(rows)
    }

    #[test]
    fn sparse_rank_matches_dense_rank() {
        let cases: Vec<Vec<Vec<i64>>> = vec![
            vec![vec![1, 2, 3], vec![2, 4, 6], vec![0, 1, 1]],
            vec![vec![0, 0], vec![0, 0]],
            vec![vec![1, 0, 2, -1], vec![3, 1, 0, 0], vec![4, 1, 2, -1]],
        ];
        for case in cases {
            let refs: Vec<&[i64]> = case.iter().map(Vec::as_slice).collect();
            let m = dense(&refs);
            let s = SparseMat::from_dense(&m);
            assert_eq!(s.rank(), exactlin::rank(&m), "case {case:?}");
        }
    }

    #[test]
    fn sparse_kernel_matches_dense_kernel() {
        let m = dense(&[&[1, 2, 0, -1], &[0, 0, 1, 1]]);
        let s = SparseMat::from_dense(&m);
        assert_eq!(s.kernel(), exactlin::kernel_basis(&m));
    }

    #[test]
    fn product_round_trips_through_dense() {
        let a = dense(&[&[1, 2], &[0, 1], &[3, -1]]);
        let b = dense(&[&[2, 0, 1], &[1, 1, -2]]);
        let sa = SparseMat::from_dense(&a);
        let sb = SparseMat::from_dense(&b);
        assert_eq!(sa.mul(&sb).to_dense(), a.mul(&b));
    }

    #[test]
    fn triplets_accumulate_and_cancel() {
        let s = SparseMat::<Rat>::from_triplets(
            2,
            2,
            vec![
                (0, 0, crate::scalar::from_int(1)),
                (0, 0, crate::scalar::from_int(-1)),
                (1, 1, crate::scalar::from_int(2)),
            ],
        );
        assert_eq!(s.nnz(), 1);
        assert_eq!(s.col(1), &[(1, crate::scalar::from_int::<Rat>(2))]);
    }
}
