//! Exact dense linear algebra over a field: reduced row echelon form,
//! ranks, kernels, and canonical subspaces.
//!
//! Every [`Subspace`] is kept in reduced row echelon form with strictly
//! increasing pivot columns, so structurally equal values span equal spaces
//! and equal spaces compare structurally equal. That canonical form is what
//! makes all downstream outputs reproducible.

use std::fmt;

use crate::error::Error;
use crate::scalar::Scalar;

/// Dense row-major matrix.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Mat<S> {
    rows: usize,
    cols: usize,
    entries: Vec<S>,
}

impl<S: Scalar> Mat<S> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Mat {
            rows,
            cols,
            entries: vec![S::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Mat::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = S::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<S>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(
            rows.iter().all(|row| row.len() == c),
            "ragged rows in matrix constructor"
        );
        Mat {
            rows: r,
            cols: c,
            entries: rows.into_iter().flatten().collect(),
        }
    }

    /// Matrix from integer entries, for test fixtures and structure tables.
    pub fn from_int_rows(rows: &[&[i64]]) -> Self {
        Mat::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&n| crate::scalar::from_int(n)).collect())
                .collect(),
        )
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[S] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vec(&self, i: usize) -> Vec<S> {
        self.row(i).to_vec()
    }

    pub fn col_vec(&self, j: usize) -> Vec<S> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn transpose(&self) -> Mat<S> {
        let mut t = Mat::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn mul(&self, other: &Mat<S>) -> Mat<S> {
        assert_eq!(self.cols, other.rows, "inner dimensions must agree");
        let mut out = Mat::<S>::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let term = a.clone() * other[(k, j)].clone();
                    out[(i, j)] = out[(i, j)].clone() + term;
                }
            }
        }
        out
    }

    /// Matrix applied to a column vector.
    pub fn apply(&self, v: &[S]) -> Vec<S> {
        assert_eq!(self.cols, v.len(), "vector length must match columns");
        (0..self.rows)
            .map(|i| dot(self.row(i), v))
            .collect()
    }

    pub fn scaled(&self, c: &S) -> Mat<S> {
        Mat {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|e| e.clone() * c.clone()).collect(),
        }
    }

    pub fn add(&self, other: &Mat<S>) -> Mat<S> {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Mat {
            rows: self.rows,
            cols: self.cols,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a.clone() + b.clone())
                .collect(),
        }
    }

    pub fn sub(&self, other: &Mat<S>) -> Mat<S> {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Mat {
            rows: self.rows,
            cols: self.cols,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a.clone() - b.clone())
                .collect(),
        }
    }

    pub fn neg(&self) -> Mat<S> {
        Mat {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|e| -e.clone()).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    /// Stacks `other` below `self`.
    pub fn vstack(&self, other: &Mat<S>) -> Mat<S> {
        assert_eq!(self.cols, other.cols, "column counts must agree");
        let mut entries = self.entries.clone();
        entries.extend(other.entries.iter().cloned());
        Mat {
            rows: self.rows + other.rows,
            cols: self.cols,
            entries,
        }
    }

    /// Places `other` to the right of `self`.
    pub fn hstack(&self, other: &Mat<S>) -> Mat<S> {
        assert_eq!(self.rows, other.rows, "row counts must agree");
        let mut out = Mat::zeros(self.rows, self.cols + other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out[(i, j)] = self[(i, j)].clone();
            }
            for j in 0..other.cols {
                out[(i, self.cols + j)] = other[(i, j)].clone();
            }
        }
        out
    }

    /// In-place Gauss-Jordan reduction. Returns the pivot columns.
    pub fn rref_in_place(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            let Some(p) = (r..self.rows).find(|&i| !self[(i, c)].is_zero()) else {
                continue;
            };
            self.swap_rows(r, p);
            let inv = S::one() / self[(r, c)].clone();
            for j in c..self.cols {
                self[(r, j)] = self[(r, j)].clone() * inv.clone();
            }
            for i in 0..self.rows {
                if i != r && !self[(i, c)].is_zero() {
                    let factor = self[(i, c)].clone();
                    for j in c..self.cols {
                        let t = factor.clone() * self[(r, j)].clone();
                        self[(i, j)] = self[(i, j)].clone() - t;
                    }
                }
            }
            pivots.push(c);
            r += 1;
            if r == self.rows {
                break;
            }
        }
        pivots
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.entries.swap(a * self.cols + j, b * self.cols + j);
        }
    }
}

impl<S> std::ops::Index<(usize, usize)> for Mat<S> {
    type Output = S;
    fn index(&self, (i, j): (usize, usize)) -> &S {
        &self.entries[i * self.cols + j]
    }
}

impl<S> std::ops::IndexMut<(usize, usize)> for Mat<S> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut S {
        &mut self.entries[i * self.cols + j]
    }
}

impl<S: fmt::Display> fmt::Display for Mat<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Mat {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols)
                .map(|j| self.entries[i * self.cols + j].to_string())
                .collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

use num_traits::Zero;

pub fn dot<S: Scalar>(a: &[S], b: &[S]) -> S {
    assert_eq!(a.len(), b.len(), "dot product length mismatch");
    a.iter()
        .zip(b)
        .fold(S::zero(), |acc, (x, y)| acc + x.clone() * y.clone())
}

pub fn add_vec<S: Scalar>(a: &[S], b: &[S]) -> Vec<S> {
    a.iter().zip(b).map(|(x, y)| x.clone() + y.clone()).collect()
}

pub fn sub_vec<S: Scalar>(a: &[S], b: &[S]) -> Vec<S> {
    a.iter().zip(b).map(|(x, y)| x.clone() - y.clone()).collect()
}

pub fn scale_vec<S: Scalar>(c: &S, v: &[S]) -> Vec<S> {
    v.iter().map(|x| c.clone() * x.clone()).collect()
}

pub fn neg_vec<S: Scalar>(v: &[S]) -> Vec<S> {
    v.iter().map(|x| -x.clone()).collect()
}

pub fn is_zero_vec<S: Scalar>(v: &[S]) -> bool {
    v.iter().all(Zero::is_zero)
}

pub fn zero_vec<S: Scalar>(n: usize) -> Vec<S> {
    vec![S::zero(); n]
}

/// Standard basis vector `e_i` of length `n`.
pub fn unit_vec<S: Scalar>(n: usize, i: usize) -> Vec<S> {
    let mut v = zero_vec(n);
    v[i] = S::one();
    v
}

/// Row rank over the scalar field.
pub fn rank<S: Scalar>(m: &Mat<S>) -> usize {
    let mut work = m.clone();
    work.rref_in_place().len()
}

/// A linear subspace of a fixed ambient coordinate space, stored as a
/// canonical RREF basis (rows, pivots strictly increasing).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subspace<S> {
    ambient_dim: usize,
    basis: Mat<S>,
    pivots: Vec<usize>,
}

impl<S: Scalar> Subspace<S> {
    /// Canonicalizes an arbitrary spanning set.
    pub fn from_rows(ambient_dim: usize, rows: Vec<Vec<S>>) -> Self {
        for r in &rows {
            assert_eq!(r.len(), ambient_dim, "spanning vector of wrong length");
        }
        let mut m = Mat::from_rows(rows);
        if m.rows() == 0 {
            m = Mat::zeros(0, ambient_dim);
        }
        let pivots = m.rref_in_place();
        let rank = pivots.len();
        let basis = Mat {
            rows: rank,
            cols: ambient_dim,
            entries: m.entries[..rank * ambient_dim].to_vec(),
        };
        Subspace {
            ambient_dim,
            basis,
            pivots,
        }
    }

    pub fn zero(ambient_dim: usize) -> Self {
        Subspace::from_rows(ambient_dim, Vec::new())
    }

    pub fn full(ambient_dim: usize) -> Self {
        Subspace::from_rows(
            ambient_dim,
            (0..ambient_dim).map(|i| unit_vec(ambient_dim, i)).collect(),
        )
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn basis(&self) -> &Mat<S> {
        &self.basis
    }

    pub fn basis_rows(&self) -> impl Iterator<Item = &[S]> {
        (0..self.basis.rows()).map(move |i| self.basis.row(i))
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Coordinates of `v` in the canonical basis, if `v` lies in the span.
    /// Because the basis is in RREF, the candidate coordinates are read off
    /// at the pivot columns and then verified exactly.
    pub fn coordinates(&self, v: &[S]) -> Option<Vec<S>> {
        assert_eq!(v.len(), self.ambient_dim, "vector of wrong length");
        let coords: Vec<S> = self.pivots.iter().map(|&p| v[p].clone()).collect();
        let mut residual = v.to_vec();
        for (c, row) in coords.iter().zip(self.basis_rows()) {
            if c.is_zero() {
                continue;
            }
            for (r, b) in residual.iter_mut().zip(row) {
                let t = c.clone() * b.clone();
                *r = r.clone() - t;
            }
        }
        is_zero_vec(&residual).then_some(coords)
    }

    pub fn contains(&self, v: &[S]) -> bool {
        self.coordinates(v).is_some()
    }

    pub fn is_contained_in(&self, other: &Subspace<S>) -> bool {
        self.basis_rows().all(|row| other.contains(row))
    }

    /// Linear combination of the basis rows with the given coefficients.
    pub fn from_coordinates(&self, coords: &[S]) -> Vec<S> {
        assert_eq!(coords.len(), self.dim(), "coordinate length mismatch");
        let mut v = zero_vec::<S>(self.ambient_dim);
        for (c, row) in coords.iter().zip(self.basis_rows()) {
            for (acc, b) in v.iter_mut().zip(row) {
                let t = c.clone() * b.clone();
                *acc = acc.clone() + t;
            }
        }
        v
    }

    /// Sum of subspaces.
    pub fn sum(&self, other: &Subspace<S>) -> Result<Subspace<S>, Error> {
        self.check_ambient(other)?;
        let rows = self
            .basis_rows()
            .chain(other.basis_rows())
            .map(<[S]>::to_vec)
            .collect();
        Ok(Subspace::from_rows(self.ambient_dim, rows))
    }

    fn check_ambient(&self, other: &Subspace<S>) -> Result<(), Error> {
        if self.ambient_dim != other.ambient_dim {
            return Err(Error::DimMismatch {
                expected: self.ambient_dim,
                got: other.ambient_dim,
                context: "subspace ambient dimensions",
            });
        }
        Ok(())
    }
}

impl<S: fmt::Display> fmt::Display for Subspace<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Subspace(dim {} in {}, basis {})",
            self.basis.rows, self.ambient_dim, self.basis
        )
    }
}

/// Canonical basis of the right null space `{v : m v = 0}`.
pub fn kernel_basis<S: Scalar>(m: &Mat<S>) -> Subspace<S> {
    let n = m.cols();
    let mut work = m.clone();
    let pivots = work.rref_in_place();
    let mut rows = Vec::with_capacity(n - pivots.len());
    let mut piv_iter = pivots.iter().copied().peekable();
    let mut pivot_of_col = vec![None; n];
    for (r, &c) in pivots.iter().enumerate() {
        pivot_of_col[c] = Some(r);
    }
    for free in 0..n {
        if piv_iter.peek() == Some(&free) {
            piv_iter.next();
            continue;
        }
        let mut v = zero_vec::<S>(n);
        v[free] = S::one();
        for (col, slot) in pivot_of_col.iter().enumerate() {
            if let Some(r) = slot {
                v[col] = -work[(*r, free)].clone();
            }
        }
        rows.push(v);
    }
    Subspace::from_rows(n, rows)
}

/// A particular solution of `a x = b`, if the system is consistent. Free
/// variables are set to zero, so the solution is unique when `a` has full
/// column rank.
pub fn solve<S: Scalar>(a: &Mat<S>, b: &[S]) -> Option<Vec<S>> {
    assert_eq!(a.rows(), b.len(), "right-hand side length mismatch");
    let mut aug = Mat::<S>::zeros(a.rows(), a.cols() + 1);
    for i in 0..a.rows() {
        for j in 0..a.cols() {
            aug[(i, j)] = a[(i, j)].clone();
        }
        aug[(i, a.cols())] = b[i].clone();
    }
    let pivots = aug.rref_in_place();
    if pivots.last() == Some(&a.cols()) {
        return None;
    }
    let mut x = zero_vec::<S>(a.cols());
    for (r, &p) in pivots.iter().enumerate() {
        x[p] = aug[(r, a.cols())].clone();
    }
    Some(x)
}

/// Canonical basis of the intersection of two subspaces.
pub fn intersect<S: Scalar>(a: &Subspace<S>, b: &Subspace<S>) -> Result<Subspace<S>, Error> {
    if a.ambient_dim() != b.ambient_dim() {
        return Err(Error::DimMismatch {
            expected: a.ambient_dim(),
            got: b.ambient_dim(),
            context: "subspace intersection",
        });
    }
    let n = a.ambient_dim();
    let (da, db) = (a.dim(), b.dim());
    if da == 0 || db == 0 {
        return Ok(Subspace::zero(n));
    }
    // Columns of m are the basis vectors of a followed by the negated basis
    // vectors of b; a kernel element (u, v) encodes u.a = v.b in the
    // intersection.
    let mut m = Mat::zeros(n, da + db);
    for (j, row) in a.basis_rows().enumerate() {
        for (i, x) in row.iter().enumerate() {
            m[(i, j)] = x.clone();
        }
    }
    for (j, row) in b.basis_rows().enumerate() {
        for (i, x) in row.iter().enumerate() {
            m[(i, da + j)] = -x.clone();
        }
    }
    let ker = kernel_basis(&m);
    let rows = ker
        .basis_rows()
        .map(|coeffs| a.from_coordinates(&coeffs[..da]))
        .collect();
    Ok(Subspace::from_rows(n, rows))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rat;
    use num_traits::One;

    fn mat(rows: &[&[i64]]) -> Mat<Rat> {
        Mat::from_int_rows(rows)
    }

    #[test]
    fn rank_identity_zero_proportional() {
        assert_eq!(rank(&Mat::<Rat>::identity(3)), 3);
        assert_eq!(rank(&Mat::<Rat>::zeros(2, 2)), 0);
        assert_eq!(rank(&mat(&[&[1, 2], &[2, 4]])), 1);
    }

    #[test]
    fn kernel_of_single_equation() {
        let k = kernel_basis(&mat(&[&[1, 2]]));
        assert_eq!(k.dim(), 1);
        // span{(-2, 1)} canonicalized to a leading one
        let expected = Subspace::from_rows(
            2,
            vec![vec![
                Rat::from_integer((-2).into()),
                Rat::from_integer(1.into()),
            ]],
        );
        assert_eq!(k, expected);
    }

    #[test]
    fn kernel_of_identity_and_zero() {
        assert_eq!(kernel_basis(&Mat::<Rat>::identity(3)).dim(), 0);
        let full = kernel_basis(&Mat::<Rat>::zeros(2, 2));
        assert_eq!(full, Subspace::full(2));
    }

    #[test]
    fn intersect_axes_is_zero() {
        let x = Subspace::from_rows(2, vec![vec![Rat::from_integer(1.into()), Rat::zero()]]);
        let y = Subspace::from_rows(2, vec![vec![Rat::zero(), Rat::from_integer(1.into())]]);
        assert_eq!(intersect(&x, &y).unwrap().dim(), 0);
    }

    #[test]
    fn intersect_idempotent_and_containment() {
        let v = Subspace::from_rows(
            3,
            vec![
                vec![Rat::from_integer(1.into()), Rat::zero(), Rat::from_integer(2.into())],
                vec![Rat::zero(), Rat::from_integer(1.into()), Rat::from_integer(3.into())],
            ],
        );
        assert_eq!(intersect(&v, &v).unwrap(), v);

        let plane = Subspace::from_rows(
            2,
            vec![
                vec![Rat::from_integer(1.into()), Rat::zero()],
                vec![Rat::zero(), Rat::from_integer(1.into())],
            ],
        );
        let line = Subspace::from_rows(
            2,
            vec![vec![Rat::from_integer(1.into()), Rat::from_integer(1.into())]],
        );
        assert_eq!(intersect(&plane, &line).unwrap(), line);
    }

    #[test]
    fn intersection_dimension_mismatch_rejected() {
        let a = Subspace::<Rat>::zero(2);
        let b = Subspace::<Rat>::zero(3);
        assert!(matches!(
            intersect(&a, &b),
            Err(Error::DimMismatch { .. })
        ));
    }

    #[test]
    fn coordinates_read_off_pivots() {
        let v = Subspace::from_rows(
            3,
            vec![
                vec![Rat::from_integer(2.into()), Rat::zero(), Rat::from_integer(4.into())],
                vec![Rat::zero(), Rat::from_integer(3.into()), Rat::from_integer(6.into())],
            ],
        );
        let w = vec![
            Rat::from_integer(1.into()),
            Rat::from_integer(1.into()),
            Rat::from_integer(4.into()),
        ];
        let coords = v.coordinates(&w).unwrap();
        assert_eq!(v.from_coordinates(&coords), w);
        let outside = vec![Rat::one(), Rat::zero(), Rat::zero()];
        assert!(v.coordinates(&outside).is_none());
    }
}
