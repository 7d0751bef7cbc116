//! Finite-dimensional Lie algebras presented by structure constants.

use std::fmt;

use crate::error::Error;
use crate::exactlin::{self, dot, is_zero_vec, zero_vec, Mat, Subspace};
use crate::scalar::{from_int, Scalar};

/// A Lie algebra on a finite basis. `c[i][j]` is the coefficient vector of
/// `[e_i, e_j]`; antisymmetry `c[i][j] = -c[j][i]` is enforced by every
/// constructor. The Jacobi identity is *not* checked implicitly: callers
/// run [`LieAlgebra::validate_jacobi`] (or [`LieAlgebra::validated`]) and
/// the `trusted` flag records that this happened, so intentionally broken
/// tables can still be built for negative tests.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LieAlgebra<S> {
    dim: usize,
    basis_names: Vec<String>,
    c: Vec<Vec<Vec<S>>>,
    trusted: bool,
}

/// Outcome of a Jacobi validation: either clean or a list of witnesses
/// `(i, j, k, residual)` with the residual of
/// `[[e_i,e_j],e_k] + [[e_j,e_k],e_i] + [[e_k,e_i],e_j]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JacobiReport<S> {
    pub witnesses: Vec<(usize, usize, usize, Vec<S>)>,
}

impl<S> JacobiReport<S> {
    pub fn ok(&self) -> bool {
        self.witnesses.is_empty()
    }

    pub fn first_error(&self) -> Option<Error> {
        self.witnesses.first().map(|(i, j, k, _)| Error::JacobiFailure {
            i: *i,
            j: *j,
            k: *k,
            count: self.witnesses.len(),
        })
    }
}

impl<S: Scalar> LieAlgebra<S> {
    /// Builds from sparse bracket data `[(i, j, coeffs)]` with `i != j`;
    /// the antisymmetric counterpart of each pair is filled in.
    pub fn from_brackets(
        dim: usize,
        basis_names: Vec<String>,
        brackets: &[(usize, usize, Vec<S>)],
    ) -> Result<Self, Error> {
        let mut c = vec![vec![zero_vec::<S>(dim); dim]; dim];
        for (i, j, v) in brackets {
            if *i >= dim || *j >= dim {
                return Err(Error::Inconsistent(format!(
                    "bracket ({i}, {j}) references a basis index >= dim {dim}"
                )));
            }
            if v.len() != dim {
                return Err(Error::DimMismatch {
                    expected: dim,
                    got: v.len(),
                    context: "bracket coefficient vector",
                });
            }
            if i == j {
                if !is_zero_vec(v) {
                    return Err(Error::NotAntisymmetric { i: *i, j: *j });
                }
                continue;
            }
            c[*i][*j] = exactlin::add_vec(&c[*i][*j], v);
            c[*j][*i] = exactlin::sub_vec(&c[*j][*i], v);
        }
        Ok(Self::assemble(dim, basis_names, c))
    }

    /// Builds from a full structure-constant table, checking antisymmetry.
    pub fn from_table(
        dim: usize,
        basis_names: Vec<String>,
        c: Vec<Vec<Vec<S>>>,
    ) -> Result<Self, Error> {
        assert_eq!(c.len(), dim);
        for (i, row) in c.iter().enumerate() {
            assert_eq!(row.len(), dim);
            for (j, v) in row.iter().enumerate() {
                assert_eq!(v.len(), dim);
                if j < i {
                    continue;
                }
                let neg: Vec<S> = exactlin::neg_vec(v);
                if c[j][i] != neg {
                    return Err(Error::NotAntisymmetric { i, j });
                }
            }
        }
        Ok(Self::assemble(dim, basis_names, c))
    }

    fn assemble(dim: usize, basis_names: Vec<String>, c: Vec<Vec<Vec<S>>>) -> Self {
        let basis_names = if basis_names.is_empty() {
            (0..dim).map(|i| format!("x{i}")).collect()
        } else {
            assert_eq!(basis_names.len(), dim, "one name per basis vector");
            basis_names
        };
        LieAlgebra {
            dim,
            basis_names,
            c,
            trusted: false,
        }
    }

    pub fn abelian(dim: usize) -> Self {
        let mut g = Self::assemble(dim, Vec::new(), vec![vec![zero_vec::<S>(dim); dim]; dim]);
        g.trusted = true;
        g
    }

    /// `sl2` in the basis `(e, h, f)` with `[h,e] = 2e`, `[h,f] = -2f`,
    /// `[e,f] = h`. The standard small test instance.
    pub fn sl2() -> Self {
        let names = vec!["e".into(), "h".into(), "f".into()];
        let two_e: Vec<S> = vec![from_int(2), S::zero(), S::zero()];
        let minus_two_f: Vec<S> = vec![S::zero(), S::zero(), from_int(-2)];
        let h: Vec<S> = vec![S::zero(), S::one(), S::zero()];
        Self::from_brackets(3, names, &[(1, 0, two_e), (1, 2, minus_two_f), (0, 2, h)])
            .expect("sl2 table is antisymmetric")
            .validated()
            .expect("sl2 satisfies Jacobi")
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn basis_names(&self) -> &[String] {
        &self.basis_names
    }

    pub fn trusted(&self) -> bool {
        self.trusted
    }

    /// The structure-constant vector of `[e_i, e_j]`.
    pub fn bracket_basis(&self, i: usize, j: usize) -> &[S] {
        &self.c[i][j]
    }

    /// Bilinear extension of the structure constants.
    pub fn bracket_of(&self, x: &[S], y: &[S]) -> Result<Vec<S>, Error> {
        self.check_len(x)?;
        self.check_len(y)?;
        let mut out = zero_vec::<S>(self.dim);
        for i in 0..self.dim {
            if x[i].is_zero() {
                continue;
            }
            for j in 0..self.dim {
                if y[j].is_zero() {
                    continue;
                }
                let scale = x[i].clone() * y[j].clone();
                for (acc, cij) in out.iter_mut().zip(&self.c[i][j]) {
                    if !cij.is_zero() {
                        let t = scale.clone() * cij.clone();
                        *acc = acc.clone() + t;
                    }
                }
            }
        }
        Ok(out)
    }

    /// Checks `[[x,y],z] + [[y,z],x] + [[z,x],y] = 0` on all basis triples.
    pub fn validate_jacobi(&self) -> JacobiReport<S> {
        let mut witnesses = Vec::new();
        for i in 0..self.dim {
            for j in (i + 1)..self.dim {
                for k in (j + 1)..self.dim {
                    let r = self.jacobi_residual(i, j, k);
                    if !is_zero_vec(&r) {
                        witnesses.push((i, j, k, r));
                    }
                }
            }
        }
        JacobiReport { witnesses }
    }

    fn jacobi_residual(&self, i: usize, j: usize, k: usize) -> Vec<S> {
        let mut out = zero_vec::<S>(self.dim);
        let mut add_term = |ab: &[S], c: usize| {
            for (l, coeff) in ab.iter().enumerate() {
                if coeff.is_zero() {
                    continue;
                }
                for (acc, v) in out.iter_mut().zip(&self.c[l][c]) {
                    if !v.is_zero() {
                        let t = coeff.clone() * v.clone();
                        *acc = acc.clone() + t;
                    }
                }
            }
        };
        add_term(&self.c[i][j], k);
        add_term(&self.c[j][k], i);
        add_term(&self.c[k][i], j);
        out
    }

    /// Runs the Jacobi validation and marks the value trusted on success.
    pub fn validated(mut self) -> Result<Self, Error> {
        let report = self.validate_jacobi();
        match report.first_error() {
            None => {
                self.trusted = true;
                Ok(self)
            }
            Some(e) => Err(e),
        }
    }

    /// Co-adjoint action: `⟨ad*_x ξ, y⟩ = -⟨ξ, [x, y]⟩` for all `y`.
    pub fn coadjoint(&self, x: &[S], xi: &[S]) -> Result<Vec<S>, Error> {
        self.check_len(x)?;
        self.check_len(xi)?;
        let mut out = zero_vec::<S>(self.dim);
        for (j, slot) in out.iter_mut().enumerate() {
            let mut bracket = zero_vec::<S>(self.dim);
            for i in 0..self.dim {
                if x[i].is_zero() {
                    continue;
                }
                for (acc, v) in bracket.iter_mut().zip(&self.c[i][j]) {
                    if !v.is_zero() {
                        let t = x[i].clone() * v.clone();
                        *acc = acc.clone() + t;
                    }
                }
            }
            *slot = -dot(xi, &bracket);
        }
        Ok(out)
    }

    /// Matrix of `ad_x` in the basis: column `j` holds `[x, e_j]`.
    pub fn adjoint_matrix(&self, x: &[S]) -> Mat<S> {
        let mut m = Mat::<S>::zeros(self.dim, self.dim);
        for j in 0..self.dim {
            for i in 0..self.dim {
                if x[i].is_zero() {
                    continue;
                }
                for (l, v) in self.c[i][j].iter().enumerate() {
                    if !v.is_zero() {
                        let t = x[i].clone() * v.clone();
                        m[(l, j)] = m[(l, j)].clone() + t;
                    }
                }
            }
        }
        m
    }

    /// True iff the bracket of every pair of basis vectors of `s` stays in
    /// `s`.
    pub fn is_subalgebra(&self, s: &Subspace<S>) -> Result<bool, Error> {
        if s.ambient_dim() != self.dim {
            return Err(Error::DimMismatch {
                expected: self.dim,
                got: s.ambient_dim(),
                context: "subalgebra test",
            });
        }
        let rows: Vec<Vec<S>> = s.basis_rows().map(<[S]>::to_vec).collect();
        for (a, x) in rows.iter().enumerate() {
            for y in &rows[a + 1..] {
                if !s.contains(&self.bracket_of(x, y)?) {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// Renames the basis, keeping everything else.
    pub fn with_names(mut self, names: Vec<String>) -> Self {
        assert_eq!(names.len(), self.dim);
        self.basis_names = names;
        self
    }

    fn check_len(&self, v: &[S]) -> Result<(), Error> {
        if v.len() != self.dim {
            return Err(Error::DimMismatch {
                expected: self.dim,
                got: v.len(),
                context: "vector in Lie algebra",
            });
        }
        Ok(())
    }
}

impl<S: Scalar> fmt::Display for LieAlgebra<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "LieAlgebra dim {} ({})", self.dim, self.basis_names.join(", "))?;
        for i in 0..self.dim {
            for j in (i + 1)..self.dim {
                let terms: Vec<String> = self.c[i][j]
                    .iter()
                    .enumerate()
                    .filter(|(_, v)| !v.is_zero())
                    .map(|(l, v)| format!("{v}·{}", self.basis_names[l]))
                    .collect();
                if !terms.is_empty() {
                    writeln!(
                        f,
                        "  [{}, {}] = {}",
                        self.basis_names[i],
                        self.basis_names[j],
                        terms.join(" + ")
                    )?;
                }
            }
        }
        Ok(())
    }
}
