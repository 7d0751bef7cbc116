//! Chevalley-Eilenberg cochain complexes with module coefficients,
//! cohomology dimensions, invariant subcomplexes, and relative Lie algebra
//! cohomology.
//!
//! Degree-`k` cochains are indexed by sorted index subsets (ranked
//! lexicographically) tensored with a module index; differentials are
//! assembled sparsely and `d² = 0` is verified at construction.

use crate::error::Error;
use crate::exactlin::{Mat, Subspace};
use crate::liealg::LieAlgebra;
use crate::scalar::Scalar;
use crate::sparse::SparseMat;
use crate::wedge::{self, Binomials};

/// A finite cochain complex of exact vector spaces. `diffs[k]` maps degree
/// `k` to degree `k + 1`.
#[derive(Clone, Debug)]
pub struct CochainComplex<S> {
    degree_dims: Vec<usize>,
    labels: Vec<Vec<String>>,
    diffs: Vec<SparseMat<S>>,
}

impl<S: Scalar> CochainComplex<S> {
    /// Builds a complex, verifying shapes and `d_{k+1} ∘ d_k = 0`.
    pub fn new(
        degree_dims: Vec<usize>,
        labels: Vec<Vec<String>>,
        diffs: Vec<SparseMat<S>>,
    ) -> Result<Self, Error> {
        assert_eq!(degree_dims.len(), labels.len());
        assert_eq!(diffs.len() + 1, degree_dims.len());
        for (k, d) in diffs.iter().enumerate() {
            assert_eq!(d.cols(), degree_dims[k], "differential domain at {k}");
            assert_eq!(d.rows(), degree_dims[k + 1], "differential codomain at {k}");
        }
        for k in 0..diffs.len().saturating_sub(1) {
            if !diffs[k + 1].mul(&diffs[k]).is_zero() {
                return Err(Error::NotAComplex { degree: k });
            }
        }
        Ok(CochainComplex {
            degree_dims,
            labels,
            diffs,
        })
    }

    pub fn top_degree(&self) -> usize {
        self.degree_dims.len() - 1
    }

    pub fn degree_dims(&self) -> &[usize] {
        &self.degree_dims
    }

    pub fn labels(&self, k: usize) -> &[String] {
        &self.labels[k]
    }

    pub fn diff(&self, k: usize) -> &SparseMat<S> {
        &self.diffs[k]
    }

    pub fn diffs(&self) -> &[SparseMat<S>] {
        &self.diffs
    }
}

/// A representation of a Lie algebra on a finite-dimensional space:
/// `rho[i]` is the matrix of the `i`-th basis vector, and
/// `rho([x,y]) = rho(x) rho(y) - rho(y) rho(x)` is validated on basis
/// pairs.
#[derive(Clone, Debug)]
pub struct Representation<S> {
    algebra: LieAlgebra<S>,
    space_dim: usize,
    rho: Vec<Mat<S>>,
}

impl<S: Scalar> Representation<S> {
    pub fn new(algebra: LieAlgebra<S>, rho: Vec<Mat<S>>) -> Result<Self, Error> {
        let n = algebra.dim();
        if rho.len() != n {
            return Err(Error::DimMismatch {
                expected: n,
                got: rho.len(),
                context: "one matrix per basis vector",
            });
        }
        let space_dim = rho.first().map_or(0, Mat::rows);
        for m in &rho {
            if m.rows() != space_dim || m.cols() != space_dim {
                return Err(Error::DimMismatch {
                    expected: space_dim,
                    got: m.rows(),
                    context: "square representation matrices",
                });
            }
        }
        for i in 0..n {
            for j in (i + 1)..n {
                let commutator = rho[i].mul(&rho[j]).sub(&rho[j].mul(&rho[i]));
                let mut of_bracket = Mat::<S>::zeros(space_dim, space_dim);
                for (l, coeff) in algebra.bracket_basis(i, j).iter().enumerate() {
                    if !coeff.is_zero() {
                        of_bracket = of_bracket.add(&rho[l].scaled(coeff));
                    }
                }
                if commutator != of_bracket {
                    return Err(Error::InvalidRepresentation { i, j });
                }
            }
        }
        Ok(Representation {
            algebra,
            space_dim,
            rho,
        })
    }

    /// The adjoint representation.
    pub fn adjoint(algebra: &LieAlgebra<S>) -> Self {
        let n = algebra.dim();
        let rho = (0..n)
            .map(|i| algebra.adjoint_matrix(&crate::exactlin::unit_vec(n, i)))
            .collect();
        Representation::new(algebra.clone(), rho).expect("adjoint satisfies the bracket identity")
    }

    pub fn space_dim(&self) -> usize {
        self.space_dim
    }

    pub fn algebra(&self) -> &LieAlgebra<S> {
        &self.algebra
    }

    pub fn matrix(&self, i: usize) -> &Mat<S> {
        &self.rho[i]
    }
}

/// The Chevalley-Eilenberg complex `(Λ• g* ⊗ M, d)` of `g` with
/// coefficients in `m` (trivial coefficients when `m` is `None`). The
/// differential implements
/// `df(a_0,…,a_k) = Σ_i (-1)^i ρ(a_i) f(…,â_i,…) + Σ_{i<j} (-1)^{i+j} f([a_i,a_j],…,â_i,…,â_j,…)`.
pub fn ce_complex<S: Scalar>(
    g: &LieAlgebra<S>,
    m: Option<&Representation<S>>,
) -> Result<CochainComplex<S>, Error> {
    let n = g.dim();
    if let Some(rep) = m {
        if rep.algebra() != g {
            return Err(Error::Inconsistent(
                "representation is over a different algebra".into(),
            ));
        }
    }
    let mdim = m.map_or(1, Representation::space_dim);
    let binom = Binomials::new(n);

    let mut degree_dims = Vec::with_capacity(n + 2);
    let mut labels = Vec::with_capacity(n + 2);
    for k in 0..=n {
        degree_dims.push(binom.choose(n, k) * mdim);
        let mut degree_labels = Vec::new();
        for subset in wedge::subsets(n, k) {
            let monomial = if subset.is_empty() {
                "1".to_string()
            } else {
                subset
                    .iter()
                    .map(|&s| format!("{}*", g.basis_names()[s]))
                    .collect::<Vec<_>>()
                    .join("∧")
            };
            for mi in 0..mdim {
                if mdim == 1 {
                    degree_labels.push(monomial.clone());
                } else {
                    degree_labels.push(format!("{monomial}⊗m{mi}"));
                }
            }
        }
        labels.push(degree_labels);
    }

    let mut diffs = Vec::with_capacity(n);
    for k in 0..n {
        let targets = wedge::subsets(n, k + 1);
        let mut triplets = Vec::new();
        for t in &targets {
            let t_rank = binom.rank(n, t);
            // module term: (-1)^i ρ(e_{t_i}) applied to f(e_{T \ t_i})
            if let Some(rep) = m {
                for (i, &ti) in t.iter().enumerate() {
                    let mut source = t.clone();
                    source.remove(i);
                    let s_rank = binom.rank(n, &source);
                    let sign_pos = i % 2 == 0;
                    let rho = rep.matrix(ti);
                    for mi in 0..mdim {
                        for mo in 0..mdim {
                            let v = rho[(mo, mi)].clone();
                            if v.is_zero() {
                                continue;
                            }
                            let v = if sign_pos { v } else { -v };
                            triplets.push((t_rank * mdim + mo, s_rank * mdim + mi, v));
                        }
                    }
                }
            }
            // bracket term: (-1)^{i+j} f([e_{t_i}, e_{t_j}] ∧ e_{rest})
            for i in 0..t.len() {
                for j in (i + 1)..t.len() {
                    let mut rest = t.clone();
                    rest.remove(j);
                    rest.remove(i);
                    let pair_sign = (i + j) % 2 == 0;
                    for (c, coeff) in g.bracket_basis(t[i], t[j]).iter().enumerate() {
                        if coeff.is_zero() {
                            continue;
                        }
                        let Some((ins_sign, source)) = wedge::insert_signed(&rest, c) else {
                            continue;
                        };
                        let s_rank = binom.rank(n, &source);
                        let positive = pair_sign == (ins_sign > 0);
                        let v = if positive {
                            coeff.clone()
                        } else {
                            -coeff.clone()
                        };
                        for mi in 0..mdim {
                            triplets.push((t_rank * mdim + mi, s_rank * mdim + mi, v.clone()));
                        }
                    }
                }
            }
        }
        diffs.push(SparseMat::from_triplets(
            degree_dims[k + 1],
            degree_dims[k],
            triplets,
        ));
    }

    CochainComplex::new(degree_dims, labels, diffs)
}

/// Betti numbers `dim H^k = dim ker d_k − rank d_{k-1}` of a complex.
pub fn cohomology_dims<S: Scalar>(c: &CochainComplex<S>) -> Vec<usize> {
    let top = c.top_degree();
    let ranks: Vec<usize> = c.diffs.iter().map(SparseMat::rank).collect();
    (0..=top)
        .map(|k| {
            let rank_out = if k < top { ranks[k] } else { 0 };
            let rank_in = if k > 0 { ranks[k - 1] } else { 0 };
            c.degree_dims[k] - rank_out - rank_in
        })
        .collect()
}

/// Extends a linear map `m` on a space of dimension `n` to `Λᵏ` as a
/// derivation: `D(v_1 ∧ … ∧ v_k) = Σ_i v_1 ∧ … ∧ m(v_i) ∧ … ∧ v_k`.
pub fn derivation_on_wedge<S: Scalar>(m: &Mat<S>, k: usize) -> SparseMat<S> {
    let n = m.rows();
    assert_eq!(n, m.cols(), "derivation extension needs a square matrix");
    let binom = Binomials::new(n);
    let dim = binom.choose(n, k);
    let mut triplets = Vec::new();
    for source in wedge::subsets(n, k) {
        let s_rank = binom.rank(n, &source);
        for (pos, &s) in source.iter().enumerate() {
            for c in 0..n {
                let coeff = m[(c, s)].clone();
                if coeff.is_zero() {
                    continue;
                }
                if c == s {
                    triplets.push((s_rank, s_rank, coeff));
                    continue;
                }
                let mut rest = source.clone();
                rest.remove(pos);
                let Some((ins_sign, target)) = wedge::insert_signed(&rest, c) else {
                    continue;
                };
                let sign_pos = (pos % 2 == 0) == (ins_sign > 0);
                let v = if sign_pos { coeff } else { -coeff };
                triplets.push((binom.rank(n, &target), s_rank, v));
            }
        }
    }
    SparseMat::from_triplets(dim, dim, triplets)
}

/// Matrix of the interior product `i_x: Λᵏ V* → Λ^{k-1} V*`,
/// `i_x(ξ_1 ∧ … ∧ ξ_k) = Σ_i (-1)^{i-1} ξ_i(x) ξ_1 ∧ … ξ̂_i … ∧ ξ_k`.
pub fn interior_product<S: Scalar>(x: &[S], k: usize) -> SparseMat<S> {
    let n = x.len();
    let binom = Binomials::new(n);
    assert!(k >= 1);
    let mut triplets = Vec::new();
    for source in wedge::subsets(n, k) {
        let s_rank = binom.rank(n, &source);
        for (pos, &s) in source.iter().enumerate() {
            if x[s].is_zero() {
                continue;
            }
            let mut rest = source.clone();
            rest.remove(pos);
            let v = if pos % 2 == 0 {
                x[s].clone()
            } else {
                -x[s].clone()
            };
            triplets.push((binom.rank(n, &rest), s_rank, v));
        }
    }
    SparseMat::from_triplets(binom.choose(n, k - 1), binom.choose(n, k), triplets)
}

/// Cuts a complex down to per-degree subspaces given as kernels of
/// constraint matrices (`None` means no constraint in that degree), and
/// restricts the differentials. Errors if some differential leaves the
/// subspace.
pub fn subcomplex<S: Scalar>(
    c: &CochainComplex<S>,
    constraints: &[Option<SparseMat<S>>],
) -> Result<CochainComplex<S>, Error> {
    assert_eq!(constraints.len(), c.degree_dims.len());
    let kernels: Vec<Subspace<S>> = constraints
        .iter()
        .enumerate()
        .map(|(k, m)| match m {
            Some(m) => {
                assert_eq!(m.cols(), c.degree_dims[k], "constraint width at degree {k}");
                m.kernel()
            }
            None => Subspace::full(c.degree_dims[k]),
        })
        .collect();

    let mut labels = Vec::with_capacity(kernels.len());
    for (k, ker) in kernels.iter().enumerate() {
        let mut degree_labels = Vec::new();
        for (idx, row) in ker.basis_rows().enumerate() {
            // keep the original label when the basis vector is a monomial
            let nonzero: Vec<usize> = row
                .iter()
                .enumerate()
                .filter(|(_, v)| !v.is_zero())
                .map(|(i, _)| i)
                .collect();
            if nonzero.len() == 1 && row[nonzero[0]].is_one() {
                degree_labels.push(c.labels[k][nonzero[0]].clone());
            } else {
                degree_labels.push(format!("b{k}_{idx}"));
            }
        }
        labels.push(degree_labels);
    }

    let mut diffs = Vec::with_capacity(kernels.len().saturating_sub(1));
    for k in 0..kernels.len() - 1 {
        let source = &kernels[k];
        let target = &kernels[k + 1];
        let mut triplets = Vec::new();
        for (col, row) in source.basis_rows().enumerate() {
            let image = c.diffs[k].apply_dense(row);
            let coords = target
                .coordinates(&image)
                .ok_or(Error::InvariantNotPreserved { degree: k })?;
            for (r, v) in coords.into_iter().enumerate() {
                if !v.is_zero() {
                    triplets.push((r, col, v));
                }
            }
        }
        diffs.push(SparseMat::from_triplets(
            target.dim(),
            source.dim(),
            triplets,
        ));
    }

    CochainComplex::new(kernels.iter().map(Subspace::dim).collect(), labels, diffs)
}

/// The subcomplex of simultaneous kernels of a family of per-degree
/// actions, with restricted differentials. `h_action[r][k]` is the matrix
/// of the `r`-th generator on degree `k`.
pub fn invariant_subcomplex<S: Scalar>(
    c: &CochainComplex<S>,
    h_action: &[Vec<SparseMat<S>>],
) -> Result<CochainComplex<S>, Error> {
    for per_degree in h_action {
        assert_eq!(
            per_degree.len(),
            c.degree_dims.len(),
            "one action matrix per degree"
        );
    }
    let constraints: Vec<Option<SparseMat<S>>> = (0..c.degree_dims.len())
        .map(|k| {
            let mut stacked: Option<SparseMat<S>> = None;
            for per_degree in h_action {
                let m = &per_degree[k];
                if m.is_zero() {
                    continue;
                }
                stacked = Some(match stacked {
                    Some(s) => s.vstack(m),
                    None => m.clone(),
                });
            }
            stacked
        })
        .collect();
    subcomplex(c, &constraints)
}

/// Relative Lie algebra cohomology `H(l, h)`: the cohomology of the
/// subcomplex of `Λ• l*` of cochains annihilated by interior product with
/// every element of `h` and invariant under the adjoint `h`-action
/// (connected-group invariance taken at the Lie algebra level).
pub fn relative_cohomology<S: Scalar>(
    l: &LieAlgebra<S>,
    h: &Subspace<S>,
) -> Result<Vec<usize>, Error> {
    if h.ambient_dim() != l.dim() {
        return Err(Error::DimMismatch {
            expected: l.dim(),
            got: h.ambient_dim(),
            context: "relative cohomology subalgebra",
        });
    }
    if !l.is_subalgebra(h)? {
        return Err(Error::NotSubalgebra { which: "h" });
    }
    let c = ce_complex(l, None)?;
    let n = l.dim();
    let h_rows: Vec<Vec<S>> = h.basis_rows().map(<[S]>::to_vec).collect();

    let constraints: Vec<Option<SparseMat<S>>> = (0..=n)
        .map(|k| {
            let mut stacked: Option<SparseMat<S>> = None;
            let mut push = |m: SparseMat<S>| {
                if m.is_zero() {
                    return;
                }
                stacked = Some(match stacked.take() {
                    Some(s) => s.vstack(&m),
                    None => m,
                });
            };
            for x in &h_rows {
                if k >= 1 {
                    push(interior_product(x, k));
                }
                // adjoint action on Λᵏ l*: derivation extension of -ad_xᵀ
                let theta = derivation_on_wedge(&l.adjoint_matrix(x).transpose().neg(), k);
                push(theta);
            }
            stacked
        })
        .collect();

    let basic = subcomplex(&c, &constraints)?;
    Ok(cohomology_dims(&basic))
}
