//! Pointwise anchor-kernel computation for the algebroid
//! `A = (P×g) ⋈ T*P` from linear data at a single point: the fiber
//! algebra carrier `l_p`, its dimension decomposition, isotropy, and the
//! embedding into the double.
//!
//! This module is purely linear; the bracket-level structure of `l_p` in
//! the two closed cases lives in [`crate::matched`].

use crate::error::Error;
use crate::exactlin::{self, dot, kernel_basis, rank, Mat, Subspace};
use crate::scalar::Scalar;

/// The linear data of a Poisson action at one point: `sigma` maps `g` to
/// `T_pP` (column `j` is `σ_{e_j}(p)`) and `pi_sharp` is the bundle map
/// `T*_pP → T_pP` of the Poisson bivector, antisymmetric in the chosen
/// dual coordinate pairing.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PointActionData<S> {
    g_dim: usize,
    p_dim: usize,
    sigma: Mat<S>,
    pi_sharp: Mat<S>,
}

impl<S: Scalar> PointActionData<S> {
    pub fn new(sigma: Mat<S>, pi_sharp: Mat<S>) -> Result<Self, Error> {
        let p_dim = sigma.rows();
        let g_dim = sigma.cols();
        if pi_sharp.rows() != p_dim || pi_sharp.cols() != p_dim {
            return Err(Error::DimMismatch {
                expected: p_dim,
                got: pi_sharp.rows(),
                context: "pi_sharp must be square of size p_dim",
            });
        }
        for i in 0..p_dim {
            for j in i..p_dim {
                if pi_sharp[(i, j)] != -pi_sharp[(j, i)].clone() {
                    return Err(Error::NotSkew { i, j });
                }
            }
        }
        Ok(PointActionData {
            g_dim,
            p_dim,
            sigma,
            pi_sharp,
        })
    }

    pub fn g_dim(&self) -> usize {
        self.g_dim
    }

    pub fn p_dim(&self) -> usize {
        self.p_dim
    }

    pub fn sigma(&self) -> &Mat<S> {
        &self.sigma
    }

    pub fn pi_sharp(&self) -> &Mat<S> {
        &self.pi_sharp
    }

    /// The scalar product on the fiber `A_p = g ⊕ T*_pP`:
    /// `⟨x + α, y + β⟩_p = β(σx) + α(σy)`.
    pub fn fiber_pairing(&self, u: &[S], v: &[S]) -> S {
        let (x, alpha) = u.split_at(self.g_dim);
        let (y, beta) = v.split_at(self.g_dim);
        dot(beta, &self.sigma.apply(x)) + dot(alpha, &self.sigma.apply(y))
    }

    /// `φ(α) = σᵀ α`, the covector on `g` induced by a cotangent vector.
    pub fn phi(&self, alpha: &[S]) -> Vec<S> {
        self.sigma.transpose().apply(alpha)
    }
}

/// The anchor kernel and its dimension bookkeeping: `lp` lives in the
/// `(g_dim + p_dim)`-dimensional fiber and
/// `dim lp = dim g_p + dim t_p + dim(O_p ∩ S_p)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiberResult<S> {
    pub lp: Subspace<S>,
    pub dim_gp: usize,
    pub dim_tp: usize,
    pub dim_overlap: usize,
}

/// Kernel of the anchor `(x, α) ↦ σx + π#α`, together with the dimensions
/// of the stabilizer `g_p = ker σ`, the transversal space `t_p = ker π#`,
/// and the overlap of the two image distributions `O_p = im σ`,
/// `S_p = im π#`.
pub fn anchor_kernel<S: Scalar>(d: &PointActionData<S>) -> FiberResult<S> {
    let m = d.sigma.hstack(&d.pi_sharp);
    let lp = kernel_basis(&m);
    let dim_gp = d.g_dim - rank(&d.sigma);
    let dim_tp = d.p_dim - rank(&d.pi_sharp);
    let orbit = Subspace::from_rows(
        d.p_dim,
        (0..d.g_dim).map(|j| d.sigma.col_vec(j)).collect(),
    );
    let leaf = Subspace::from_rows(
        d.p_dim,
        (0..d.p_dim).map(|j| d.pi_sharp.col_vec(j)).collect(),
    );
    let dim_overlap = exactlin::intersect(&orbit, &leaf)
        .expect("both live in T_p P")
        .dim();
    debug_assert_eq!(lp.dim(), dim_gp + dim_tp + dim_overlap);
    FiberResult {
        lp,
        dim_gp,
        dim_tp,
        dim_overlap,
    }
}

/// Confirms that the anchor kernel is isotropic for the fiber pairing.
/// For kernel elements this reduces to the skewness of `π#`, so the answer
/// is `true` on every valid input; the exhaustive evaluation is the point.
pub fn isotropy_check<S: Scalar>(d: &PointActionData<S>, lp: &Subspace<S>) -> bool {
    let rows: Vec<Vec<S>> = lp.basis_rows().map(<[S]>::to_vec).collect();
    rows.iter()
        .all(|u| rows.iter().all(|v| d.fiber_pairing(u, v).is_zero()))
}

/// Image of `lp` under `Φ: (x, α) ↦ (x, φ(α))` inside `g ⊕ g*`, as a
/// subspace of the `2·g_dim`-dimensional double.
pub fn phi_embed<S: Scalar>(d: &PointActionData<S>, lp: &Subspace<S>) -> Subspace<S> {
    let rows = lp
        .basis_rows()
        .map(|row| {
            let (x, alpha) = row.split_at(d.g_dim);
            let mut v = x.to_vec();
            v.extend(d.phi(alpha));
            v
        })
        .collect();
    Subspace::from_rows(2 * d.g_dim, rows)
}

/// The hyperbolic pairing on `g ⊕ g*`, for cross-checking `phi_embed`
/// images against the double's scalar product.
pub fn double_pairing<S: Scalar>(g_dim: usize, u: &[S], v: &[S]) -> S {
    let (x, xi) = u.split_at(g_dim);
    let (y, eta) = v.split_at(g_dim);
    dot(xi, y) + dot(eta, x)
}
