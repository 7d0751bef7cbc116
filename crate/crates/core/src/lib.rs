//! Exact-arithmetic machinery for Lie bialgebras, double Lie algebras,
//! matched pairs, anchor-kernel fiber algebras, and Chevalley-Eilenberg
//! cohomology, culminating in the K-invariant Poisson cohomology of flag
//! manifolds under the Bruhat Poisson structure.
//!
//! Everything is computed over an exact field. The core is generic over the
//! scalar type through the [`Scalar`] trait; the concrete instantiation used
//! throughout the crate and by the CLI is the arbitrary-precision rational
//! [`Rat`].

pub mod bialg;
pub mod cohom;
pub mod error;
pub mod exactlin;
pub mod fiber;
pub mod flag;
pub mod liealg;
pub mod matched;
pub mod roots;
pub mod scalar;
pub mod sparse;
pub mod wedge;

pub use error::Error;
pub use scalar::Scalar;

/// Arbitrary-precision rational scalar. Always stored reduced with a
/// positive denominator.
pub type Rat = num_rational::BigRational;

/// Dense rational matrix.
pub type QMat = exactlin::Mat<Rat>;
/// Canonical rational subspace.
pub type QSubspace = exactlin::Subspace<Rat>;
