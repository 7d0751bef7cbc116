//! Error type shared by all modules.

use thiserror::Error;

/// Structured failure modes. Mathematical rejections carry enough data to
/// name the violated condition; they are distinct from malformed-input
/// errors so that callers (in particular the CLI) can map them to different
/// exit codes.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, got {got} ({context})")]
    DimMismatch {
        expected: usize,
        got: usize,
        context: &'static str,
    },

    #[error("structure constants are not antisymmetric at basis pair ({i}, {j})")]
    NotAntisymmetric { i: usize, j: usize },

    #[error("Jacobi identity fails on {count} basis triple(s); first witness ({i}, {j}, {k})")]
    JacobiFailure {
        i: usize,
        j: usize,
        k: usize,
        count: usize,
    },

    #[error("{which} is not a Lie subalgebra")]
    NotSubalgebra { which: &'static str },

    #[error("subspaces do not form a direct sum decomposition: {reason}")]
    NotDirectSum { reason: &'static str },

    #[error("h-perp is not closed under the dual bracket (h is not coisotropic)")]
    NotCoisotropic,

    #[error("cocommutator is incompatible with the bracket; witness triple ({i}, {j}, {k})")]
    IncompatibleCocommutator { i: usize, j: usize, k: usize },

    #[error("pi-sharp is not antisymmetric at entry ({i}, {j})")]
    NotSkew { i: usize, j: usize },

    #[error("representation matrices violate the bracket identity at basis pair ({i}, {j})")]
    InvalidRepresentation { i: usize, j: usize },

    #[error("differential does not preserve the invariant subspace at degree {degree}")]
    InvariantNotPreserved { degree: usize },

    #[error("differential does not square to zero between degrees {degree} and {}", degree + 2)]
    NotAComplex { degree: usize },

    #[error("invalid Cartan matrix: {0}")]
    InvalidCartan(String),

    #[error("Cartan matrix is not of finite type (root generation exceeded cap)")]
    NotFiniteType,

    #[error("unknown type name `{0}`")]
    UnknownType(String),

    #[error("inconsistent input: {0}")]
    Inconsistent(String),
}

impl Error {
    /// True for failures that mean "the input is mathematically false"
    /// rather than malformed.
    pub fn is_mathematical(&self) -> bool {
        !matches!(
            self,
            Error::InvalidCartan(_) | Error::UnknownType(_) | Error::DimMismatch { .. }
        )
    }
}
