use thiserror::Error;

use crate::linalg::Rational;

/// Evidence that an element lies outside the derived algebra: a linear
/// functional that vanishes on `[g, g]` but not on the element.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DerivedMembershipWitness {
    /// Coefficients of the functional in the dual of the algebra basis.
    pub functional: Vec<Rational>,
    /// The functional evaluated at the rejected element (nonzero).
    pub value: Rational,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("expected a square matrix, got {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },

    #[error("matrix is not upper triangular")]
    NotUpperTriangular,

    #[error("upper-triangular matrix is not diagonalizable")]
    NotDiagonalizable,

    #[error("operation undefined on the zero polynomial")]
    ZeroPolynomial,

    #[error("bracket of basis elements {i} and {j} leaves the span")]
    NotClosed { i: usize, j: usize },

    #[error("basis matrices are linearly dependent")]
    LinearlyDependentBasis,

    #[error("structure constants are not antisymmetric at ({i}, {j})")]
    NotAntisymmetric { i: usize, j: usize },

    #[error("Jacobi identity fails on basis triple ({i}, {j}, {k})")]
    JacobiViolation { i: usize, j: usize, k: usize },

    #[error("the natural representation requires a matrix-mode algebra")]
    NaturalRequiresMatrixMode,

    #[error("operation requires a matrix-mode algebra")]
    MatrixModeRequired,

    #[error("representation is not a homomorphism on basis pair ({i}, {j})")]
    NotAHomomorphism { i: usize, j: usize },

    #[error("element is not in the derived algebra")]
    NotInDerivedAlgebra(DerivedMembershipWitness),

    #[error("internal invariant violated: {0}")]
    InternalInvariantViolation(String),

    #[error("invalid input: {0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn ensure_len(expected: usize, found: usize) -> Result<()> {
    if expected == found {
        Ok(())
    } else {
        Err(Error::DimensionMismatch { expected, found })
    }
}

pub(crate) fn invariant(ok: bool, what: impl FnOnce() -> String) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(Error::InternalInvariantViolation(what()))
    }
}
