//! Exact rational linear algebra and univariate polynomials.

mod echelon;
mod krylov;
mod matrix;
mod poly;
mod rational;
mod subspace;
mod triangular;

pub use echelon::{kernel, rank, rref, solve_linear, Rref};
pub use krylov::{minimal_polynomial, squarefree_part};
pub use matrix::QMatrix;
pub use poly::QPoly;
pub use rational::{q, ParseRationalError, Rational};
pub use subspace::{combine, Subspace};
pub use triangular::{equal_diagonal_entries_decoupled, is_ut_diagonalizable, ut_diagonalize};

/// Coordinate vector of exact rationals.
pub type Vector = Vec<Rational>;

/// Integer coordinate vector convenience constructor.
pub fn vector(xs: &[i64]) -> Vector {
    xs.iter().map(|&x| Rational::from(x)).collect()
}

pub fn add_vectors(a: &[Rational], b: &[Rational]) -> Vector {
    assert_eq!(a.len(), b.len(), "vector length mismatch");
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn sub_vectors(a: &[Rational], b: &[Rational]) -> Vector {
    assert_eq!(a.len(), b.len(), "vector length mismatch");
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn scale_vector(a: &[Rational], c: &Rational) -> Vector {
    a.iter().map(|x| x * c).collect()
}

pub fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    assert_eq!(a.len(), b.len(), "vector length mismatch");
    a.iter()
        .zip(b)
        .filter(|(x, y)| !x.is_zero() && !y.is_zero())
        .map(|(x, y)| x * y)
        .sum()
}

pub fn is_zero_vector(a: &[Rational]) -> bool {
    a.iter().all(Rational::is_zero)
}
