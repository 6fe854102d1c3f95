//! Exact abstract Jordan-Chevalley decomposition for finite-dimensional Lie
//! algebras over the rationals.
//!
//! An element `x` of the derived algebra `[g, g]` splits uniquely as
//! `x = S + N` with `[S, N] = 0` such that every finite-dimensional
//! representation sends `S` to a semisimple matrix and `N` to a nilpotent one.
//! [`abstract_jcd::abstract_jordan_chevalley`] computes the splitting from a
//! Levi decomposition; [`matrix_jcd`] supplies the matrix-level oracle.

pub mod abstract_jcd;
pub mod error;
pub mod fixtures;
pub mod io;
pub mod levi;
pub mod lie;
pub mod linalg;
pub mod matrix_jcd;
pub mod reps;
pub mod sample;

pub use abstract_jcd::{abstract_jordan_chevalley, AbstractJordanPair, Decomposer, VerificationReport};
pub use error::{Error, Result};
pub use levi::{levi_decomposition, LeviDecomposition};
pub use lie::{Ideal, LieAlgebra};
pub use linalg::{QMatrix, QPoly, Rational, Subspace};
pub use matrix_jcd::{is_nilpotent_matrix, is_semisimple_matrix, matrix_jordan_chevalley, JordanPair};
pub use reps::{RepDescriptor, Representation};
