//! Diagonalizability and diagonalization of upper-triangular matrices.

use super::echelon::rank;
use super::matrix::QMatrix;
use super::rational::Rational;
use crate::error::{Error, Result};

fn ensure_upper_triangular(a: &QMatrix) -> Result<usize> {
    let n = a.ensure_square()?;
    if a.is_upper_triangular() {
        Ok(n)
    } else {
        Err(Error::NotUpperTriangular)
    }
}

/// Decides whether an upper-triangular matrix is diagonalizable.
///
/// For each diagonal value `α`, the algebraic multiplicity is the number of
/// diagonal entries equal to `α`; the matrix is diagonalizable iff the
/// echelon form of `a − αI` has a leading one for every other diagonal
/// position, i.e. `rank(a − αI) = #{m : a_mm ≠ α}`.
pub fn is_ut_diagonalizable(a: &QMatrix) -> Result<bool> {
    let n = ensure_upper_triangular(a)?;
    let mut seen: Vec<&Rational> = Vec::new();
    for i in 0..n {
        let alpha = &a[(i, i)];
        if seen.contains(&alpha) {
            continue;
        }
        seen.push(alpha);
        let others = (0..n).filter(|&m| &a[(m, m)] != alpha).count();
        let mut shifted = a.clone();
        for m in 0..n {
            shifted[(m, m)] -= alpha;
        }
        // Rank is at least `others`; equality rules out Jordan chains.
        if rank(&shifted) != others {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The entrywise test `a_ij = 0` for all `i < j` with `a_ii = a_jj`.
///
/// Necessary for diagonalizability but not sufficient once a third distinct
/// eigenvalue can link two equal ones, e.g. `[[1,1,0],[0,2,1],[0,0,1]]`.
pub fn equal_diagonal_entries_decoupled(a: &QMatrix) -> Result<bool> {
    let n = ensure_upper_triangular(a)?;
    Ok((0..n).all(|i| (i + 1..n).all(|j| a[(i, i)] != a[(j, j)] || a[(i, j)].is_zero())))
}

/// Conjugates a diagonalizable upper-triangular matrix to diagonal form by a
/// product of elementary upper-triangular shears.
///
/// Row by row, each entry `a_ij` (`i < j`) is cleared with
/// `P = I + α E_ij`, `α = a_ij / (a_jj − a_ii)`. Returns `(p, d)` with
/// `p` unit upper triangular and `p⁻¹·a·p = d`.
pub fn ut_diagonalize(a: &QMatrix) -> Result<(QMatrix, QMatrix)> {
    let n = ensure_upper_triangular(a)?;
    let mut d = a.clone();
    let mut p = QMatrix::identity(n);
    for i in 0..n {
        for j in i + 1..n {
            if d[(i, j)].is_zero() {
                continue;
            }
            let gap = &d[(j, j)] - &d[(i, i)];
            if gap.is_zero() {
                return Err(Error::NotDiagonalizable);
            }
            let alpha = &d[(i, j)] / &gap;
            // d <- (I - αE_ij) d (I + αE_ij): column j += α·column i, then row i -= α·row j
            for r in 0..=i {
                let delta = &d[(r, i)] * &alpha;
                d[(r, j)] += delta;
                let delta = &p[(r, i)] * &alpha;
                p[(r, j)] += delta;
            }
            for c in j..n {
                let delta = &d[(j, c)] * &alpha;
                d[(i, c)] -= delta;
            }
            debug_assert!(d[(i, j)].is_zero());
        }
    }
    Ok((p, d))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{minimal_polynomial, q};

    #[test]
    fn criterion_examples() {
        assert!(is_ut_diagonalizable(&QMatrix::from_ints(&[[1, 1], [0, 2]])).unwrap());
        assert!(!is_ut_diagonalizable(&QMatrix::from_ints(&[[1, 1], [0, 1]])).unwrap());
        assert!(is_ut_diagonalizable(&QMatrix::diag(&[q(3, 1), q(3, 1), q(-1, 2)])).unwrap());
        assert_eq!(
            is_ut_diagonalizable(&QMatrix::from_ints(&[[1, 0], [1, 1]])),
            Err(Error::NotUpperTriangular)
        );
    }

    #[test]
    fn entrywise_test_is_not_sufficient() {
        let a = QMatrix::from_ints(&[[1, 1, 0], [0, 2, 1], [0, 0, 1]]);
        assert!(equal_diagonal_entries_decoupled(&a).unwrap());
        assert!(!is_ut_diagonalizable(&a).unwrap());
        assert!(!minimal_polynomial(&a).unwrap().is_squarefree());
        assert_eq!(ut_diagonalize(&a), Err(Error::NotDiagonalizable));
    }

    #[test]
    fn diagonalize_two_by_two() {
        let a = QMatrix::from_ints(&[[1, 1], [0, 2]]);
        let (p, d) = ut_diagonalize(&a).unwrap();
        assert_eq!(p, QMatrix::from_ints(&[[1, 1], [0, 1]]));
        assert_eq!(d, QMatrix::diag(&[q(1, 1), q(2, 1)]));
    }

    #[test]
    fn diagonal_input_is_untouched() {
        let a = QMatrix::diag(&[q(1, 1), q(1, 1), q(5, 3)]);
        let (p, d) = ut_diagonalize(&a).unwrap();
        assert_eq!(p, QMatrix::identity(3));
        assert_eq!(d, a);
    }

    #[test]
    fn diagonalize_three_by_three() {
        let a = QMatrix::from_ints(&[[1, 0, 1], [0, 2, 0], [0, 0, 3]]);
        let (p, d) = ut_diagonalize(&a).unwrap();
        assert_eq!(d, QMatrix::diag(&[q(1, 1), q(2, 1), q(3, 1)]));
        assert!(p.is_upper_triangular());
        // brute force: p^{-1} a p computed independently
        let conj = &(&p.inverse().unwrap() * &a) * &p;
        assert_eq!(conj, d);
        assert_eq!(
            p,
            QMatrix::from_rows(vec![
                vec![q(1, 1), q(0, 1), q(1, 2)],
                vec![q(0, 1), q(1, 1), q(0, 1)],
                vec![q(0, 1), q(0, 1), q(1, 1)],
            ])
            .unwrap()
        );
    }

    #[test]
    fn rejects_non_diagonalizable() {
        assert_eq!(
            ut_diagonalize(&QMatrix::from_ints(&[[2, 1], [0, 2]])),
            Err(Error::NotDiagonalizable)
        );
    }
}
