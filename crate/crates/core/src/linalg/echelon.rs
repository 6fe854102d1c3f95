use super::matrix::QMatrix;
use super::rational::Rational;
use super::subspace::Subspace;

/// Result of reducing a matrix to reduced row echelon form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Rref {
    pub reduced: QMatrix,
    pub pivots: Vec<usize>,
    pub rank: usize,
}

/// Gauss-Jordan elimination to the unique reduced row echelon form.
pub fn rref(m: &QMatrix) -> Rref {
    let mut a = m.clone();
    let (rows, cols) = (a.rows(), a.cols());
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a[(i, c)].is_zero()) else {
            continue;
        };
        a.swap_rows(p, r);
        let inv = a[(r, c)].recip();
        a.scale_row(r, &inv);
        for i in 0..rows {
            if i != r && !a[(i, c)].is_zero() {
                let f = -&a[(i, c)];
                a.add_row_multiple(i, r, &f);
            }
        }
        pivots.push(c);
        r += 1;
    }
    Rref {
        reduced: a,
        rank: pivots.len(),
        pivots,
    }
}

pub fn rank(m: &QMatrix) -> usize {
    rref(m).rank
}

/// Solves `a·x = b`. Returns `None` when inconsistent; free variables are set
/// to zero when the system is underdetermined.
pub fn solve_linear(a: &QMatrix, b: &[Rational]) -> Option<Vec<Rational>> {
    assert_eq!(a.rows(), b.len(), "right-hand side length must match row count");
    let (rows, cols) = (a.rows(), a.cols());
    let mut aug = QMatrix::zeros(rows, cols + 1);
    for i in 0..rows {
        for j in 0..cols {
            aug[(i, j)] = a[(i, j)].clone();
        }
        aug[(i, cols)] = b[i].clone();
    }
    let Rref { reduced, pivots, .. } = rref(&aug);
    if pivots.last() == Some(&cols) {
        return None;
    }
    let mut x = vec![Rational::ZERO; cols];
    for (r, &p) in pivots.iter().enumerate() {
        x[p] = reduced[(r, cols)].clone();
    }
    Some(x)
}

/// Null space `{x : a·x = 0}` with its canonical echelon basis.
pub fn kernel(a: &QMatrix) -> Subspace {
    let cols = a.cols();
    let Rref { reduced, pivots, .. } = rref(a);
    let mut is_pivot = vec![false; cols];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    let vectors: Vec<Vec<Rational>> = (0..cols)
        .filter(|&f| !is_pivot[f])
        .map(|f| {
            let mut v = vec![Rational::ZERO; cols];
            v[f] = Rational::ONE;
            for (r, &p) in pivots.iter().enumerate() {
                v[p] = -&reduced[(r, f)];
            }
            v
        })
        .collect();
    Subspace::span(cols, &vectors)
}
