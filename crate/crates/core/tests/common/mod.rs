#![allow(dead_code)]

use lie_jcd::linalg::{q, QMatrix, Rational};
use rand::Rng;

pub fn small<R: Rng>(rng: &mut R, bound: i64) -> Rational {
    Rational::from(rng.gen_range(-bound..=bound))
}

/// `L·U` with unit-diagonal triangular factors: determinant one.
pub fn random_invertible<R: Rng>(rng: &mut R, n: usize) -> QMatrix {
    let mut l = QMatrix::identity(n);
    let mut u = QMatrix::identity(n);
    for i in 0..n {
        for j in 0..i {
            l[(i, j)] = small(rng, 2);
            u[(j, i)] = small(rng, 2);
        }
    }
    &l * &u
}

pub fn conjugate(g: &QMatrix, a: &QMatrix) -> QMatrix {
    &(g * a) * &g.inverse().expect("invertible")
}

fn block_diag(blocks: &[QMatrix]) -> QMatrix {
    blocks
        .iter()
        .skip(1)
        .fold(blocks[0].clone(), |acc, b| acc.direct_sum(b))
}

fn scalar(n: usize, c: i64) -> QMatrix {
    QMatrix::identity(n).scale(&Rational::from(c))
}

fn shift(n: usize) -> QMatrix {
    let mut m = QMatrix::zeros(n, n);
    for i in 0..n.saturating_sub(1) {
        m[(i, i + 1)] = Rational::ONE;
    }
    m
}

/// Commuting pairs `(S, N)` in block form: `S` semisimple, `N` nilpotent.
pub fn block_fixtures() -> Vec<(QMatrix, QMatrix)> {
    let rot = QMatrix::from_ints(&[[0, -1], [1, 0]]);
    let rot2 = rot.direct_sum(&rot);
    let mut quad_nil = QMatrix::zeros(4, 4);
    quad_nil[(0, 2)] = Rational::ONE;
    quad_nil[(1, 3)] = Rational::ONE;
    vec![
        (
            block_diag(&[scalar(2, 1), scalar(1, 2)]),
            block_diag(&[shift(2), QMatrix::zeros(1, 1)]),
        ),
        (
            block_diag(&[scalar(3, -1), scalar(2, 3)]),
            block_diag(&[shift(3), shift(2)]),
        ),
        (rot2.clone(), quad_nil),
        (
            block_diag(&[rot.clone(), scalar(2, 0)]),
            block_diag(&[QMatrix::zeros(2, 2), shift(2)]),
        ),
        (
            QMatrix::diag(&[q(1, 2), q(-3, 1), q(0, 1), q(1, 2)]),
            QMatrix::zeros(4, 4),
        ),
        (QMatrix::zeros(4, 4), shift(4)),
        (
            block_diag(&[scalar(2, 5), rot]),
            block_diag(&[shift(2), QMatrix::zeros(2, 2)]),
        ),
    ]
}
