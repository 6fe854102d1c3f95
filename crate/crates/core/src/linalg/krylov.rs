//! Minimal polynomials from Krylov sequences.

use super::matrix::QMatrix;
use super::poly::QPoly;
use super::rational::Rational;
use crate::error::Result;

/// Incrementally maintained echelon set of vectors. Each stored row also
/// remembers the combination of input vectors that produced it.
struct Echelon {
    rows: Vec<(Vec<Rational>, usize, Vec<Rational>)>,
}

impl Echelon {
    fn new() -> Self {
        Echelon { rows: Vec::new() }
    }

    /// Reduces `v` against the stored rows. `tag` tracks the combination;
    /// returns the reduced vector and updated tag.
    fn reduce(&self, mut v: Vec<Rational>, mut tag: Vec<Rational>) -> (Vec<Rational>, Vec<Rational>) {
        for (row, pivot, row_tag) in &self.rows {
            let f = v[*pivot].clone();
            if f.is_zero() {
                continue;
            }
            for (x, y) in v.iter_mut().zip(row) {
                if !y.is_zero() {
                    *x -= &f * y;
                }
            }
            for (x, y) in tag.iter_mut().zip(row_tag) {
                if !y.is_zero() {
                    *x -= &f * y;
                }
            }
        }
        (v, tag)
    }

    /// Inserts an already reduced nonzero vector.
    fn push(&mut self, mut v: Vec<Rational>, mut tag: Vec<Rational>) {
        let pivot = v.iter().position(|x| !x.is_zero()).expect("nonzero vector");
        let inv = v[pivot].recip();
        for x in v.iter_mut().chain(tag.iter_mut()) {
            if !x.is_zero() {
                *x *= &inv;
            }
        }
        self.rows.push((v, pivot, tag));
    }

    fn contains(&self, v: &[Rational]) -> bool {
        self.reduce(v.to_vec(), Vec::new()).0.iter().all(Rational::is_zero)
    }
}

/// Monic polynomial `p` of least degree with `p(a)·v = 0`, together with the
/// Krylov vectors `v, a·v, …` it was computed from.
fn local_minimal_polynomial(a: &QMatrix, v: &[Rational]) -> (QPoly, Vec<Vec<Rational>>) {
    let n = a.rows();
    let mut ech = Echelon::new();
    let mut krylov = Vec::new();
    let mut current = v.to_vec();
    for k in 0..=n {
        let mut tag = vec![Rational::ZERO; n + 1];
        tag[k] = Rational::ONE;
        let (w, tag) = ech.reduce(current.clone(), tag);
        if w.iter().all(Rational::is_zero) {
            // Σ tag_i · a^i v = 0 with tag_k = 1
            return (QPoly::new(tag), krylov);
        }
        ech.push(w, tag);
        krylov.push(current.clone());
        current = a.mul_vec(&current);
    }
    unreachable!("Krylov sequence in dimension {n} must become dependent within {n} steps")
}

/// Minimal polynomial of a square matrix: the least common multiple of the
/// local minimal polynomials of a spanning set of vectors. Standard basis
/// vectors already inside the accumulated invariant subspace are skipped.
pub fn minimal_polynomial(a: &QMatrix) -> Result<QPoly> {
    let n = a.ensure_square()?;
    let mut acc = QPoly::one();
    let mut span = Echelon::new();
    for i in 0..n {
        let mut e = vec![Rational::ZERO; n];
        e[i] = Rational::ONE;
        if span.contains(&e) {
            continue;
        }
        let (p, krylov) = local_minimal_polynomial(a, &e);
        acc = QPoly::lcm(&acc, &p)?;
        for k in krylov {
            let (w, _) = span.reduce(k, Vec::new());
            if w.iter().any(|x| !x.is_zero()) {
                span.push(w, Vec::new());
            }
        }
        if span.rows.len() == n {
            break;
        }
    }
    Ok(acc)
}

/// Monic squarefree part `p / gcd(p, p')`.
pub fn squarefree_part(p: &QPoly) -> Result<QPoly> {
    p.squarefree_part()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::q;

    #[test]
    fn examples() {
        assert_eq!(
            minimal_polynomial(&QMatrix::identity(2)).unwrap(),
            QPoly::from_ints(&[-1, 1])
        );
        assert_eq!(
            minimal_polynomial(&QMatrix::unit(2, 0, 1)).unwrap(),
            QPoly::from_ints(&[0, 0, 1])
        );
        assert_eq!(
            minimal_polynomial(&QMatrix::from_ints(&[[0, 1], [-1, 0]])).unwrap(),
            QPoly::from_ints(&[1, 0, 1])
        );
    }

    #[test]
    fn degenerate_sizes() {
        assert_eq!(minimal_polynomial(&QMatrix::zeros(0, 0)).unwrap(), QPoly::one());
        assert_eq!(minimal_polynomial(&QMatrix::zeros(3, 3)).unwrap(), QPoly::t());
        assert!(minimal_polynomial(&QMatrix::zeros(2, 3)).is_err());
    }

    #[test]
    fn block_matrix_takes_lcm() {
        // diag(J_2(1), 1, 2): minimal polynomial (t-1)^2 (t-2)
        let a = QMatrix::from_ints(&[[1, 1, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 2]]);
        let expected = &QPoly::from_ints(&[1, -2, 1]) * &QPoly::from_ints(&[-2, 1]);
        assert_eq!(minimal_polynomial(&a).unwrap(), expected);
        let s = QMatrix::diag(&[q(1, 2), q(1, 2), q(-3, 1)]);
        assert_eq!(
            minimal_polynomial(&s).unwrap(),
            &QPoly::new(vec![q(-1, 2), q(1, 1)]) * &QPoly::from_ints(&[3, 1])
        );
    }
}
