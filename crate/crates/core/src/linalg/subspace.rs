use serde::Serialize;

use super::echelon::{kernel, rref};
use super::matrix::QMatrix;
use super::rational::Rational;
use crate::error::{ensure_len, Result};

/// A subspace of `Q^n`, stored by its canonical reduced row echelon basis.
///
/// Two subspaces are equal exactly when their bases are equal as sequences.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct Subspace {
    ambient_dim: usize,
    basis: Vec<Vec<Rational>>,
    #[serde(skip)]
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(ambient_dim: usize) -> Self {
        Subspace {
            ambient_dim,
            basis: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn full(ambient_dim: usize) -> Self {
        let basis = (0..ambient_dim)
            .map(|i| {
                let mut v = vec![Rational::ZERO; ambient_dim];
                v[i] = Rational::ONE;
                v
            })
            .collect();
        Subspace {
            ambient_dim,
            basis,
            pivots: (0..ambient_dim).collect(),
        }
    }

    /// Span of arbitrary vectors of length `ambient_dim`. Panics on length mismatch.
    pub fn span(ambient_dim: usize, vectors: &[Vec<Rational>]) -> Self {
        if vectors.is_empty() {
            return Self::zero(ambient_dim);
        }
        let mut data = Vec::with_capacity(vectors.len() * ambient_dim);
        for v in vectors {
            assert_eq!(v.len(), ambient_dim, "spanning vector has wrong length");
            data.extend(v.iter().cloned());
        }
        let m = QMatrix::from_vec(vectors.len(), ambient_dim, data).expect("sized above");
        let r = rref(&m);
        let basis = (0..r.rank).map(|i| r.reduced.row(i).to_vec()).collect();
        Subspace {
            ambient_dim,
            basis,
            pivots: r.pivots,
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn basis(&self) -> &[Vec<Rational>] {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Remainder of `v` after clearing every pivot coordinate with the basis.
    ///
    /// The result vanishes exactly when `v` lies in the subspace, and it is
    /// supported on non-pivot coordinates.
    pub fn reduce(&self, v: &[Rational]) -> Vec<Rational> {
        assert_eq!(v.len(), self.ambient_dim, "vector has wrong length");
        let mut w = v.to_vec();
        for (b, &p) in self.basis.iter().zip(&self.pivots) {
            let c = w[p].clone();
            if c.is_zero() {
                continue;
            }
            for (x, y) in w.iter_mut().zip(b) {
                if !y.is_zero() {
                    *x -= &c * y;
                }
            }
        }
        w
    }

    pub fn contains(&self, v: &[Rational]) -> bool {
        self.reduce(v).iter().all(Rational::is_zero)
    }

    /// Coordinates of `v` in the echelon basis, or `None` if `v` is outside.
    pub fn coordinates_in(&self, v: &[Rational]) -> Option<Vec<Rational>> {
        if v.len() != self.ambient_dim || !self.contains(v) {
            return None;
        }
        // Every basis vector has a one at its own pivot and zeros at the others.
        Some(self.pivots.iter().map(|&p| v[p].clone()).collect())
    }

    /// Vector with the given coordinates in the echelon basis.
    pub fn combine(&self, coords: &[Rational]) -> Vec<Rational> {
        assert_eq!(coords.len(), self.dim(), "coordinate count must equal dimension");
        combine(self.ambient_dim, &self.basis, coords)
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> bool {
        self.ambient_dim == other.ambient_dim && self.basis.iter().all(|b| other.contains(b))
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        ensure_len(self.ambient_dim, other.ambient_dim)?;
        let all: Vec<Vec<Rational>> = self.basis.iter().chain(&other.basis).cloned().collect();
        Ok(Subspace::span(self.ambient_dim, &all))
    }

    /// Exact intersection via the kernel of `[U^T | −W^T]`.
    pub fn intersect(&self, other: &Subspace) -> Result<Subspace> {
        ensure_len(self.ambient_dim, other.ambient_dim)?;
        let n = self.ambient_dim;
        let (k1, k2) = (self.dim(), other.dim());
        if k1 == 0 || k2 == 0 {
            return Ok(Subspace::zero(n));
        }
        let mut m = QMatrix::zeros(n, k1 + k2);
        for (j, u) in self.basis.iter().enumerate() {
            for i in 0..n {
                m[(i, j)] = u[i].clone();
            }
        }
        for (j, w) in other.basis.iter().enumerate() {
            for i in 0..n {
                m[(i, k1 + j)] = -&w[i];
            }
        }
        let rels = kernel(&m);
        let vectors: Vec<Vec<Rational>> = rels
            .basis()
            .iter()
            .map(|rel| combine(n, &self.basis, &rel[..k1]))
            .collect();
        Ok(Subspace::span(n, &vectors))
    }

    /// Complement spanned by the standard basis vectors at non-pivot coordinates.
    pub fn standard_complement(&self) -> Subspace {
        let mut is_pivot = vec![false; self.ambient_dim];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        let free: Vec<usize> = (0..self.ambient_dim).filter(|&i| !is_pivot[i]).collect();
        let basis = free
            .iter()
            .map(|&i| {
                let mut v = vec![Rational::ZERO; self.ambient_dim];
                v[i] = Rational::ONE;
                v
            })
            .collect();
        Subspace {
            ambient_dim: self.ambient_dim,
            basis,
            pivots: free,
        }
    }

    /// Basis vectors as the columns of an `ambient_dim × dim` matrix.
    pub fn basis_matrix(&self) -> QMatrix {
        QMatrix::from_columns(self.ambient_dim, &self.basis).expect("uniform lengths")
    }
}

/// `Σ coeffs[i] · vectors[i]` in `Q^n`.
pub fn combine(n: usize, vectors: &[Vec<Rational>], coeffs: &[Rational]) -> Vec<Rational> {
    let mut out = vec![Rational::ZERO; n];
    for (v, c) in vectors.iter().zip(coeffs) {
        if c.is_zero() {
            continue;
        }
        for (o, x) in out.iter_mut().zip(v) {
            if !x.is_zero() {
                *o += c * x;
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;
    use crate::linalg::q;

    fn v(xs: &[i64]) -> Vec<Rational> {
        xs.iter().map(|&x| Rational::from(x)).collect()
    }

    #[test]
    fn coordinates() {
        let s = Subspace::span(2, &[v(&[1, 0])]);
        assert_eq!(s.coordinates_in(&v(&[5, 0])), Some(v(&[5])));
        assert_eq!(s.coordinates_in(&v(&[0, 1])), None);
        let full = Subspace::full(3);
        assert_eq!(full.coordinates_in(&v(&[4, -1, 7])), Some(v(&[4, -1, 7])));
        let skew = Subspace::span(3, &[v(&[2, 2, 0]), v(&[0, 3, 3])]);
        let w = v(&[1, 4, 3]);
        let c = skew.coordinates_in(&w).unwrap();
        assert_eq!(skew.combine(&c), w);
    }

    #[test]
    fn sum_and_intersection() {
        let x = Subspace::span(2, &[v(&[1, 0])]);
        let y = Subspace::span(2, &[v(&[0, 1])]);
        assert_eq!(x.sum(&y).unwrap(), Subspace::full(2));
        assert!(x.intersect(&y).unwrap().is_zero());
        assert_eq!(x.sum(&x).unwrap(), x);
        assert_eq!(x.intersect(&x).unwrap(), x);
        let d = Subspace::span(2, &[v(&[1, 1])]);
        assert!(d.intersect(&x).unwrap().is_zero());
        let z = Subspace::zero(3);
        assert_eq!(x.sum(&z), Err(Error::DimensionMismatch { expected: 2, found: 3 }));
    }

    #[test]
    fn intersection_of_planes() {
        let a = Subspace::span(3, &[v(&[1, 0, 0]), v(&[0, 1, 0])]);
        let b = Subspace::span(3, &[v(&[1, 1, 1]), v(&[0, 0, 1])]);
        let i = a.intersect(&b).unwrap();
        assert_eq!(i, Subspace::span(3, &[v(&[1, 1, 0])]));
        assert_eq!(a.sum(&b).unwrap().dim() + i.dim(), a.dim() + b.dim());
    }

    #[test]
    fn reduction_is_supported_off_pivots() {
        let s = Subspace::span(3, &[v(&[1, 2, 0])]);
        let r = s.reduce(&v(&[3, 1, 4]));
        assert_eq!(r, vec![q(0, 1), q(-5, 1), q(4, 1)]);
        let comp = s.standard_complement();
        assert_eq!(comp.pivots(), &[1, 2]);
        assert!(comp.contains(&r));
    }
}
