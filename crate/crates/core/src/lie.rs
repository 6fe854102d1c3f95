//! Lie algebras given by structure constants, optionally with a faithful
//! matrix realization.

use crate::error::{ensure_len, Error, Result};
use crate::linalg::{
    add_vectors, combine, dot, is_zero_vector, kernel, scale_vector, QMatrix, Rational, Subspace, Vector,
};

/// Matrix basis of a linear Lie algebra plus a cached coordinate extractor.
#[derive(Debug, Clone)]
struct Realization {
    n: usize,
    basis: Vec<QMatrix>,
    /// Flattened entry positions whose restriction determines coordinates.
    key_rows: Vec<usize>,
    /// Inverse of the basis restricted to `key_rows`.
    key_inverse: QMatrix,
}

impl Realization {
    fn new(n: usize, basis: Vec<QMatrix>) -> Result<Self> {
        let dim = basis.len();
        let columns: Vec<Vector> = basis.iter().map(|m| m.entries().to_vec()).collect();
        let flat = QMatrix::from_columns(n * n, &columns)?;
        // Pivot columns of the transpose are rows of `flat` that form an invertible block.
        let r = crate::linalg::rref(&flat.transpose());
        if r.rank != dim {
            return Err(Error::LinearlyDependentBasis);
        }
        let key_rows = r.pivots;
        let mut block = QMatrix::zeros(dim, dim);
        for (a, &row) in key_rows.iter().enumerate() {
            for b in 0..dim {
                block[(a, b)] = flat[(row, b)].clone();
            }
        }
        let key_inverse = block.inverse().ok_or(Error::LinearlyDependentBasis)?;
        Ok(Realization {
            n,
            basis,
            key_rows,
            key_inverse,
        })
    }

    fn realize(&self, x: &[Rational]) -> QMatrix {
        let mut m = QMatrix::zeros(self.n, self.n);
        for (c, b) in x.iter().zip(&self.basis) {
            if !c.is_zero() {
                m = &m + &b.scale(c);
            }
        }
        m
    }

    fn coordinates(&self, m: &QMatrix) -> Option<Vector> {
        if m.rows() != self.n || m.cols() != self.n {
            return None;
        }
        let restricted: Vector = self.key_rows.iter().map(|&r| m.entries()[r].clone()).collect();
        let coords = self.key_inverse.mul_vec(&restricted);
        (self.realize(&coords) == *m).then_some(coords)
    }
}

/// A finite-dimensional Lie algebra over the rationals in a fixed basis.
#[derive(Debug, Clone)]
pub struct LieAlgebra {
    dim: usize,
    /// `table[i * dim + j]` holds the coordinates of `[b_i, b_j]`.
    table: Vec<Vector>,
    realization: Option<Realization>,
}

impl PartialEq for LieAlgebra {
    fn eq(&self, other: &Self) -> bool {
        self.dim == other.dim
            && self.table == other.table
            && self.realization.as_ref().map(|r| &r.basis) == other.realization.as_ref().map(|r| &r.basis)
    }
}

impl LieAlgebra {
    /// Linear Lie algebra spanned by square matrices of a common size.
    pub fn from_matrices(mats: &[QMatrix]) -> Result<Self> {
        let n = match mats.first() {
            Some(m) => m.ensure_square()?,
            None => return Err(Error::Invalid("matrix algebra needs at least one basis matrix".into())),
        };
        for m in mats {
            let k = m.ensure_square()?;
            ensure_len(n, k)?;
        }
        let real = Realization::new(n, mats.to_vec())?;
        let dim = mats.len();
        let mut table = vec![vec![Rational::ZERO; dim]; dim * dim];
        for i in 0..dim {
            for j in i + 1..dim {
                let c = mats[i].commutator(&mats[j]);
                let coords = real.coordinates(&c).ok_or(Error::NotClosed { i, j })?;
                table[j * dim + i] = scale_vector(&coords, &Rational::from(-1));
                table[i * dim + j] = coords;
            }
        }
        Ok(LieAlgebra {
            dim,
            table,
            realization: Some(real),
        })
    }

    /// Abstract Lie algebra from brackets `[b_i, b_j] = coords`. Pairs not
    /// listed bracket to zero; `(j, i)` is implied by antisymmetry.
    pub fn from_structure_constants(dim: usize, brackets: &[(usize, usize, Vector)]) -> Result<Self> {
        let mut table: Vec<Option<Vector>> = vec![None; dim * dim];
        for (i, j, coords) in brackets {
            let (i, j) = (*i, *j);
            if i >= dim || j >= dim {
                return Err(Error::Invalid(format!(
                    "bracket index ({i}, {j}) out of range for dimension {dim}"
                )));
            }
            ensure_len(dim, coords.len())?;
            if i == j {
                if !is_zero_vector(coords) {
                    return Err(Error::NotAntisymmetric { i, j });
                }
                continue;
            }
            let neg = scale_vector(coords, &Rational::from(-1));
            for (slot, value) in [(i * dim + j, coords.clone()), (j * dim + i, neg)] {
                match &table[slot] {
                    Some(old) if *old != value => return Err(Error::NotAntisymmetric { i, j }),
                    _ => table[slot] = Some(value),
                }
            }
        }
        let table = table
            .into_iter()
            .map(|v| v.unwrap_or_else(|| vec![Rational::ZERO; dim]))
            .collect();
        let g = LieAlgebra {
            dim,
            table,
            realization: None,
        };
        g.check_jacobi()?;
        Ok(g)
    }

    /// Basis of the Lie algebra generated by `mats`: the inputs followed by
    /// iterated commutators until the span is bracket-closed.
    pub fn lie_closure(mats: &[QMatrix]) -> Result<Vec<QMatrix>> {
        let n = match mats.first() {
            Some(m) => m.ensure_square()?,
            None => return Ok(Vec::new()),
        };
        let mut basis: Vec<QMatrix> = Vec::new();
        let mut span = Subspace::zero(n * n);
        let push = |m: QMatrix, basis: &mut Vec<QMatrix>, span: &mut Subspace| -> Result<bool> {
            ensure_len(n, m.ensure_square()?)?;
            if span.contains(m.entries()) {
                return Ok(false);
            }
            *span = span.sum(&Subspace::span(n * n, &[m.entries().to_vec()]))?;
            basis.push(m);
            Ok(true)
        };
        for m in mats {
            if !push(m.clone(), &mut basis, &mut span)? {
                return Err(Error::LinearlyDependentBasis);
            }
        }
        let mut frontier = 0;
        while frontier < basis.len() {
            let end = basis.len();
            for j in frontier..end {
                for i in 0..j {
                    let c = basis[i].commutator(&basis[j]);
                    push(c, &mut basis, &mut span)?;
                }
            }
            frontier = end;
        }
        Ok(basis)
    }

    fn check_jacobi(&self) -> Result<()> {
        let d = self.dim;
        for i in 0..d {
            for j in i + 1..d {
                for k in j + 1..d {
                    let t1 = self.bracket_unchecked(&self.unit(i), self.basis_bracket(j, k));
                    let t2 = self.bracket_unchecked(&self.unit(j), self.basis_bracket(k, i));
                    let t3 = self.bracket_unchecked(&self.unit(k), self.basis_bracket(i, j));
                    if !is_zero_vector(&add_vectors(&add_vectors(&t1, &t2), &t3)) {
                        return Err(Error::JacobiViolation { i, j, k });
                    }
                }
            }
        }
        Ok(())
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn is_matrix_mode(&self) -> bool {
        self.realization.is_some()
    }

    /// Basis matrices in matrix mode.
    pub fn realization(&self) -> Option<&[QMatrix]> {
        self.realization.as_ref().map(|r| r.basis.as_slice())
    }

    /// Size of the realizing matrices in matrix mode.
    pub fn matrix_size(&self) -> Option<usize> {
        self.realization.as_ref().map(|r| r.n)
    }

    /// Structure-constant entries `(i, j, [b_i, b_j])` for `i < j`, zero brackets omitted.
    pub fn structure_constants(&self) -> Vec<(usize, usize, Vector)> {
        let mut out = Vec::new();
        for i in 0..self.dim {
            for j in i + 1..self.dim {
                let c = self.basis_bracket(i, j);
                if !is_zero_vector(c) {
                    out.push((i, j, c.clone()));
                }
            }
        }
        out
    }

    /// The same algebra with the realization forgotten.
    pub fn to_structure_mode(&self) -> LieAlgebra {
        LieAlgebra {
            dim: self.dim,
            table: self.table.clone(),
            realization: None,
        }
    }

    pub fn unit(&self, i: usize) -> Vector {
        let mut v = vec![Rational::ZERO; self.dim];
        v[i] = Rational::ONE;
        v
    }

    pub fn zero_vector(&self) -> Vector {
        vec![Rational::ZERO; self.dim]
    }

    pub fn basis_bracket(&self, i: usize, j: usize) -> &Vector {
        &self.table[i * self.dim + j]
    }

    fn bracket_unchecked(&self, x: &[Rational], y: &[Rational]) -> Vector {
        let mut out = self.zero_vector();
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() || i == j {
                    continue;
                }
                let c = self.basis_bracket(i, j);
                if is_zero_vector(c) {
                    continue;
                }
                let f = xi * yj;
                for (o, ck) in out.iter_mut().zip(c) {
                    if !ck.is_zero() {
                        *o += &f * ck;
                    }
                }
            }
        }
        out
    }

    pub fn bracket(&self, x: &[Rational], y: &[Rational]) -> Result<Vector> {
        ensure_len(self.dim, x.len())?;
        ensure_len(self.dim, y.len())?;
        Ok(self.bracket_unchecked(x, y))
    }

    /// Matrix of `y ↦ [x, y]` in the algebra basis.
    pub fn ad(&self, x: &[Rational]) -> Result<QMatrix> {
        ensure_len(self.dim, x.len())?;
        let columns: Vec<Vector> = (0..self.dim)
            .map(|j| self.bracket_unchecked(x, &self.unit(j)))
            .collect();
        QMatrix::from_columns(self.dim, &columns)
    }

    fn ad_basis(&self, i: usize) -> QMatrix {
        let columns: Vec<Vector> = (0..self.dim).map(|j| self.basis_bracket(i, j).clone()).collect();
        QMatrix::from_columns(self.dim, &columns).expect("square table")
    }

    /// Matrix realization of a coordinate vector (matrix mode only).
    pub fn realize(&self, x: &[Rational]) -> Result<QMatrix> {
        let real = self.realization.as_ref().ok_or(Error::MatrixModeRequired)?;
        ensure_len(self.dim, x.len())?;
        Ok(real.realize(x))
    }

    /// Coordinates of a matrix lying in the realized span.
    pub fn coordinates_of_matrix(&self, m: &QMatrix) -> Result<Option<Vector>> {
        let real = self.realization.as_ref().ok_or(Error::MatrixModeRequired)?;
        Ok(real.coordinates(m))
    }

    /// Span of all `[a, b]` with `a ∈ left`, `b ∈ right`.
    pub fn bracket_span(&self, left: &Subspace, right: &Subspace) -> Subspace {
        let mut vectors = Vec::new();
        for a in left.basis() {
            for b in right.basis() {
                let c = self.bracket_unchecked(a, b);
                if !is_zero_vector(&c) {
                    vectors.push(c);
                }
            }
        }
        Subspace::span(self.dim, &vectors)
    }

    pub fn full_space(&self) -> Subspace {
        Subspace::full(self.dim)
    }

    pub fn derived_algebra(&self) -> Ideal<'_> {
        let vectors: Vec<Vector> = (0..self.dim)
            .flat_map(|i| (i + 1..self.dim).map(move |j| (i, j)))
            .map(|(i, j)| self.basis_bracket(i, j).clone())
            .collect();
        Ideal {
            parent: self,
            subspace: Subspace::span(self.dim, &vectors),
        }
    }

    /// Derived series `V ⊇ [V,V] ⊇ …` of a subalgebra, until it stabilizes.
    pub fn derived_series(&self, start: &Subspace) -> Vec<Subspace> {
        let mut series = vec![start.clone()];
        loop {
            let last = series.last().expect("nonempty");
            let next = self.bracket_span(last, last);
            if next == *last {
                return series;
            }
            let done = next.is_zero();
            series.push(next);
            if done {
                return series;
            }
        }
    }

    pub fn is_solvable(&self) -> bool {
        self.subspace_is_solvable(&self.full_space())
    }

    pub fn subspace_is_solvable(&self, s: &Subspace) -> bool {
        self.derived_series(s).last().is_some_and(Subspace::is_zero)
    }

    /// Gram matrix of the Killing form `κ(b_i, b_j) = tr(ad b_i · ad b_j)`.
    pub fn killing_gram(&self) -> QMatrix {
        let ads: Vec<QMatrix> = (0..self.dim).map(|i| self.ad_basis(i)).collect();
        let mut gram = QMatrix::zeros(self.dim, self.dim);
        for i in 0..self.dim {
            for j in i..self.dim {
                let k = ads[i].trace_of_product(&ads[j]);
                gram[(j, i)] = k.clone();
                gram[(i, j)] = k;
            }
        }
        gram
    }

    pub fn killing_form(&self, x: &[Rational], y: &[Rational]) -> Result<Rational> {
        ensure_len(self.dim, x.len())?;
        ensure_len(self.dim, y.len())?;
        let gram = self.killing_gram();
        Ok(dot(x, &gram.mul_vec(y)))
    }

    /// Solvable radical as the Killing-orthogonal complement of `[g, g]`.
    pub fn solvable_radical(&self) -> Ideal<'_> {
        let derived = self.derived_algebra().subspace;
        let gram = self.killing_gram();
        if derived.is_zero() {
            return Ideal {
                parent: self,
                subspace: self.full_space(),
            };
        }
        let rows: Vec<Vector> = derived.basis().iter().map(|d| gram.transpose().mul_vec(d)).collect();
        let constraint = QMatrix::from_rows(rows).expect("uniform rows");
        Ideal {
            parent: self,
            subspace: kernel(&constraint),
        }
    }

    pub fn center(&self) -> Ideal<'_> {
        let mut stacked = QMatrix::zeros(self.dim * self.dim, self.dim);
        for i in 0..self.dim {
            // row block i: y ↦ [b_i, y]
            for j in 0..self.dim {
                for (k, c) in self.basis_bracket(i, j).iter().enumerate() {
                    stacked[(i * self.dim + k, j)] = c.clone();
                }
            }
        }
        Ideal {
            parent: self,
            subspace: kernel(&stacked),
        }
    }

    pub fn is_subalgebra(&self, s: &Subspace) -> bool {
        s.ambient_dim() == self.dim && self.bracket_span(s, s).is_subspace_of(s)
    }

    pub fn is_ideal(&self, s: &Subspace) -> bool {
        s.ambient_dim() == self.dim && self.bracket_span(&self.full_space(), s).is_subspace_of(s)
    }

    /// The subalgebra on `s` as an abstract algebra, in the echelon basis of `s`.
    pub fn subalgebra(&self, s: &Subspace) -> Result<LieAlgebra> {
        ensure_len(self.dim, s.ambient_dim())?;
        self.restrict_to_basis(s.basis())
    }

    /// Structure constants of `span(vectors)`, which must be independent and closed.
    pub fn restrict_to_basis(&self, vectors: &[Vector]) -> Result<LieAlgebra> {
        let k = vectors.len();
        let cols = QMatrix::from_columns(self.dim, vectors)?;
        if crate::linalg::rank(&cols) != k {
            return Err(Error::LinearlyDependentBasis);
        }
        let mut table = vec![vec![Rational::ZERO; k]; k * k];
        for i in 0..k {
            for j in i + 1..k {
                let c = self.bracket_unchecked(&vectors[i], &vectors[j]);
                let coords = crate::linalg::solve_linear(&cols, &c).ok_or(Error::NotClosed { i, j })?;
                table[j * k + i] = scale_vector(&coords, &Rational::from(-1));
                table[i * k + j] = coords;
            }
        }
        Ok(LieAlgebra {
            dim: k,
            table,
            realization: None,
        })
    }

    /// Quotient by an ideal, on the complement spanned by the ideal's
    /// non-pivot coordinates. Returns the quotient and those coordinates.
    pub fn quotient(&self, ideal: &Subspace) -> Result<(LieAlgebra, Vec<usize>)> {
        ensure_len(self.dim, ideal.ambient_dim())?;
        if !self.is_ideal(ideal) {
            return Err(Error::Invalid("quotient by a subspace that is not an ideal".into()));
        }
        let comp = ideal.standard_complement();
        let idx = comp.pivots().to_vec();
        let k = idx.len();
        let mut table = vec![vec![Rational::ZERO; k]; k * k];
        for (a, &i) in idx.iter().enumerate() {
            for (b, &j) in idx.iter().enumerate() {
                let reduced = ideal.reduce(self.basis_bracket(i, j));
                table[a * k + b] = idx.iter().map(|&c| reduced[c].clone()).collect();
            }
        }
        Ok((
            LieAlgebra {
                dim: k,
                table,
                realization: None,
            },
            idx,
        ))
    }

    /// Reorders the basis: new basis element `i` is old element `perm[i]`.
    pub fn permuted(&self, perm: &[usize]) -> Result<LieAlgebra> {
        ensure_len(self.dim, perm.len())?;
        let mut seen = vec![false; self.dim];
        for &p in perm {
            if p >= self.dim || std::mem::replace(&mut seen[p], true) {
                return Err(Error::Invalid("not a permutation".into()));
            }
        }
        match &self.realization {
            Some(r) => LieAlgebra::from_matrices(&perm.iter().map(|&p| r.basis[p].clone()).collect::<Vec<_>>()),
            None => {
                let d = self.dim;
                let mut table = vec![vec![Rational::ZERO; d]; d * d];
                for i in 0..d {
                    for j in 0..d {
                        let old = self.basis_bracket(perm[i], perm[j]);
                        table[i * d + j] = perm.iter().map(|&p| old[p].clone()).collect();
                    }
                }
                Ok(LieAlgebra {
                    dim: d,
                    table,
                    realization: None,
                })
            }
        }
    }

    /// Sends coordinates in this basis to coordinates in `self.permuted(perm)`.
    pub fn permute_coordinates(perm: &[usize], x: &[Rational]) -> Vector {
        perm.iter().map(|&p| x[p].clone()).collect()
    }

    pub fn combine(&self, vectors: &[Vector], coeffs: &[Rational]) -> Vector {
        combine(self.dim, vectors, coeffs)
    }
}

/// An ideal of a parent algebra, as a subspace of its coordinate space.
#[derive(Debug, Clone)]
pub struct Ideal<'g> {
    parent: &'g LieAlgebra,
    subspace: Subspace,
}

impl<'g> Ideal<'g> {
    /// Checks closure under bracketing with every basis element of `parent`.
    pub fn new(parent: &'g LieAlgebra, subspace: Subspace) -> Result<Self> {
        if !parent.is_ideal(&subspace) {
            return Err(Error::Invalid("subspace is not an ideal".into()));
        }
        Ok(Ideal { parent, subspace })
    }

    pub(crate) fn new_unchecked(parent: &'g LieAlgebra, subspace: Subspace) -> Self {
        Ideal { parent, subspace }
    }

    pub fn parent(&self) -> &'g LieAlgebra {
        self.parent
    }

    pub fn subspace(&self) -> &Subspace {
        &self.subspace
    }

    pub fn into_subspace(self) -> Subspace {
        self.subspace
    }

    pub fn dim(&self) -> usize {
        self.subspace.dim()
    }

    pub fn is_zero(&self) -> bool {
        self.subspace.is_zero()
    }

    pub fn contains(&self, x: &[Rational]) -> bool {
        x.len() == self.subspace.ambient_dim() && self.subspace.contains(x)
    }
}

impl PartialEq for Ideal<'_> {
    fn eq(&self, other: &Self) -> bool {
        std::ptr::eq(self.parent, other.parent) && self.subspace == other.subspace
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::linalg::{q, vector};

    #[test]
    fn sl2_from_matrices() {
        let g = fixtures::sl2();
        assert_eq!(g.dim(), 3);
        // basis (e, h, f)
        assert_eq!(
            g.bracket(&vector(&[0, 1, 0]), &vector(&[1, 0, 0])).unwrap(),
            vector(&[2, 0, 0])
        );
        assert_eq!(
            g.bracket(&vector(&[0, 1, 0]), &vector(&[0, 0, 1])).unwrap(),
            vector(&[0, 0, -2])
        );
        assert_eq!(
            g.bracket(&vector(&[1, 0, 0]), &vector(&[0, 0, 1])).unwrap(),
            vector(&[0, 1, 0])
        );
    }

    #[test]
    fn single_matrix_is_abelian() {
        let g = LieAlgebra::from_matrices(&[QMatrix::unit(2, 0, 0)]).unwrap();
        assert_eq!(g.dim(), 1);
        assert!(g.derived_algebra().is_zero());
    }

    #[test]
    fn open_span_is_rejected() {
        let err = LieAlgebra::from_matrices(&[QMatrix::unit(2, 0, 1), QMatrix::unit(2, 1, 0)]).unwrap_err();
        assert_eq!(err, Error::NotClosed { i: 0, j: 1 });
        let dup = LieAlgebra::from_matrices(&[QMatrix::unit(2, 0, 1), QMatrix::unit(2, 0, 1).scale(&q(2, 1))]);
        assert_eq!(dup.unwrap_err(), Error::LinearlyDependentBasis);
    }

    #[test]
    fn closure_completes_to_sl2() {
        let basis = LieAlgebra::lie_closure(&[QMatrix::unit(2, 0, 1), QMatrix::unit(2, 1, 0)]).unwrap();
        assert_eq!(basis.len(), 3);
        assert_eq!(basis[2], QMatrix::diag(&[q(1, 1), q(-1, 1)]));
        assert!(LieAlgebra::from_matrices(&basis).is_ok());
    }

    #[test]
    fn structure_constants_validate_jacobi() {
        // [x,y]=z, [y,z]=x, [z,x]=y  (so(3))
        let so3 = LieAlgebra::from_structure_constants(
            3,
            &[
                (0, 1, vector(&[0, 0, 1])),
                (1, 2, vector(&[1, 0, 0])),
                (2, 0, vector(&[0, 1, 0])),
            ],
        )
        .unwrap();
        assert!(!so3.is_solvable());
        let bad = LieAlgebra::from_structure_constants(3, &[(0, 1, vector(&[0, 0, 1])), (1, 2, vector(&[0, 1, 0]))]);
        assert_eq!(bad.unwrap_err(), Error::JacobiViolation { i: 0, j: 1, k: 2 });
        let clash = LieAlgebra::from_structure_constants(2, &[(0, 1, vector(&[1, 0])), (1, 0, vector(&[1, 0]))]);
        assert_eq!(clash.unwrap_err(), Error::NotAntisymmetric { i: 1, j: 0 });
    }

    #[test]
    fn ad_examples() {
        let g = fixtures::sl2();
        let h = vector(&[0, 1, 0]);
        assert_eq!(g.ad(&h).unwrap(), QMatrix::diag(&[q(2, 1), q(0, 1), q(-2, 1)]));
        let e = vector(&[1, 0, 0]);
        assert_eq!(g.ad(&e).unwrap().mul_vec(&vector(&[0, 0, 1])), h);
        let heis = fixtures::heisenberg();
        let z = heis.center().subspace().basis()[0].clone();
        assert!(heis.ad(&z).unwrap().is_zero());
        assert!(matches!(g.ad(&vector(&[1, 0])), Err(Error::DimensionMismatch { .. })));
    }

    #[test]
    fn derived_algebra_examples() {
        assert_eq!(fixtures::sl2().derived_algebra().dim(), 3);
        let borel = fixtures::borel2();
        // basis (h, e): [g,g] = span{e}
        assert_eq!(borel.derived_algebra().subspace().basis(), &[vector(&[0, 1])]);
        let abelian = LieAlgebra::from_structure_constants(2, &[]).unwrap();
        assert!(abelian.derived_algebra().is_zero());
    }

    #[test]
    fn killing_examples() {
        assert_eq!(
            fixtures::sl2().killing_gram(),
            QMatrix::from_ints(&[[0, 0, 4], [0, 8, 0], [4, 0, 0]])
        );
        assert!(fixtures::heisenberg().killing_gram().is_zero());
        assert!(LieAlgebra::from_structure_constants(2, &[])
            .unwrap()
            .killing_gram()
            .is_zero());
    }

    #[test]
    fn radical_examples() {
        assert!(fixtures::sl2().solvable_radical().is_zero());
        let gl2 = fixtures::gl2();
        let rad = gl2.solvable_radical();
        assert_eq!(rad.dim(), 1);
        let identity = gl2.coordinates_of_matrix(&QMatrix::identity(2)).unwrap().unwrap();
        assert!(rad.contains(&identity));
        let borel = fixtures::borel2();
        assert_eq!(borel.solvable_radical().dim(), 2);
    }

    #[test]
    fn center_examples() {
        assert!(fixtures::sl2().center().is_zero());
        let gl2 = fixtures::gl2();
        assert_eq!(gl2.center(), gl2.solvable_radical());
        let heis = fixtures::heisenberg();
        let z = heis.coordinates_of_matrix(&QMatrix::unit(3, 0, 2)).unwrap().unwrap();
        assert_eq!(heis.center().subspace(), &Subspace::span(3, &[z]));
    }

    #[test]
    fn solvability_examples() {
        assert!(fixtures::borel2().is_solvable());
        assert!(!fixtures::sl2().is_solvable());
        assert!(LieAlgebra::from_structure_constants(3, &[]).unwrap().is_solvable());
        assert!(fixtures::heisenberg().is_solvable());
    }

    #[test]
    fn quotient_by_radical_is_semisimple() {
        let gl2 = fixtures::gl2();
        let rad = gl2.solvable_radical();
        let (quot, idx) = gl2.quotient(rad.subspace()).unwrap();
        assert_eq!(quot.dim(), 3);
        assert_eq!(idx.len(), 3);
        assert_eq!(crate::linalg::rank(&quot.killing_gram()), 3);
    }

    #[test]
    fn permuted_basis_is_isomorphic() {
        let g = fixtures::sl2_ltimes_q2();
        let perm = [4, 2, 0, 3, 1];
        let p = g.permuted(&perm).unwrap();
        let (x, y) = (vector(&[1, 2, 0, -1, 3]), vector(&[0, 1, -2, 1, 1]));
        let lhs = p
            .bracket(
                &LieAlgebra::permute_coordinates(&perm, &x),
                &LieAlgebra::permute_coordinates(&perm, &y),
            )
            .unwrap();
        assert_eq!(lhs, LieAlgebra::permute_coordinates(&perm, &g.bracket(&x, &y).unwrap()));
        let ps = g.to_structure_mode().permuted(&perm).unwrap();
        assert_eq!(ps.structure_constants(), p.structure_constants());
    }
}
