//! Finite-dimensional representations built from a small constructor language.

use std::fmt;
use std::str::FromStr;

use crate::error::{ensure_len, DerivedMembershipWitness, Error, Result};
use crate::lie::LieAlgebra;
use crate::linalg::{add_vectors, is_zero_vector, sub_vectors, QMatrix, Rational};
use crate::matrix_jcd::{is_nilpotent_matrix, is_semisimple_matrix};

/// Constructor expression for a representation.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum RepDescriptor {
    Natural,
    Adjoint,
    Dual(Box<RepDescriptor>),
    DirectSum(Box<RepDescriptor>, Box<RepDescriptor>),
    Tensor(Box<RepDescriptor>, Box<RepDescriptor>),
    /// Explicit images supplied by the caller.
    Custom(String),
}

impl RepDescriptor {
    pub fn dual(inner: RepDescriptor) -> Self {
        RepDescriptor::Dual(Box::new(inner))
    }

    pub fn sum(a: RepDescriptor, b: RepDescriptor) -> Self {
        RepDescriptor::DirectSum(Box::new(a), Box::new(b))
    }

    pub fn tensor(a: RepDescriptor, b: RepDescriptor) -> Self {
        RepDescriptor::Tensor(Box::new(a), Box::new(b))
    }

    /// Constructor nesting depth; leaves have depth zero.
    pub fn depth(&self) -> usize {
        match self {
            RepDescriptor::Natural | RepDescriptor::Adjoint | RepDescriptor::Custom(_) => 0,
            RepDescriptor::Dual(a) => 1 + a.depth(),
            RepDescriptor::DirectSum(a, b) | RepDescriptor::Tensor(a, b) => 1 + a.depth().max(b.depth()),
        }
    }

    /// Dimension of the module this descriptor builds over `g`, if buildable.
    pub fn target_dim(&self, g: &LieAlgebra) -> Option<usize> {
        match self {
            RepDescriptor::Natural => g.matrix_size(),
            RepDescriptor::Adjoint => Some(g.dim()),
            RepDescriptor::Dual(a) => a.target_dim(g),
            RepDescriptor::DirectSum(a, b) => Some(a.target_dim(g)? + b.target_dim(g)?),
            RepDescriptor::Tensor(a, b) => Some(a.target_dim(g)? * b.target_dim(g)?),
            RepDescriptor::Custom(_) => None,
        }
    }
}

impl fmt::Display for RepDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RepDescriptor::Natural => write!(f, "natural"),
            RepDescriptor::Adjoint => write!(f, "adjoint"),
            RepDescriptor::Dual(a) => write!(f, "dual({a})"),
            RepDescriptor::DirectSum(a, b) => write!(f, "sum({a},{b})"),
            RepDescriptor::Tensor(a, b) => write!(f, "tensor({a},{b})"),
            RepDescriptor::Custom(label) => write!(f, "custom:{label}"),
        }
    }
}

struct DescriptorParser<'a> {
    src: &'a str,
    pos: usize,
}

impl DescriptorParser<'_> {
    fn skip_ws(&mut self) {
        while self.src[self.pos..].starts_with(char::is_whitespace) {
            self.pos += 1;
        }
    }

    fn expect(&mut self, c: char) -> Result<()> {
        self.skip_ws();
        if self.src[self.pos..].starts_with(c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.error(&format!("expected '{c}'")))
        }
    }

    fn error(&self, what: &str) -> Error {
        Error::Invalid(format!(
            "representation descriptor {:?}: {what} at offset {}",
            self.src, self.pos
        ))
    }

    fn parse(&mut self) -> Result<RepDescriptor> {
        self.skip_ws();
        let start = self.pos;
        while self.src[self.pos..].starts_with(|c: char| c.is_ascii_alphanumeric() || c == '_') {
            self.pos += 1;
        }
        let word = &self.src[start..self.pos];
        match word {
            "natural" => Ok(RepDescriptor::Natural),
            "adjoint" => Ok(RepDescriptor::Adjoint),
            "dual" => {
                self.expect('(')?;
                let a = self.parse()?;
                self.expect(')')?;
                Ok(RepDescriptor::dual(a))
            }
            "sum" | "direct_sum" | "tensor" => {
                self.expect('(')?;
                let a = self.parse()?;
                self.expect(',')?;
                let b = self.parse()?;
                self.expect(')')?;
                Ok(if word == "tensor" {
                    RepDescriptor::tensor(a, b)
                } else {
                    RepDescriptor::sum(a, b)
                })
            }
            "" => Err(self.error("expected a constructor")),
            other => Err(self.error(&format!("unknown constructor {other:?}"))),
        }
    }
}

impl FromStr for RepDescriptor {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut p = DescriptorParser { src: s, pos: 0 };
        let d = p.parse()?;
        p.skip_ws();
        if p.pos != s.len() {
            return Err(p.error("trailing input"));
        }
        Ok(d)
    }
}

/// A homomorphism `g → gl(V)`, stored by the images of the basis of `g`.
#[derive(Debug, Clone)]
pub struct Representation<'g> {
    source: &'g LieAlgebra,
    descriptor: RepDescriptor,
    target_dim: usize,
    images: Vec<QMatrix>,
}

impl<'g> Representation<'g> {
    /// Wraps explicit images after checking the homomorphism property on all basis pairs.
    pub fn from_images(source: &'g LieAlgebra, descriptor: RepDescriptor, images: Vec<QMatrix>) -> Result<Self> {
        ensure_len(source.dim(), images.len())?;
        let target_dim = match images.first() {
            Some(m) => m.ensure_square()?,
            None => 0,
        };
        for m in &images {
            ensure_len(target_dim, m.ensure_square()?)?;
        }
        let rep = Representation {
            source,
            descriptor,
            target_dim,
            images,
        };
        rep.check_homomorphism()?;
        Ok(rep)
    }

    fn check_homomorphism(&self) -> Result<()> {
        let d = self.source.dim();
        for i in 0..d {
            for j in i + 1..d {
                let lhs = self.apply_unchecked(self.source.basis_bracket(i, j));
                if lhs != self.images[i].commutator(&self.images[j]) {
                    return Err(Error::NotAHomomorphism { i, j });
                }
            }
        }
        Ok(())
    }

    pub fn natural(g: &'g LieAlgebra) -> Result<Self> {
        let images = g.realization().ok_or(Error::NaturalRequiresMatrixMode)?.to_vec();
        Self::from_images(g, RepDescriptor::Natural, images)
    }

    pub fn adjoint(g: &'g LieAlgebra) -> Result<Self> {
        let images = (0..g.dim()).map(|i| g.ad(&g.unit(i))).collect::<Result<Vec<_>>>()?;
        Self::from_images(g, RepDescriptor::Adjoint, images)
    }

    /// Contragredient module: `x ↦ −ρ(x)ᵀ`.
    pub fn dual(&self) -> Result<Self> {
        let images = self.images.iter().map(|m| -&m.transpose()).collect();
        Self::from_images(self.source, RepDescriptor::dual(self.descriptor.clone()), images)
    }

    pub fn direct_sum(&self, other: &Representation<'g>) -> Result<Self> {
        self.same_source(other)?;
        let images = self
            .images
            .iter()
            .zip(&other.images)
            .map(|(a, b)| a.direct_sum(b))
            .collect();
        Self::from_images(
            self.source,
            RepDescriptor::sum(self.descriptor.clone(), other.descriptor.clone()),
            images,
        )
    }

    /// `x ↦ ρ₁(x) ⊗ I + I ⊗ ρ₂(x)`.
    pub fn tensor(&self, other: &Representation<'g>) -> Result<Self> {
        self.same_source(other)?;
        let (ia, ib) = (QMatrix::identity(self.target_dim), QMatrix::identity(other.target_dim));
        let images = self
            .images
            .iter()
            .zip(&other.images)
            .map(|(a, b)| &a.kron(&ib) + &ia.kron(b))
            .collect();
        Self::from_images(
            self.source,
            RepDescriptor::tensor(self.descriptor.clone(), other.descriptor.clone()),
            images,
        )
    }

    fn same_source(&self, other: &Representation<'g>) -> Result<()> {
        if std::ptr::eq(self.source, other.source) {
            Ok(())
        } else {
            Err(Error::Invalid("representations of different algebras".into()))
        }
    }

    pub fn source(&self) -> &'g LieAlgebra {
        self.source
    }

    pub fn descriptor(&self) -> &RepDescriptor {
        &self.descriptor
    }

    pub fn target_dim(&self) -> usize {
        self.target_dim
    }

    pub fn images(&self) -> &[QMatrix] {
        &self.images
    }

    fn apply_unchecked(&self, x: &[Rational]) -> QMatrix {
        let mut out = QMatrix::zeros(self.target_dim, self.target_dim);
        for (c, m) in x.iter().zip(&self.images) {
            if !c.is_zero() {
                out = &out + &m.scale(c);
            }
        }
        out
    }

    /// Image of a coordinate vector under the linear extension.
    pub fn apply(&self, x: &[Rational]) -> Result<QMatrix> {
        ensure_len(self.source.dim(), x.len())?;
        Ok(self.apply_unchecked(x))
    }
}

/// Builds the representation a descriptor names.
pub fn build_representation<'g>(g: &'g LieAlgebra, descriptor: &RepDescriptor) -> Result<Representation<'g>> {
    match descriptor {
        RepDescriptor::Natural => Representation::natural(g),
        RepDescriptor::Adjoint => Representation::adjoint(g),
        RepDescriptor::Dual(a) => build_representation(g, a)?.dual(),
        RepDescriptor::DirectSum(a, b) => build_representation(g, a)?.direct_sum(&build_representation(g, b)?),
        RepDescriptor::Tensor(a, b) => build_representation(g, a)?.tensor(&build_representation(g, b)?),
        RepDescriptor::Custom(label) => Err(Error::Invalid(format!(
            "custom representation {label:?} has no constructor; use Representation::from_images"
        ))),
    }
}

/// Test family: trees of depth at most `max_depth` over the available leaves
/// (`natural` in matrix mode, `adjoint` always) whose module dimension is at
/// most `max_dim`.
///
/// Sums and tensor products are taken over unordered pairs, duals are never
/// nested directly, and at depth two one operand is always a leaf.
pub fn representation_family<'g>(
    g: &'g LieAlgebra,
    max_depth: usize,
    max_dim: usize,
) -> Result<Vec<Representation<'g>>> {
    let mut leaves = Vec::new();
    if g.is_matrix_mode() {
        leaves.push(Representation::natural(g)?);
    }
    leaves.push(Representation::adjoint(g)?);
    let fits = |d: usize| d <= max_dim && d > 0;

    let mut levels: Vec<Vec<Representation<'g>>> = vec![leaves.into_iter().filter(|r| fits(r.target_dim)).collect()];
    for depth in 1..=max_depth {
        let prev = &levels[depth - 1];
        let leaves = &levels[0];
        let mut next = Vec::new();
        for (i, a) in prev.iter().enumerate() {
            if !matches!(a.descriptor, RepDescriptor::Dual(_)) {
                next.push(a.dual()?);
            }
            // depth 1 pairs leaves among themselves; deeper levels pair with a leaf
            let partners: Vec<&Representation<'g>> = if depth == 1 {
                prev[i..].iter().collect()
            } else {
                leaves.iter().collect()
            };
            for b in partners {
                if fits(a.target_dim + b.target_dim) {
                    next.push(a.direct_sum(b)?);
                }
                if fits(a.target_dim * b.target_dim) {
                    next.push(a.tensor(b)?);
                }
            }
        }
        levels.push(next);
    }
    Ok(levels.into_iter().flatten().collect())
}

/// Whether `(ρ(S), ρ(N))` is the matrix Jordan-Chevalley decomposition of `ρ(x)`.
pub fn check_compatibility(rep: &Representation<'_>, x: &[Rational], s: &[Rational], n: &[Rational]) -> Result<bool> {
    let (px, ps, pn) = (rep.apply(x)?, rep.apply(s)?, rep.apply(n)?);
    Ok(&ps + &pn == px && ps.commutator(&pn).is_zero() && is_semisimple_matrix(&ps)? && is_nilpotent_matrix(&pn)?)
}

/// The two abelian representations that rule out an abstract decomposition
/// of an element outside `[g, g]`: `y ↦ (φ(y))` on `Q` and `y ↦ φ(y)·E_12` on
/// `Q²`, for a functional `φ` vanishing on `[g, g]`.
///
/// The first forces `φ(N) = 0`, the second forces `φ(S) = 0`, while
/// `φ(S) + φ(N) = φ(x) ≠ 0`.
pub fn derived_obstruction<'g>(
    g: &'g LieAlgebra,
    witness: &DerivedMembershipWitness,
) -> Result<(Representation<'g>, Representation<'g>)> {
    ensure_len(g.dim(), witness.functional.len())?;
    let scalar = witness
        .functional
        .iter()
        .map(|c| QMatrix::from_vec(1, 1, vec![c.clone()]))
        .collect::<Result<Vec<_>>>()?;
    let nilpotent = witness
        .functional
        .iter()
        .map(|c| QMatrix::unit(2, 0, 1).scale(c))
        .collect();
    Ok((
        Representation::from_images(g, RepDescriptor::Custom("functional".into()), scalar)?,
        Representation::from_images(g, RepDescriptor::Custom("functional*E12".into()), nilpotent)?,
    ))
}

/// Checks a candidate pair against the obstruction representations; always
/// false for a genuine witness.
pub fn obstruction_admits(
    reps: &(Representation<'_>, Representation<'_>),
    x: &[Rational],
    s: &[Rational],
    n: &[Rational],
) -> Result<bool> {
    if !is_zero_vector(&sub_vectors(x, &add_vectors(s, n))) {
        return Ok(false);
    }
    Ok(check_compatibility(&reps.0, x, s, n)? && check_compatibility(&reps.1, x, s, n)?)
}
