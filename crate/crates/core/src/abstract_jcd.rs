//! Abstract Jordan-Chevalley decomposition of elements of `[g, g]`.
//!
//! With a Levi decomposition `g = s ⋉ r` and `n = [g, r]`, an element
//! `x ∈ [g, g] = s ⊕ n` splits as `x = a + r` (`a ∈ s`, `r ∈ n`). The
//! Jordan decomposition `a = s + n` inside the semisimple `s` is transported
//! from matrices. Writing `n_* = [s, n]` and `n_0 = ker(ad s|_n)`, the unique
//! `b ∈ n_*` with `[x, b] = [s, r]` yields
//!
//! ```text
//! [s + b, n + r − b] = 0.
//! ```
//!
//! That commuting pair need not be the decomposition: `s + b` can fail to be
//! semisimple once `[n_*, n_*]` meets `n_0` (see `sl2_ltimes_heisenberg5`).
//! The semisimple part is therefore obtained by conjugation instead. Inner
//! automorphisms `exp(ad m)`, `m ∈ n_*`, applied layer by layer along the lower
//! central series of `n`, move `x` to `s + n + r'` with `[s, r'] = 0`. There
//! `s` is the semisimple part, and pulling it back gives `S`. The difference
//! `S − (s + b)` lies in `ker(ad x) ∩ n` and is reported as the correction.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{ensure_len, invariant, DerivedMembershipWitness, Error, Result};
use crate::levi::{levi_decomposition, LeviDecomposition};
use crate::lie::LieAlgebra;
use crate::linalg::{
    add_vectors, dot, is_zero_vector, kernel, rank, scale_vector, solve_linear, sub_vectors, QMatrix, Rational,
    Subspace, Vector,
};
use crate::matrix_jcd::{is_nilpotent_matrix, is_semisimple_matrix, matrix_jordan_chevalley};
use crate::reps::{check_compatibility, Representation};
use crate::sample;

/// Intermediate quantities of the construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JcdInternals {
    /// Levi component of `x`.
    pub a: Vector,
    /// `[g, r]` component of `x`.
    pub r: Vector,
    /// Semisimple part of `a` inside the Levi subalgebra.
    pub s: Vector,
    /// Nilpotent part of `a` inside the Levi subalgebra.
    pub n: Vector,
    /// Solution of `[x, b] = [s, r]` in `n_*`.
    pub b: Vector,
    pub n0: Subspace,
    pub nstar: Subspace,
    /// `[g, r]`.
    pub nilpotent_ideal: Subspace,
    /// `S − (s + b)`; zero whenever `s + b` is already semisimple.
    pub correction: Vector,
    /// `m_1, …, m_k ∈ n_*` with `exp(ad m_k)⋯exp(ad m_1) x = s + n + r'`, `[s, r'] = 0`.
    pub conjugators: Vec<Vector>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AbstractJordanPair {
    pub element: Vector,
    pub semisimple: Vector,
    pub nilpotent: Vector,
    pub internals: JcdInternals,
}

/// A functional vanishing on `[g, g]` but not on `x`, if `x ∉ [g, g]`.
pub fn derived_membership_witness(g: &LieAlgebra, x: &[Rational]) -> Result<Option<DerivedMembershipWitness>> {
    ensure_len(g.dim(), x.len())?;
    let derived = g.derived_algebra();
    if derived.contains(x) {
        return Ok(None);
    }
    let annihilator = if derived.is_zero() {
        g.full_space()
    } else {
        kernel(&QMatrix::from_rows(derived.subspace().basis().to_vec())?)
    };
    let witness = annihilator
        .basis()
        .iter()
        .map(|phi| (phi, dot(phi, x)))
        .find(|(_, v)| !v.is_zero())
        .map(|(phi, value)| DerivedMembershipWitness {
            functional: phi.clone(),
            value,
        });
    invariant(witness.is_some(), || "no functional separates x from [g, g]".into())?;
    Ok(witness)
}

/// `x = a + r` with `a` in the Levi subalgebra and `r ∈ [g, r]`.
pub fn split_against_levi(ld: &LeviDecomposition<'_>, x: &[Rational]) -> Result<(Vector, Vector)> {
    let g = ld.algebra();
    if let Some(w) = derived_membership_witness(g, x)? {
        return Err(Error::NotInDerivedAlgebra(w));
    }
    let levi = ld.levi().basis();
    let nil = ld.nilpotent_ideal().subspace().basis();
    let columns: Vec<Vector> = levi.iter().chain(nil).cloned().collect();
    if columns.is_empty() {
        return Ok((g.zero_vector(), g.zero_vector()));
    }
    let m = QMatrix::from_columns(g.dim(), &columns)?;
    let c = solve_linear(&m, x)
        .ok_or_else(|| Error::InternalInvariantViolation("element of [g, g] outside s ⊕ n".into()))?;
    let a = g.combine(levi, &c[..levi.len()]);
    let r = g.combine(nil, &c[levi.len()..]);
    Ok((a, r))
}

/// Jordan decomposition of `a` inside the Levi subalgebra, transported from
/// the natural realization (matrix mode) or from `ad` (structure mode).
pub fn jordan_in_levi(ld: &LeviDecomposition<'_>, a: &[Rational]) -> Result<(Vector, Vector)> {
    let g = ld.algebra();
    ensure_len(g.dim(), a.len())?;
    if !ld.levi().contains(a) {
        return Err(Error::Invalid("element is not in the Levi subalgebra".into()));
    }
    let s = if g.is_matrix_mode() {
        let pair = matrix_jordan_chevalley(&g.realize(a)?)?;
        g.coordinates_of_matrix(&pair.semisimple)?.ok_or_else(|| {
            Error::InternalInvariantViolation("semisimple part of a Levi element leaves the realized algebra".into())
        })?
    } else {
        let pair = matrix_jordan_chevalley(&g.ad(a)?)?;
        let levi = ld.levi().basis();
        let columns = levi
            .iter()
            .map(|l| Ok(g.ad(l)?.into_entries()))
            .collect::<Result<Vec<_>>>()?;
        let m = QMatrix::from_columns(g.dim() * g.dim(), &columns)?;
        let c = solve_linear(&m, pair.semisimple.entries()).ok_or_else(|| {
            Error::InternalInvariantViolation("semisimple part of ad(a) is not ad of a Levi element".into())
        })?;
        g.combine(levi, &c)
    };
    invariant(ld.levi().contains(&s), || {
        "semisimple part of a Levi element leaves the Levi subalgebra".into()
    })?;
    let n = sub_vectors(a, &s);
    Ok((s, n))
}

/// `n_0 = ker(ad s|_n)` and `n_* = [s, n]`; complementary when `s` is semisimple.
pub fn weight_split(ld: &LeviDecomposition<'_>, s: &[Rational]) -> Result<(Subspace, Subspace)> {
    let g = ld.algebra();
    ensure_len(g.dim(), s.len())?;
    let nil = ld.nilpotent_ideal().subspace();
    let images = nil
        .basis()
        .iter()
        .map(|v| g.bracket(s, v))
        .collect::<Result<Vec<_>>>()?;
    let nstar = Subspace::span(g.dim(), &images);
    let n0 = if nil.is_zero() {
        Subspace::zero(g.dim())
    } else {
        let coords = images
            .iter()
            .map(|v| nil.coordinates_in(v))
            .collect::<Option<Vec<_>>>()
            .ok_or_else(|| Error::InternalInvariantViolation("[s, n] leaves n".into()))?;
        let restricted = QMatrix::from_columns(nil.dim(), &coords)?;
        let vectors: Vec<Vector> = kernel(&restricted).basis().iter().map(|c| nil.combine(c)).collect();
        Subspace::span(g.dim(), &vectors)
    };
    invariant(
        n0.intersect(&nstar)?.is_zero() && n0.dim() + nstar.dim() == nil.dim(),
        || "kernel and image of ad s on n are not complementary".into(),
    )?;
    Ok((n0, nstar))
}

/// The unique `b ∈ n_*` with `[x, b] = [s, r]`.
pub fn solve_commutator_equation(
    ld: &LeviDecomposition<'_>,
    x: &[Rational],
    s: &[Rational],
    r: &[Rational],
    nstar: &Subspace,
) -> Result<Vector> {
    let g = ld.algebra();
    let rhs = g.bracket(s, r)?;
    invariant(nstar.contains(&rhs), || "[s, r] is not in n_*".into())?;
    if nstar.is_zero() {
        return Ok(g.zero_vector());
    }
    let columns = nstar
        .basis()
        .iter()
        .map(|w| g.bracket(x, w))
        .collect::<Result<Vec<_>>>()?;
    let m = QMatrix::from_columns(g.dim(), &columns)?;
    invariant(rank(&m) == nstar.dim(), || "ad x is not injective on n_*".into())?;
    let beta = solve_linear(&m, &rhs)
        .ok_or_else(|| Error::InternalInvariantViolation("[x, b] = [s, r] has no solution in n_*".into()))?;
    Ok(nstar.combine(&beta))
}

/// `exp(ad m) y`; `ad m` must be nilpotent.
pub fn exp_ad(g: &LieAlgebra, m: &[Rational], y: &[Rational]) -> Result<Vector> {
    let mut acc = y.to_vec();
    let mut term = y.to_vec();
    for k in 1..=g.dim() + 1 {
        term = scale_vector(&g.bracket(m, &term)?, &Rational::new(1, k as i64));
        if is_zero_vector(&term) {
            return Ok(acc);
        }
        acc = add_vectors(&acc, &term);
    }
    Err(Error::InternalInvariantViolation("ad m is not nilpotent".into()))
}

/// Semisimple part of `x = s + n + r` and the conjugators that centralize
/// its `n`-component against `s`.
///
/// Each round solves `[s + n, m] = P_* r` for `m ∈ n_*` (`ad(s + n)` is
/// invertible there) and replaces `x` by `exp(ad m) x`. If `P_* r` lies in the
/// `k`-th term of the lower central series of `n`, so does `m`, and the new
/// `P_* r` lies one term deeper; the loop ends once `P_* r = 0`.
pub fn centralizing_conjugation(
    ld: &LeviDecomposition<'_>,
    x: &[Rational],
    s: &[Rational],
    n: &[Rational],
    n0: &Subspace,
    nstar: &Subspace,
) -> Result<(Vector, Vec<Vector>)> {
    let g = ld.algebra();
    let mut conjugators = Vec::new();
    if nstar.is_zero() {
        return Ok((s.to_vec(), conjugators));
    }
    let levi_part = add_vectors(s, n);
    let split: Vec<Vector> = nstar.basis().iter().chain(n0.basis()).cloned().collect();
    let split = QMatrix::from_columns(g.dim(), &split)?;
    let images = nstar
        .basis()
        .iter()
        .map(|w| g.bracket(&levi_part, w))
        .collect::<Result<Vec<_>>>()?;
    let ad_levi = QMatrix::from_columns(g.dim(), &images)?;

    let mut y = x.to_vec();
    for _ in 0..=ld.nilpotent_ideal().dim() {
        let r = sub_vectors(&y, &levi_part);
        let c = solve_linear(&split, &r)
            .ok_or_else(|| Error::InternalInvariantViolation("n-component of a conjugate left n".into()))?;
        let r_star = nstar.combine(&c[..nstar.dim()]);
        if is_zero_vector(&r_star) {
            let mut semisimple = s.to_vec();
            for m in conjugators.iter().rev() {
                semisimple = exp_ad(g, &scale_vector(m, &Rational::from(-1)), &semisimple)?;
            }
            return Ok((semisimple, conjugators));
        }
        let beta = solve_linear(&ad_levi, &r_star)
            .ok_or_else(|| Error::InternalInvariantViolation("ad(s + n) is not invertible on n_*".into()))?;
        let m = nstar.combine(&beta);
        y = exp_ad(g, &m, &y)?;
        conjugators.push(m);
    }
    Err(Error::InternalInvariantViolation(
        "conjugation did not centralize within the nilpotency class".into(),
    ))
}

/// Pipeline with a fixed Levi decomposition, reusable across elements.
#[derive(Debug, Clone)]
pub struct Decomposer<'g> {
    levi: LeviDecomposition<'g>,
}

impl<'g> Decomposer<'g> {
    pub fn new(g: &'g LieAlgebra) -> Result<Self> {
        Ok(Decomposer {
            levi: levi_decomposition(g)?,
        })
    }

    pub fn from_levi(levi: LeviDecomposition<'g>) -> Self {
        Decomposer { levi }
    }

    pub fn levi(&self) -> &LeviDecomposition<'g> {
        &self.levi
    }

    pub fn decompose(&self, x: &[Rational]) -> Result<AbstractJordanPair> {
        let ld = &self.levi;
        let g = ld.algebra();
        let (a, r) = split_against_levi(ld, x)?;
        let (s, n) = jordan_in_levi(ld, &a)?;
        let (n0, nstar) = weight_split(ld, &s)?;
        let b = solve_commutator_equation(ld, x, &s, &r, &nstar)?;

        let (semisimple, conjugators) = centralizing_conjugation(ld, x, &s, &n, &n0, &nstar)?;
        let nilpotent = sub_vectors(x, &semisimple);
        let correction = sub_vectors(&semisimple, &add_vectors(&s, &b));
        invariant(
            ld.nilpotent_ideal().contains(&correction) && is_zero_vector(&g.bracket(x, &correction)?),
            || "correction to s + b is not in ker(ad x) ∩ n".into(),
        )?;

        invariant(add_vectors(&semisimple, &nilpotent) == x, || "S + N != x".into())?;
        invariant(is_zero_vector(&g.bracket(&semisimple, &nilpotent)?), || {
            "[S, N] != 0".into()
        })?;
        let derived = ld.derived();
        invariant(derived.contains(&semisimple) && derived.contains(&nilpotent), || {
            "S or N outside [g, g]".into()
        })?;
        if g.is_matrix_mode() {
            let oracle = matrix_jordan_chevalley(&g.realize(x)?)?;
            invariant(
                g.realize(&semisimple)? == oracle.semisimple && g.realize(&nilpotent)? == oracle.nilpotent,
                || "realization disagrees with the matrix Jordan-Chevalley decomposition".into(),
            )?;
        }

        Ok(AbstractJordanPair {
            element: x.to_vec(),
            semisimple,
            nilpotent,
            internals: JcdInternals {
                a,
                r,
                s,
                n,
                b,
                n0,
                nstar,
                nilpotent_ideal: ld.nilpotent_ideal().subspace().clone(),
                correction,
                conjugators,
            },
        })
    }
}

/// Computes the abstract Jordan-Chevalley decomposition of `x ∈ [g, g]`.
pub fn abstract_jordan_chevalley(g: &LieAlgebra, x: &[Rational]) -> Result<AbstractJordanPair> {
    ensure_len(g.dim(), x.len())?;
    if let Some(w) = derived_membership_witness(g, x)? {
        return Err(Error::NotInDerivedAlgebra(w));
    }
    Decomposer::new(g)?.decompose(x)
}

/// Matrix of `b ↦ P[x, b]` on `n_*`, where `P` projects `n = n_0 ⊕ n_*` onto `n_*`.
pub fn projected_bracket_operator(g: &LieAlgebra, pair: &AbstractJordanPair) -> Result<QMatrix> {
    let JcdInternals { n0, nstar, .. } = &pair.internals;
    let k = nstar.dim();
    let split: Vec<Vector> = nstar.basis().iter().chain(n0.basis()).cloned().collect();
    let mut op = QMatrix::zeros(k, k);
    if k == 0 {
        return Ok(op);
    }
    let basis = QMatrix::from_columns(g.dim(), &split)?;
    for (j, w) in nstar.basis().iter().enumerate() {
        let image = g.bracket(&pair.element, w)?;
        let c = solve_linear(&basis, &image)
            .ok_or_else(|| Error::InternalInvariantViolation("[x, n_*] leaves n".into()))?;
        for i in 0..k {
            op[(i, j)] = c[i].clone();
        }
    }
    Ok(op)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RepresentationCheck {
    pub descriptor: String,
    pub dim: usize,
    pub sum: bool,
    pub commute: bool,
    pub semisimple_image: bool,
    pub nilpotent_image: bool,
}

impl RepresentationCheck {
    pub fn passed(&self) -> bool {
        self.sum && self.commute && self.semisimple_image && self.nilpotent_image
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SampleCheck {
    pub samples: usize,
    pub passed: usize,
}

impl SampleCheck {
    pub fn ok(&self) -> bool {
        self.samples == self.passed
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub sum: bool,
    pub commutation: bool,
    pub semisimple_in_derived: bool,
    pub nilpotent_in_derived: bool,
    pub representations: Vec<RepresentationCheck>,
    /// Images of `n + b` are nilpotent for random `b ∈ [g, r]`.
    pub nilpotent_shift_samples: SampleCheck,
    /// Images of `s + b` are semisimple for random `b ∈ n_*`. This probes the
    /// construction rather than the pair and fails on algebras where
    /// `[n_*, n_*]` meets `n_0`, so it is left out of [`Self::all_passed`].
    pub semisimple_shift_samples: SampleCheck,
    /// The projected bracket operator on `n_*` is invertible.
    pub projected_operator_invertible: bool,
}

impl VerificationReport {
    pub fn all_passed(&self) -> bool {
        self.sum
            && self.commutation
            && self.semisimple_in_derived
            && self.nilpotent_in_derived
            && self.representations.iter().all(RepresentationCheck::passed)
            && self.nilpotent_shift_samples.ok()
            && self.projected_operator_invertible
    }
}

#[derive(Debug, Clone, Copy)]
pub struct VerifyOptions {
    pub samples: usize,
    pub seed: u64,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions { samples: 10, seed: 0 }
    }
}

/// Checks a decomposition against its defining properties and against the
/// given representations. Failures are reported, never raised, except for
/// dimension errors.
pub fn verify_decomposition(
    g: &LieAlgebra,
    pair: &AbstractJordanPair,
    reps: &[Representation<'_>],
    options: VerifyOptions,
) -> Result<VerificationReport> {
    let (x, s_part, n_part) = (&pair.element, &pair.semisimple, &pair.nilpotent);
    ensure_len(g.dim(), x.len())?;
    ensure_len(g.dim(), s_part.len())?;
    ensure_len(g.dim(), n_part.len())?;
    let derived = g.derived_algebra();

    let representations = reps
        .iter()
        .map(|rep| {
            let (px, ps, pn) = (rep.apply(x)?, rep.apply(s_part)?, rep.apply(n_part)?);
            Ok(RepresentationCheck {
                descriptor: rep.descriptor().to_string(),
                dim: rep.target_dim(),
                sum: &ps + &pn == px,
                commute: ps.commutator(&pn).is_zero(),
                semisimple_image: is_semisimple_matrix(&ps)?,
                nilpotent_image: is_nilpotent_matrix(&pn)?,
            })
        })
        .collect::<Result<Vec<_>>>()?;

    let mut rng = ChaCha8Rng::seed_from_u64(options.seed);
    let int = &pair.internals;
    let mut nil_ok = 0;
    let mut ss_ok = 0;
    for _ in 0..options.samples {
        let b = sample::element_of(&mut rng, &int.nilpotent_ideal);
        let shifted = add_vectors(&int.n, &b);
        if reps
            .iter()
            .map(|rep| is_nilpotent_matrix(&rep.apply(&shifted)?))
            .collect::<Result<Vec<_>>>()?
            .into_iter()
            .all(|ok| ok)
        {
            nil_ok += 1;
        }
        let b = sample::element_of(&mut rng, &int.nstar);
        let shifted = add_vectors(&int.s, &b);
        if reps
            .iter()
            .map(|rep| is_semisimple_matrix(&rep.apply(&shifted)?))
            .collect::<Result<Vec<_>>>()?
            .into_iter()
            .all(|ok| ok)
        {
            ss_ok += 1;
        }
    }

    let projected_operator_invertible = int.nstar.is_zero()
        || (g.dim() == int.nstar.ambient_dim()
            && projected_bracket_operator(g, pair).is_ok_and(|op| !op.determinant().is_zero()));

    Ok(VerificationReport {
        sum: add_vectors(s_part, n_part) == *x,
        commutation: is_zero_vector(&g.bracket(s_part, n_part)?),
        semisimple_in_derived: derived.contains(s_part),
        nilpotent_in_derived: derived.contains(n_part),
        representations,
        nilpotent_shift_samples: SampleCheck {
            samples: options.samples,
            passed: nil_ok,
        },
        semisimple_shift_samples: SampleCheck {
            samples: options.samples,
            passed: ss_ok,
        },
        projected_operator_invertible,
    })
}

/// Convenience: does `check_compatibility` hold for every representation?
pub fn compatible_with_all(reps: &[Representation<'_>], pair: &AbstractJordanPair) -> Result<bool> {
    for rep in reps {
        if !check_compatibility(rep, &pair.element, &pair.semisimple, &pair.nilpotent)? {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::linalg::vector;

    #[test]
    fn split_examples() {
        let g = fixtures::sl2_ltimes_q2();
        let ld = levi_decomposition(&g).unwrap();
        // basis (e, h, f, E13, E23); the Levi factor here is the sl2 block itself
        let (a, r) = split_against_levi(&ld, &vector(&[0, 1, 0, 1, 0])).unwrap();
        assert_eq!((a, r), (vector(&[0, 1, 0, 0, 0]), vector(&[0, 0, 0, 1, 0])));
        let (a, r) = split_against_levi(&ld, &vector(&[2, 0, -1, 0, 0])).unwrap();
        assert_eq!((a, r), (vector(&[2, 0, -1, 0, 0]), vector(&[0; 5])));

        let gl2 = fixtures::gl2();
        let ld = levi_decomposition(&gl2).unwrap();
        let err = split_against_levi(&ld, &vector(&[1, 0, 0, 1])).unwrap_err();
        let Error::NotInDerivedAlgebra(w) = err else {
            panic!("expected NotInDerivedAlgebra")
        };
        assert!(!w.value.is_zero());
    }

    #[test]
    fn jordan_in_sl2() {
        let g = fixtures::sl2();
        let ld = levi_decomposition(&g).unwrap();
        let (h, e, zero) = (vector(&[0, 1, 0]), vector(&[1, 0, 0]), vector(&[0, 0, 0]));
        assert_eq!(jordan_in_levi(&ld, &h).unwrap(), (h.clone(), zero.clone()));
        assert_eq!(jordan_in_levi(&ld, &e).unwrap(), (zero.clone(), e.clone()));
        let he = vector(&[1, 1, 0]);
        assert_eq!(jordan_in_levi(&ld, &he).unwrap(), (he.clone(), zero.clone()));
        // structure mode transports through ad
        let gs = g.to_structure_mode();
        let lds = levi_decomposition(&gs).unwrap();
        assert_eq!(jordan_in_levi(&lds, &he).unwrap(), (he, zero));
    }

    #[test]
    fn weight_split_examples() {
        let g = fixtures::sl2_ltimes_q2();
        let ld = levi_decomposition(&g).unwrap();
        let (n0, nstar) = weight_split(&ld, &vector(&[0, 1, 0, 0, 0])).unwrap();
        assert!(n0.is_zero());
        assert_eq!(&nstar, ld.nilpotent_ideal().subspace());
        let (n0, nstar) = weight_split(&ld, &vector(&[0; 5])).unwrap();
        assert_eq!(&n0, ld.nilpotent_ideal().subspace());
        assert!(nstar.is_zero());
        let gl2 = fixtures::gl2();
        let ld = levi_decomposition(&gl2).unwrap();
        let (n0, nstar) = weight_split(&ld, &vector(&[1, 0, 0, -1])).unwrap();
        assert!(n0.is_zero() && nstar.is_zero());
    }

    #[test]
    fn weight_split_with_central_weight_zero() {
        let g = fixtures::sl2_ltimes_heisenberg5();
        let ld = levi_decomposition(&g).unwrap();
        // basis (e, h, f, w1, w2, u1, u2, z)
        let (n0, nstar) = weight_split(&ld, &vector(&[0, 1, 0, 0, 0, 0, 0, 0])).unwrap();
        assert_eq!(n0, Subspace::span(8, &[vector(&[0, 0, 0, 0, 0, 0, 0, 1])]));
        assert_eq!(nstar.dim(), 4);
    }

    #[test]
    fn commutator_equation_examples() {
        let g = fixtures::sl2_ltimes_q2();
        let ld = levi_decomposition(&g).unwrap();
        let x = vector(&[0, 1, 0, 1, 0]);
        let (s, r) = (vector(&[0, 1, 0, 0, 0]), vector(&[0, 0, 0, 1, 0]));
        let nstar = ld.nilpotent_ideal().subspace().clone();
        let b = solve_commutator_equation(&ld, &x, &s, &r, &nstar).unwrap();
        assert_eq!(b, vector(&[0, 0, 0, 1, 0]));
        let zero = vector(&[0; 5]);
        let b = solve_commutator_equation(&ld, &r, &zero, &r, &Subspace::zero(5)).unwrap();
        assert_eq!(b, zero);
        let b = solve_commutator_equation(&ld, &s, &s, &zero, &nstar).unwrap();
        assert_eq!(b, zero);
    }

    #[test]
    fn pipeline_examples() {
        let sl2 = fixtures::sl2();
        let pair = abstract_jordan_chevalley(&sl2, &vector(&[1, 0, 0])).unwrap();
        assert_eq!(pair.semisimple, vector(&[0, 0, 0]));
        assert_eq!(pair.nilpotent, vector(&[1, 0, 0]));

        let g = fixtures::sl2_ltimes_q2();
        let x = vector(&[0, 1, 0, 1, 0]);
        let pair = abstract_jordan_chevalley(&g, &x).unwrap();
        assert_eq!(pair.semisimple, x);
        assert_eq!(pair.nilpotent, vector(&[0; 5]));

        let x = vector(&[1, 0, 0, 1, 0]);
        let pair = abstract_jordan_chevalley(&g, &x).unwrap();
        assert_eq!(pair.semisimple, vector(&[0; 5]));
        assert_eq!(pair.nilpotent, x);
    }

    #[test]
    fn necessity_examples() {
        let gl2 = fixtures::gl2();
        assert!(matches!(
            abstract_jordan_chevalley(&gl2, &vector(&[1, 0, 0, 1])),
            Err(Error::NotInDerivedAlgebra(_))
        ));
        let line = fixtures::line();
        assert!(matches!(
            abstract_jordan_chevalley(&line, &vector(&[1])),
            Err(Error::NotInDerivedAlgebra(_))
        ));
        assert!(matches!(
            abstract_jordan_chevalley(&line, &vector(&[1, 2])),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn verify_examples() {
        let sl2 = fixtures::sl2();
        let pair = abstract_jordan_chevalley(&sl2, &vector(&[1, 0, 0])).unwrap();
        let ad = Representation::adjoint(&sl2).unwrap();
        let report = verify_decomposition(&sl2, &pair, &[ad], VerifyOptions::default()).unwrap();
        assert!(report.all_passed(), "{report:?}");

        let g = fixtures::sl2_ltimes_q2();
        let pair = abstract_jordan_chevalley(&g, &vector(&[0, 1, 0, 1, 0])).unwrap();
        let nat = Representation::natural(&g).unwrap();
        // s + E23 = h + E23 has eigenvalues 1, −1, 0
        let shifted = nat.apply(&vector(&[0, 1, 0, 0, 1])).unwrap();
        assert!(is_semisimple_matrix(&shifted).unwrap());
        let report = verify_decomposition(&g, &pair, &[nat], VerifyOptions::default()).unwrap();
        assert!(report.all_passed(), "{report:?}");

        let zero = abstract_jordan_chevalley(&g, &vector(&[0; 5])).unwrap();
        let report = verify_decomposition(&g, &zero, &[], VerifyOptions::default()).unwrap();
        assert!(report.all_passed());
    }

    #[test]
    fn corrupted_pair_fails_verification() {
        let sl2 = fixtures::sl2();
        let x = vector(&[1, 1, 0]);
        let mut pair = abstract_jordan_chevalley(&sl2, &x).unwrap();
        pair.semisimple = vector(&[2, 1, 0]);
        pair.nilpotent = vector(&[-1, 0, 0]);
        let ad = Representation::adjoint(&sl2).unwrap();
        let report = verify_decomposition(&sl2, &pair, &[ad], VerifyOptions::default()).unwrap();
        assert!(!report.all_passed());
        assert!(report.sum && !report.commutation);
    }

    #[test]
    fn s_plus_b_need_not_be_semisimple() {
        // basis (e, h, f, w1, w2, u1, u2, z) with w1 = E01, u1 = E13, z = E03
        let g = fixtures::sl2_ltimes_heisenberg5();
        let nat = Representation::natural(&g).unwrap();
        let ld = levi_decomposition(&g).unwrap();
        let h = vector(&[0, 1, 0, 0, 0, 0, 0, 0]);
        let (n0, nstar) = weight_split(&ld, &h).unwrap();
        let b = vector(&[0, 0, 0, 1, 0, 1, 0, 0]);
        assert!(nstar.contains(&b));
        assert_eq!(n0.basis(), &[vector(&[0, 0, 0, 0, 0, 0, 0, 1])]);
        // h + E01 + E13 has eigenvalue 0 twice but a one-dimensional kernel
        assert!(!is_semisimple_matrix(&nat.apply(&add_vectors(&h, &b)).unwrap()).unwrap());

        let x = add_vectors(&h, &b);
        let pair = abstract_jordan_chevalley(&g, &x).unwrap();
        assert!(!is_zero_vector(&pair.internals.correction));
        assert!(n0.contains(&pair.internals.correction));
        let oracle = matrix_jordan_chevalley(&nat.apply(&x).unwrap()).unwrap();
        assert_eq!(nat.apply(&pair.semisimple).unwrap(), oracle.semisimple);
    }

    #[test]
    fn exp_ad_is_an_automorphism() {
        let g = fixtures::sl2_ltimes_heisenberg5();
        let m = vector(&[0, 0, 0, 1, -1, 2, 0, 3]);
        let (u, v) = (vector(&[1, 2, 0, 0, 1, 0, 0, 0]), vector(&[0, 1, -1, 2, 0, 0, 1, 0]));
        let lhs = exp_ad(&g, &m, &g.bracket(&u, &v).unwrap()).unwrap();
        let rhs = g
            .bracket(&exp_ad(&g, &m, &u).unwrap(), &exp_ad(&g, &m, &v).unwrap())
            .unwrap();
        assert_eq!(lhs, rhs);
        let back = exp_ad(&g, &scale_vector(&m, &Rational::from(-1)), &exp_ad(&g, &m, &u).unwrap()).unwrap();
        assert_eq!(back, u);
    }
}
