//! Levi decomposition `g = s ⋉ r`.
//!
//! A vector-space lift of the semisimple quotient `g/r` is corrected step by
//! step along the derived series `r = r_0 ⊇ r_1 ⊇ … ⊇ r_m = 0`. At step `k`
//! the lift is closed under brackets modulo `r_k`; the correction
//! `y_a ∈ r_k` making it closed modulo `r_{k+1}` solves the linear system
//!
//! ```text
//! ρ_ab + [x_a, y_b] − [x_b, y_a] − Σ_l c_ab^l y_l ≡ 0   (mod r_{k+1})
//! ```
//!
//! where `[x_a, x_b] = Σ_l c_ab^l x_l + ρ_ab`. Levi's theorem guarantees a
//! solution exists.

use crate::error::{invariant, Error, Result};
use crate::lie::{Ideal, LieAlgebra};
use crate::linalg::{add_vectors, combine, rank, solve_linear, sub_vectors, QMatrix, Rational, Subspace, Vector};

#[derive(Debug, Clone)]
pub struct LeviDecomposition<'g> {
    algebra: &'g LieAlgebra,
    levi: Subspace,
    /// Lift of the quotient basis; spans `levi`.
    levi_lift: Vec<Vector>,
    radical: Ideal<'g>,
    nilpotent_ideal: Ideal<'g>,
    derived: Ideal<'g>,
}

impl<'g> LeviDecomposition<'g> {
    pub fn algebra(&self) -> &'g LieAlgebra {
        self.algebra
    }

    /// The Levi subalgebra `s`.
    pub fn levi(&self) -> &Subspace {
        &self.levi
    }

    /// Basis of `s` lifting the complement basis of `g/r`.
    pub fn levi_lift(&self) -> &[Vector] {
        &self.levi_lift
    }

    pub fn radical(&self) -> &Ideal<'g> {
        &self.radical
    }

    /// `n = [g, r]`.
    pub fn nilpotent_ideal(&self) -> &Ideal<'g> {
        &self.nilpotent_ideal
    }

    pub fn derived(&self) -> &Ideal<'g> {
        &self.derived
    }

    /// Re-checks every structural invariant of the decomposition.
    pub fn check_invariants(&self) -> Result<()> {
        let g = self.algebra;
        let (levi, rad, nil, der) = (
            &self.levi,
            self.radical.subspace(),
            self.nilpotent_ideal.subspace(),
            self.derived.subspace(),
        );
        invariant(levi.dim() + rad.dim() == g.dim(), || {
            format!("dim s ({}) + dim r ({}) != dim g ({})", levi.dim(), rad.dim(), g.dim())
        })?;
        invariant(levi.intersect(rad)?.is_zero(), || {
            "Levi subalgebra meets the radical".into()
        })?;
        invariant(g.is_subalgebra(levi), || "Levi subspace is not bracket-closed".into())?;
        let sub = g.subalgebra(levi)?;
        invariant(rank(&sub.killing_gram()) == levi.dim(), || {
            "Killing form of the Levi subalgebra is degenerate".into()
        })?;
        invariant(g.is_ideal(rad) && g.subspace_is_solvable(rad), || {
            "radical is not a solvable ideal".into()
        })?;
        invariant(g.is_ideal(nil) && nil.is_subspace_of(rad), || {
            "[g, r] is not an ideal inside r".into()
        })?;
        invariant(levi.sum(nil)? == *der && levi.dim() + nil.dim() == der.dim(), || {
            "[g, g] != s ⊕ [g, r]".into()
        })?;
        Ok(())
    }
}

/// Coordinates of `v ∈ r_k` in `r_k / r_{k+1}`, via the complement `w`.
fn project(next: &Subspace, w: &Subspace, v: &[Rational]) -> Result<Vector> {
    w.coordinates_in(&next.reduce(v))
        .ok_or_else(|| Error::InternalInvariantViolation("correction term left the current radical layer".into()))
}

pub fn levi_decomposition(g: &LieAlgebra) -> Result<LeviDecomposition<'_>> {
    let dim = g.dim();
    let radical = g.solvable_radical();
    let rad = radical.subspace().clone();
    let (quot, idx) = g.quotient(&rad)?;
    let s = quot.dim();

    let mut lift: Vec<Vector> = idx.iter().map(|&i| g.unit(i)).collect();

    let series = g.derived_series(&rad);
    invariant(series.last().is_some_and(Subspace::is_zero), || {
        "derived series of the radical does not reach zero".into()
    })?;

    for layer in series.windows(2) {
        let (current, next) = (&layer[0], &layer[1]);
        let reduced: Vec<Vector> = current.basis().iter().map(|v| next.reduce(v)).collect();
        let w = Subspace::span(dim, &reduced);
        let wd = w.dim();
        if s == 0 || wd == 0 {
            continue;
        }
        let pairs: Vec<(usize, usize)> = (0..s).flat_map(|a| (a + 1..s).map(move |b| (a, b))).collect();
        let mut system = QMatrix::zeros(pairs.len() * wd, s * wd);
        let mut rhs = vec![Rational::ZERO; pairs.len() * wd];

        for (p, &(a, b)) in pairs.iter().enumerate() {
            let c = quot.basis_bracket(a, b);
            let bracket = g.bracket(&lift[a], &lift[b])?;
            let rho = sub_vectors(&bracket, &combine(dim, &lift, c));
            let rho_coords = project(next, &w, &rho)?;
            for t in 0..wd {
                rhs[p * wd + t] = -&rho_coords[t];
            }
            for (t, wt) in w.basis().iter().enumerate() {
                // unknown y_b = w_t contributes [x_a, w_t]
                let col_b = project(next, &w, &g.bracket(&lift[a], wt)?)?;
                // unknown y_a = w_t contributes −[x_b, w_t]
                let col_a = project(next, &w, &g.bracket(&lift[b], wt)?)?;
                for u in 0..wd {
                    system[(p * wd + u, b * wd + t)] += &col_b[u];
                    system[(p * wd + u, a * wd + t)] -= &col_a[u];
                }
                // −Σ_l c_ab^l y_l, with y_l = w_t projecting to the unit vector e_t
                for (l, cl) in c.iter().enumerate() {
                    if !cl.is_zero() {
                        system[(p * wd + t, l * wd + t)] -= cl;
                    }
                }
            }
        }

        let z = solve_linear(&system, &rhs)
            .ok_or_else(|| Error::InternalInvariantViolation("Levi correction system is inconsistent".into()))?;
        for (a, x) in lift.iter_mut().enumerate() {
            let y = w.combine(&z[a * wd..(a + 1) * wd]);
            *x = add_vectors(x, &y);
        }
    }

    let levi = Subspace::span(dim, &lift);
    let nilpotent = g.bracket_span(&g.full_space(), &rad);
    let derived = g.derived_algebra();
    let ld = LeviDecomposition {
        algebra: g,
        levi,
        levi_lift: lift,
        radical,
        nilpotent_ideal: Ideal::new_unchecked(g, nilpotent),
        derived,
    };
    ld.check_invariants()?;
    Ok(ld)
}
