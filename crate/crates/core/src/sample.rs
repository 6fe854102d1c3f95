//! Random elements with small integer coordinates.

use rand::Rng;

use crate::lie::LieAlgebra;
use crate::linalg::{add_vectors, Rational, Subspace, Vector};

pub const COORD_BOUND: i64 = 3;

/// Coordinates drawn uniformly from the integers in `[-3, 3]`.
pub fn small_vector<R: Rng + ?Sized>(rng: &mut R, dim: usize) -> Vector {
    (0..dim)
        .map(|_| Rational::from(rng.gen_range(-COORD_BOUND..=COORD_BOUND)))
        .collect()
}

/// Random integer combination of the echelon basis of `s`.
pub fn element_of<R: Rng + ?Sized>(rng: &mut R, s: &Subspace) -> Vector {
    let coeffs = small_vector(rng, s.dim());
    s.combine(&coeffs)
}

/// `[u₁, v₁] + [u₂, v₂]` for small random `u_i, v_i`; always in `[g, g]`.
pub fn derived_element<R: Rng + ?Sized>(rng: &mut R, g: &LieAlgebra) -> Vector {
    let mut acc = g.zero_vector();
    for _ in 0..2 {
        let (u, v) = (small_vector(rng, g.dim()), small_vector(rng, g.dim()));
        acc = add_vectors(&acc, &g.bracket(&u, &v).expect("sized to the algebra"));
    }
    acc
}
