//! Jordan-Chevalley decomposition of a single rational matrix.
//!
//! The semisimple part is found without eigenvalues: with `m` the minimal
//! polynomial of `A` and `f` its squarefree part, Newton's iteration
//! `x ← x − f(x)·u(x)`, where `u·f' ≡ 1 (mod f)`, converges in
//! `Q[t]/(m)` to the root of `f` lying over `t`. Its value at `A` is the
//! semisimple part.

use serde::Serialize;

use crate::error::{invariant, Error, Result};
use crate::linalg::{minimal_polynomial, QMatrix, QPoly};

/// `A = semisimple + nilpotent`, with `semisimple = witness_poly(A)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct JordanPair {
    pub semisimple: QMatrix,
    pub nilpotent: QMatrix,
    /// Reduced modulo the minimal polynomial of the input.
    pub witness_poly: QPoly,
}

pub fn matrix_jordan_chevalley(a: &QMatrix) -> Result<JordanPair> {
    a.ensure_square()?;
    let m = minimal_polynomial(a)?;
    let f = m.squarefree_part()?;
    let mut x = QPoly::t().rem(&m)?;
    if f != m {
        let u = f.derivative().inverse_mod(&f).ok_or_else(|| {
            Error::InternalInvariantViolation("squarefree part shares a root with its derivative".into())
        })?;
        // Quadratic convergence: the multiplicity bound deg m is reached after
        // ceil(log2(deg m)) steps. The cap only guards against arithmetic bugs.
        let max_steps = 2 + usize::BITS - m.degree().unwrap_or(1).leading_zeros();
        let mut converged = false;
        for _ in 0..max_steps {
            let fx = f.compose_mod(&x, &m)?;
            if fx.is_zero() {
                converged = true;
                break;
            }
            let ux = u.compose_mod(&x, &m)?;
            x = (&x - &(&fx * &ux)).rem(&m)?;
        }
        converged = converged || f.compose_mod(&x, &m)?.is_zero();
        invariant(converged, || {
            "Newton iteration for the semisimple part did not converge".into()
        })?;
    }
    let semisimple = x.eval_matrix(a);
    let nilpotent = a - &semisimple;
    Ok(JordanPair {
        semisimple,
        nilpotent,
        witness_poly: x,
    })
}

/// Semisimple over the rationals: the minimal polynomial is squarefree.
pub fn is_semisimple_matrix(a: &QMatrix) -> Result<bool> {
    Ok(minimal_polynomial(a)?.is_squarefree())
}

/// `a^n = 0` for `n` the size of `a`, checked by repeated squaring.
pub fn is_nilpotent_matrix(a: &QMatrix) -> Result<bool> {
    let n = a.ensure_square()?;
    let mut power = a.clone();
    let mut exponent = 1;
    loop {
        if power.is_zero() {
            return Ok(true);
        }
        if exponent >= n {
            return Ok(false);
        }
        power = &power * &power;
        exponent *= 2;
    }
}
