use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use super::matrix::QMatrix;
use super::rational::Rational;
use crate::error::{Error, Result};

/// Univariate polynomial over the rationals, coefficients lowest degree first.
///
/// Trailing zero coefficients are always trimmed, so the zero polynomial has
/// an empty coefficient list.
#[derive(Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(into = "Vec<Rational>", from = "Vec<Rational>")]
pub struct QPoly {
    coeffs: Vec<Rational>,
}

impl From<QPoly> for Vec<Rational> {
    fn from(p: QPoly) -> Self {
        p.coeffs
    }
}

impl From<Vec<Rational>> for QPoly {
    fn from(coeffs: Vec<Rational>) -> Self {
        QPoly::new(coeffs)
    }
}

impl QPoly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Rational::is_zero) {
            coeffs.pop();
        }
        QPoly { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| Rational::from(c)).collect())
    }

    pub fn zero() -> Self {
        QPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rational::ONE)
    }

    pub fn constant(c: Rational) -> Self {
        Self::new(vec![c])
    }

    /// The indeterminate `t`.
    pub fn t() -> Self {
        Self::monomial(Rational::ONE, 1)
    }

    pub fn monomial(c: Rational, degree: usize) -> Self {
        let mut coeffs = vec![Rational::ZERO; degree + 1];
        coeffs[degree] = c;
        Self::new(coeffs)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(Rational::is_one)
    }

    pub fn monic(&self) -> Result<Self> {
        let lead = self.leading().ok_or(Error::ZeroPolynomial)?;
        Ok(self.scale(&lead.recip()))
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::new(self.coeffs.iter().map(|x| x * c).collect())
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * &Rational::from(i as i64))
                .collect(),
        )
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.coeffs.iter().rev().fold(Rational::ZERO, |acc, c| &(&acc * x) + c)
    }

    /// Horner evaluation at a square matrix.
    pub fn eval_matrix(&self, a: &QMatrix) -> QMatrix {
        let n = a.ensure_square().expect("polynomial evaluated at non-square matrix");
        let mut acc = QMatrix::zeros(n, n);
        for c in self.coeffs.iter().rev() {
            acc = &acc * a;
            if !c.is_zero() {
                for i in 0..n {
                    acc[(i, i)] += c;
                }
            }
        }
        acc
    }

    /// Euclidean division: `self = q·divisor + r` with `deg r < deg divisor`.
    pub fn div_rem(&self, divisor: &QPoly) -> Result<(QPoly, QPoly)> {
        let dd = divisor.degree().ok_or(Error::ZeroPolynomial)?;
        let lead_inv = divisor.coeffs[dd].recip();
        let mut rem = self.coeffs.clone();
        let Some(nd) = self.degree().filter(|&d| d >= dd) else {
            return Ok((QPoly::zero(), self.clone()));
        };
        let mut quot = vec![Rational::ZERO; nd - dd + 1];
        for k in (0..=nd - dd).rev() {
            let c = &rem[k + dd] * &lead_inv;
            if c.is_zero() {
                continue;
            }
            for (i, d) in divisor.coeffs.iter().enumerate() {
                if !d.is_zero() {
                    rem[k + i] -= &c * d;
                }
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        Ok((QPoly::new(quot), QPoly::new(rem)))
    }

    pub fn rem(&self, divisor: &QPoly) -> Result<QPoly> {
        Ok(self.div_rem(divisor)?.1)
    }

    /// Exact division; errors unless `divisor` divides `self`.
    pub fn exact_div(&self, divisor: &QPoly) -> Result<QPoly> {
        let (q, r) = self.div_rem(divisor)?;
        if r.is_zero() {
            Ok(q)
        } else {
            Err(Error::Invalid("polynomial division is not exact".into()))
        }
    }

    pub fn divides(&self, other: &QPoly) -> bool {
        other.rem(self).is_ok_and(|r| r.is_zero())
    }

    /// Monic greatest common divisor; `gcd(0, 0) = 0`.
    pub fn gcd(a: &QPoly, b: &QPoly) -> QPoly {
        let (mut x, mut y) = (a.clone(), b.clone());
        while !y.is_zero() {
            let r = x.rem(&y).expect("nonzero divisor");
            x = y;
            y = r;
        }
        if x.is_zero() {
            x
        } else {
            x.monic().expect("nonzero")
        }
    }

    /// Extended gcd: returns monic `g` with `u·a + v·b = g`.
    pub fn ext_gcd(a: &QPoly, b: &QPoly) -> (QPoly, QPoly, QPoly) {
        let (mut r0, mut r1) = (a.clone(), b.clone());
        let (mut s0, mut s1) = (QPoly::one(), QPoly::zero());
        let (mut t0, mut t1) = (QPoly::zero(), QPoly::one());
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1).expect("nonzero divisor");
            let s = &s0 - &(&q * &s1);
            let t = &t0 - &(&q * &t1);
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s);
            t0 = std::mem::replace(&mut t1, t);
        }
        match r0.leading().cloned() {
            Some(lead) => {
                let inv = lead.recip();
                (r0.scale(&inv), s0.scale(&inv), t0.scale(&inv))
            }
            None => (r0, s0, t0),
        }
    }

    /// Inverse of `self` in `Q[t]/(modulus)`, when it exists.
    pub fn inverse_mod(&self, modulus: &QPoly) -> Option<QPoly> {
        let (g, u, _) = QPoly::ext_gcd(self, modulus);
        if g.degree() == Some(0) {
            u.rem(modulus).ok()
        } else {
            None
        }
    }

    /// Monic least common multiple of two nonzero polynomials.
    pub fn lcm(a: &QPoly, b: &QPoly) -> Result<QPoly> {
        if a.is_zero() || b.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let g = QPoly::gcd(a, b);
        (&a.exact_div(&g)? * b).monic()
    }

    /// `self(inner) mod modulus`, by Horner's rule in the quotient ring.
    pub fn compose_mod(&self, inner: &QPoly, modulus: &QPoly) -> Result<QPoly> {
        let mut acc = QPoly::zero();
        for c in self.coeffs.iter().rev() {
            acc = (&(&acc * inner) + &QPoly::constant(c.clone())).rem(modulus)?;
        }
        Ok(acc)
    }

    /// Monic polynomial with the same roots as `self`, each simple: `p / gcd(p, p')`.
    pub fn squarefree_part(&self) -> Result<QPoly> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let g = QPoly::gcd(self, &self.derivative());
        self.exact_div(&g)?.monic()
    }

    pub fn is_squarefree(&self) -> bool {
        !self.is_zero() && QPoly::gcd(self, &self.derivative()).degree() == Some(0)
    }
}

impl<'a> Add<&'a QPoly> for &'a QPoly {
    type Output = QPoly;
    fn add(self, rhs: &QPoly) -> QPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let zero = Rational::ZERO;
        QPoly::new(
            (0..n)
                .map(|i| self.coeffs.get(i).unwrap_or(&zero) + rhs.coeffs.get(i).unwrap_or(&zero))
                .collect(),
        )
    }
}

impl<'a> Sub<&'a QPoly> for &'a QPoly {
    type Output = QPoly;
    fn sub(self, rhs: &QPoly) -> QPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let zero = Rational::ZERO;
        QPoly::new(
            (0..n)
                .map(|i| self.coeffs.get(i).unwrap_or(&zero) - rhs.coeffs.get(i).unwrap_or(&zero))
                .collect(),
        )
    }
}

impl<'a> Mul<&'a QPoly> for &'a QPoly {
    type Output = QPoly;
    fn mul(self, rhs: &QPoly) -> QPoly {
        if self.is_zero() || rhs.is_zero() {
            return QPoly::zero();
        }
        let mut out = vec![Rational::ZERO; self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] += a * b;
                }
            }
        }
        QPoly::new(out)
    }
}

impl Neg for &QPoly {
    type Output = QPoly;
    fn neg(self) -> QPoly {
        QPoly::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl fmt::Display for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if c.is_negative() { '-' } else { '+' })?;
            }
            first = false;
            let show_coeff = i == 0 || !mag.is_one();
            if show_coeff {
                write!(f, "{mag}")?;
            }
            match i {
                0 => {}
                1 => write!(f, "t")?,
                _ => write!(f, "t^{i}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QPoly({self})")
    }
}
