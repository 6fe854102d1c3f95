//! Exact arbitrary-precision rationals with a machine-word fast path.
//!
//! Values whose reduced numerator and denominator both fit in an `i64` are
//! stored inline; everything else falls back to [`BigRational`]. The
//! representation is canonical, so structural equality is value equality.

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::iter::{Product, Sum};
use std::ops::{Add, AddAssign, Div, DivAssign, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

#[derive(Clone, PartialEq, Eq)]
enum Repr {
    /// Reduced, `den > 0`.
    Small { num: i64, den: i64 },
    /// Only used when the reduced value does not fit `Small`.
    Big(BigRational),
}

/// An exact rational number in lowest terms with positive denominator.
#[derive(Clone, PartialEq, Eq)]
pub struct Rational(Repr);

impl Rational {
    pub const ZERO: Rational = Rational(Repr::Small { num: 0, den: 1 });
    pub const ONE: Rational = Rational(Repr::Small { num: 1, den: 1 });

    pub const fn from_integer(n: i64) -> Self {
        Rational(Repr::Small { num: n, den: 1 })
    }

    /// Builds `num / den`, reducing to lowest terms.
    ///
    /// Panics if `den` is zero.
    pub fn new(num: i64, den: i64) -> Self {
        Self::from_i128(num as i128, den as i128)
    }

    fn from_i128(num: i128, den: i128) -> Self {
        assert!(den != 0, "rational with zero denominator");
        if num == 0 {
            return Self::ZERO;
        }
        let g = num.gcd(&den);
        let (mut n, mut d) = (num / g, den / g);
        if d < 0 {
            // gcd > 1 or den != i128::MIN here, so negation cannot overflow
            // except in the degenerate i128::MIN case, which i64 inputs never produce.
            n = -n;
            d = -d;
        }
        match (i64::try_from(n), i64::try_from(d)) {
            (Ok(num), Ok(den)) => Rational(Repr::Small { num, den }),
            _ => Rational(Repr::Big(BigRational::new_raw(BigInt::from(n), BigInt::from(d)))),
        }
    }

    /// Wraps a big rational, demoting to the inline form when it fits.
    pub fn from_big(r: BigRational) -> Self {
        // BigRational::new / arithmetic always keeps values reduced.
        match (r.numer().to_i64(), r.denom().to_i64()) {
            (Some(num), Some(den)) => Rational(Repr::Small { num, den }),
            _ => Rational(Repr::Big(r)),
        }
    }

    pub fn to_big(&self) -> BigRational {
        match &self.0 {
            Repr::Small { num, den } => BigRational::new_raw(BigInt::from(*num), BigInt::from(*den)),
            Repr::Big(b) => b.clone(),
        }
    }

    pub fn numer(&self) -> BigInt {
        match &self.0 {
            Repr::Small { num, .. } => BigInt::from(*num),
            Repr::Big(b) => b.numer().clone(),
        }
    }

    pub fn denom(&self) -> BigInt {
        match &self.0 {
            Repr::Small { den, .. } => BigInt::from(*den),
            Repr::Big(b) => b.denom().clone(),
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self.0, Repr::Small { num: 0, .. })
    }

    pub fn is_one(&self) -> bool {
        matches!(self.0, Repr::Small { num: 1, den: 1 })
    }

    pub fn is_integer(&self) -> bool {
        match &self.0 {
            Repr::Small { den, .. } => *den == 1,
            Repr::Big(b) => b.is_integer(),
        }
    }

    pub fn is_negative(&self) -> bool {
        match &self.0 {
            Repr::Small { num, .. } => *num < 0,
            Repr::Big(b) => b.is_negative(),
        }
    }

    pub fn abs(&self) -> Self {
        if self.is_negative() {
            -self
        } else {
            self.clone()
        }
    }

    /// Multiplicative inverse. Panics on zero.
    pub fn recip(&self) -> Self {
        assert!(!self.is_zero(), "reciprocal of zero");
        match &self.0 {
            Repr::Small { num, den } => Self::from_i128(*den as i128, *num as i128),
            Repr::Big(b) => Self::from_big(b.recip()),
        }
    }

    fn big_op(&self, rhs: &Self, op: impl FnOnce(BigRational, BigRational) -> BigRational) -> Self {
        Self::from_big(op(self.to_big(), rhs.to_big()))
    }
}

impl Default for Rational {
    fn default() -> Self {
        Self::ZERO
    }
}

impl From<i64> for Rational {
    fn from(n: i64) -> Self {
        Self::from_integer(n)
    }
}

impl From<i32> for Rational {
    fn from(n: i32) -> Self {
        Self::from_integer(n as i64)
    }
}

impl From<BigInt> for Rational {
    fn from(n: BigInt) -> Self {
        Self::from_big(BigRational::from_integer(n))
    }
}

impl From<BigRational> for Rational {
    fn from(r: BigRational) -> Self {
        Self::from_big(r)
    }
}

impl Hash for Rational {
    fn hash<H: Hasher>(&self, state: &mut H) {
        // Canonical representation makes hashing the normalized parts sound.
        match &self.0 {
            Repr::Small { num, den } => {
                BigInt::from(*num).hash(state);
                BigInt::from(*den).hash(state);
            }
            Repr::Big(b) => {
                b.numer().hash(state);
                b.denom().hash(state);
            }
        }
    }
}

impl<'a> Add<&'a Rational> for &'a Rational {
    type Output = Rational;
    fn add(self, rhs: &Rational) -> Rational {
        match (&self.0, &rhs.0) {
            (Repr::Small { num: a, den: 1 }, Repr::Small { num: c, den: 1 }) => match a.checked_add(*c) {
                Some(s) => Rational::from_integer(s),
                None => Rational::from_i128(*a as i128 + *c as i128, 1),
            },
            (Repr::Small { num: a, den: b }, Repr::Small { num: c, den: d }) => {
                let (a, b, c, d) = (*a as i128, *b as i128, *c as i128, *d as i128);
                Rational::from_i128(a * d + c * b, b * d)
            }
            _ => self.big_op(rhs, |x, y| x + y),
        }
    }
}

impl<'a> Sub<&'a Rational> for &'a Rational {
    type Output = Rational;
    fn sub(self, rhs: &Rational) -> Rational {
        match (&self.0, &rhs.0) {
            (Repr::Small { num: a, den: 1 }, Repr::Small { num: c, den: 1 }) => match a.checked_sub(*c) {
                Some(s) => Rational::from_integer(s),
                None => Rational::from_i128(*a as i128 - *c as i128, 1),
            },
            (Repr::Small { num: a, den: b }, Repr::Small { num: c, den: d }) => {
                let (a, b, c, d) = (*a as i128, *b as i128, *c as i128, *d as i128);
                Rational::from_i128(a * d - c * b, b * d)
            }
            _ => self.big_op(rhs, |x, y| x - y),
        }
    }
}

impl<'a> Mul<&'a Rational> for &'a Rational {
    type Output = Rational;
    fn mul(self, rhs: &Rational) -> Rational {
        match (&self.0, &rhs.0) {
            (Repr::Small { num: 0, .. }, _) | (_, Repr::Small { num: 0, .. }) => Rational::ZERO,
            (Repr::Small { num: a, den: 1 }, Repr::Small { num: c, den: 1 }) => match a.checked_mul(*c) {
                Some(p) => Rational::from_integer(p),
                None => Rational::from_i128(*a as i128 * *c as i128, 1),
            },
            (Repr::Small { num: a, den: b }, Repr::Small { num: c, den: d }) => {
                let (a, b, c, d) = (*a as i128, *b as i128, *c as i128, *d as i128);
                Rational::from_i128(a * c, b * d)
            }
            _ => self.big_op(rhs, |x, y| x * y),
        }
    }
}

impl<'a> Div<&'a Rational> for &'a Rational {
    type Output = Rational;
    fn div(self, rhs: &Rational) -> Rational {
        assert!(!rhs.is_zero(), "division by zero rational");
        match (&self.0, &rhs.0) {
            (Repr::Small { num: a, den: b }, Repr::Small { num: c, den: d }) => {
                let (a, b, c, d) = (*a as i128, *b as i128, *c as i128, *d as i128);
                Rational::from_i128(a * d, b * c)
            }
            _ => self.big_op(rhs, |x, y| x / y),
        }
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident, $tra:ident, $method_assign:ident) => {
        impl $tr<Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                (&self).$method(&rhs)
            }
        }
        impl<'a> $tr<&'a Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: &'a Rational) -> Rational {
                (&self).$method(rhs)
            }
        }
        impl<'a> $tr<Rational> for &'a Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                self.$method(&rhs)
            }
        }
        impl $tra<Rational> for Rational {
            fn $method_assign(&mut self, rhs: Rational) {
                *self = (&*self).$method(&rhs);
            }
        }
        impl<'a> $tra<&'a Rational> for Rational {
            fn $method_assign(&mut self, rhs: &'a Rational) {
                *self = (&*self).$method(rhs);
            }
        }
    };
}

forward_binop!(Add, add, AddAssign, add_assign);
forward_binop!(Sub, sub, SubAssign, sub_assign);
forward_binop!(Mul, mul, MulAssign, mul_assign);
forward_binop!(Div, div, DivAssign, div_assign);

impl Neg for &Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        match &self.0 {
            Repr::Small { num, den } => match num.checked_neg() {
                Some(n) => Rational(Repr::Small { num: n, den: *den }),
                None => Rational::from_i128(-(*num as i128), *den as i128),
            },
            Repr::Big(b) => Rational::from_big(-b.clone()),
        }
    }
}

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        -&self
    }
}

impl Zero for Rational {
    fn zero() -> Self {
        Self::ZERO
    }
    fn is_zero(&self) -> bool {
        Rational::is_zero(self)
    }
}

impl One for Rational {
    fn one() -> Self {
        Self::ONE
    }
}

impl Sum for Rational {
    fn sum<I: Iterator<Item = Rational>>(iter: I) -> Self {
        iter.fold(Rational::ZERO, |acc, x| acc + x)
    }
}

impl<'a> Sum<&'a Rational> for Rational {
    fn sum<I: Iterator<Item = &'a Rational>>(iter: I) -> Self {
        iter.fold(Rational::ZERO, |acc, x| acc + x)
    }
}

impl Product for Rational {
    fn product<I: Iterator<Item = Rational>>(iter: I) -> Self {
        iter.fold(Rational::ONE, |acc, x| acc * x)
    }
}

impl Ord for Rational {
    fn cmp(&self, other: &Self) -> Ordering {
        match (&self.0, &other.0) {
            (Repr::Small { num: a, den: b }, Repr::Small { num: c, den: d }) => {
                (*a as i128 * *d as i128).cmp(&(*c as i128 * *b as i128))
            }
            _ => self.to_big().cmp(&other.to_big()),
        }
    }
}

impl PartialOrd for Rational {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.0 {
            Repr::Small { num, den: 1 } => write!(f, "{num}"),
            Repr::Small { num, den } => write!(f, "{num}/{den}"),
            Repr::Big(b) if b.is_integer() => write!(f, "{}", b.numer()),
            Repr::Big(b) => write!(f, "{}/{}", b.numer(), b.denom()),
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("invalid rational literal {0:?}")]
pub struct ParseRationalError(pub String);

impl FromStr for Rational {
    type Err = ParseRationalError;

    /// Accepts `"n"` or `"p/q"` with optional sign; `q` must be nonzero.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = || ParseRationalError(s.to_string());
        let t = s.trim();
        let (n, d) = match t.split_once('/') {
            Some((n, d)) => (n.trim(), Some(d.trim())),
            None => (t, None),
        };
        let valid = |part: &str| {
            let digits = part.strip_prefix(['-', '+']).unwrap_or(part);
            !digits.is_empty() && digits.bytes().all(|b| b.is_ascii_digit())
        };
        if !valid(n) || d.is_some_and(|d| !valid(d)) {
            return Err(err());
        }
        let num: BigInt = n.parse().map_err(|_| err())?;
        let den: BigInt = match d {
            Some(d) => d.parse().map_err(|_| err())?,
            None => BigInt::one(),
        };
        if den.is_zero() {
            return Err(err());
        }
        Ok(Rational::from_big(BigRational::new(num, den)))
    }
}

impl Serialize for Rational {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Rational {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Lit {
            Str(String),
            Int(i64),
        }
        match Lit::deserialize(deserializer)? {
            Lit::Str(s) => s.parse().map_err(serde::de::Error::custom),
            Lit::Int(n) => Ok(Rational::from_integer(n)),
        }
    }
}

/// Shorthand for `Rational::new`.
pub fn q(num: i64, den: i64) -> Rational {
    Rational::new(num, den)
}
