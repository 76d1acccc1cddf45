//! Exact base fields: the rationals and prime fields `GF(p)`.
//!
//! Every scalar is a [`BigRational`] in canonical form for its field. Over
//! `Q` that is a reduced fraction with positive denominator; over `GF(p)` it
//! is an integer residue in `[0, p)`. The arithmetic lives on [`Field`] so
//! that values never carry their field around.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

/// A field element in canonical form for some [`Field`].
pub type Scalar = BigRational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FieldError {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("field mismatch: {0} vs {1}")]
    Mismatch(Field, Field),
    #[error("cannot parse scalar {0:?}")]
    ParseScalar(String),
    #[error("cannot parse field {0:?} (expected \"Q\" or \"GF(p)\")")]
    ParseField(String),
    #[error("division by zero")]
    DivisionByZero,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Field {
    Rationals,
    Prime(u64),
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

impl Field {
    pub fn prime(p: u64) -> Result<Field, FieldError> {
        if is_prime(p) {
            Ok(Field::Prime(p))
        } else {
            Err(FieldError::NotPrime(p))
        }
    }

    pub fn characteristic(&self) -> u64 {
        match self {
            Field::Rationals => 0,
            Field::Prime(p) => *p,
        }
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, Field::Prime(_))
    }

    /// Number of elements, `None` for an infinite field.
    pub fn order(&self) -> Option<u64> {
        match self {
            Field::Rationals => None,
            Field::Prime(p) => Some(*p),
        }
    }

    pub fn ensure_same(&self, other: &Field) -> Result<(), FieldError> {
        if self == other {
            Ok(())
        } else {
            Err(FieldError::Mismatch(*self, *other))
        }
    }

    pub fn zero(&self) -> Scalar {
        Scalar::zero()
    }

    pub fn one(&self) -> Scalar {
        Scalar::one()
    }

    pub fn from_i64(&self, n: i64) -> Scalar {
        self.normalize(Scalar::from_integer(BigInt::from(n)))
    }

    /// The image of `num/den` in this field, `None` if `den` vanishes here.
    pub fn from_ratio(&self, num: i64, den: i64) -> Option<Scalar> {
        let den = self.from_i64(den);
        if den.is_zero() {
            return None;
        }
        Some(self.mul(&self.from_i64(num), &self.inv(&den)?))
    }

    /// Maps an arbitrary rational into canonical form. Panics if the
    /// denominator is divisible by `p`; use [`Field::try_normalize`] on
    /// untrusted input.
    pub fn normalize(&self, x: Scalar) -> Scalar {
        self.try_normalize(x).expect("denominator divisible by the characteristic")
    }

    pub fn try_normalize(&self, x: Scalar) -> Result<Scalar, FieldError> {
        match self {
            Field::Rationals => Ok(x),
            Field::Prime(p) => {
                let p = BigInt::from(*p);
                let num = x.numer().mod_floor(&p);
                let den = x.denom().mod_floor(&p);
                if den.is_zero() {
                    return Err(FieldError::DivisionByZero);
                }
                let inv = mod_inverse(&den, &p);
                Ok(Scalar::from_integer((num * inv).mod_floor(&p)))
            }
        }
    }

    pub fn add(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match self {
            Field::Rationals => a + b,
            Field::Prime(p) => reduce_int(a.numer() + b.numer(), *p),
        }
    }

    pub fn sub(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match self {
            Field::Rationals => a - b,
            Field::Prime(p) => reduce_int(a.numer() - b.numer(), *p),
        }
    }

    pub fn mul(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match self {
            Field::Rationals => a * b,
            Field::Prime(p) => reduce_int(a.numer() * b.numer(), *p),
        }
    }

    pub fn neg(&self, a: &Scalar) -> Scalar {
        match self {
            Field::Rationals => -a,
            Field::Prime(p) => reduce_int(-a.numer(), *p),
        }
    }

    pub fn inv(&self, a: &Scalar) -> Option<Scalar> {
        if a.is_zero() {
            return None;
        }
        match self {
            Field::Rationals => Some(a.recip()),
            Field::Prime(p) => {
                let p = BigInt::from(*p);
                Some(Scalar::from_integer(mod_inverse(a.numer(), &p)))
            }
        }
    }

    pub fn div(&self, a: &Scalar, b: &Scalar) -> Result<Scalar, FieldError> {
        let inv = self.inv(b).ok_or(FieldError::DivisionByZero)?;
        Ok(self.mul(a, &inv))
    }

    /// `acc += c * x`, the inner loop of every elimination routine.
    pub fn add_mul_assign(&self, acc: &mut Scalar, c: &Scalar, x: &Scalar) {
        *acc = self.add(acc, &self.mul(c, x));
    }

    /// Parses `a` or `a/b` (optionally signed) into this field.
    pub fn parse_scalar(&self, s: &str) -> Result<Scalar, FieldError> {
        let bad = || FieldError::ParseScalar(s.to_string());
        let t = s.trim();
        let (num, den) = match t.split_once('/') {
            Some((n, d)) => (n.trim(), d.trim()),
            None => (t, "1"),
        };
        let num: BigInt = num.parse().map_err(|_| bad())?;
        let den: BigInt = den.parse().map_err(|_| bad())?;
        if den.is_zero() {
            return Err(bad());
        }
        self.try_normalize(BigRational::new(num, den)).map_err(|_| bad())
    }

    /// Canonical text of a scalar: `a` or `a/b` over `Q`, the residue over `GF(p)`.
    pub fn format_scalar(&self, x: &Scalar) -> String {
        if x.is_integer() {
            x.numer().to_string()
        } else {
            format!("{}/{}", x.numer(), x.denom())
        }
    }

    /// A sign-aware split used by printers: over `GF(p)` nothing is negative.
    pub fn is_negative(&self, x: &Scalar) -> bool {
        match self {
            Field::Rationals => x.is_negative(),
            Field::Prime(_) => false,
        }
    }

    /// Residue as `u64` for prime fields (used by the exhaustive checker).
    pub fn residue(&self, x: &Scalar) -> Option<u64> {
        match self {
            Field::Rationals => None,
            Field::Prime(_) => x.numer().to_u64(),
        }
    }

    pub fn parse(s: &str) -> Result<Field, FieldError> {
        let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if t == "Q" || t == "QQ" {
            return Ok(Field::Rationals);
        }
        let inner = t
            .strip_prefix("GF(")
            .and_then(|r| r.strip_suffix(')'))
            .or_else(|| t.strip_prefix("GF"))
            .ok_or_else(|| FieldError::ParseField(s.to_string()))?;
        let p: u64 = inner.parse().map_err(|_| FieldError::ParseField(s.to_string()))?;
        Field::prime(p)
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rationals => write!(f, "Q"),
            Field::Prime(p) => write!(f, "GF({p})"),
        }
    }
}

fn reduce_int(n: BigInt, p: u64) -> Scalar {
    Scalar::from_integer(n.mod_floor(&BigInt::from(p)))
}

fn mod_inverse(a: &BigInt, p: &BigInt) -> BigInt {
    let g = a.mod_floor(p).extended_gcd(p);
    debug_assert!(g.gcd.is_one());
    g.x.mod_floor(p)
}
