use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive};
use serde::{Deserialize, Serialize};

use super::Rational;
use crate::error::{Error, Result};

/// An element `a + b·√d` of the real quadratic field ℚ(√d).
///
/// `d` is a square-free integer ≥ 2 whenever `b ≠ 0`. Values with `b = 0`
/// are embedded rationals: they combine with elements of any discriminant,
/// and carry `d = 1` when created without reference to an extension.
/// Combining two irrational values with different `d` is an error.
#[derive(Clone, Serialize, Deserialize)]
pub struct QuadExt {
    pub a: Rational,
    pub b: Rational,
    pub d: u64,
}

fn is_square_free(d: u64) -> bool {
    let mut p = 2u64;
    while p * p <= d {
        if d.is_multiple_of(p * p) {
            return false;
        }
        p += 1;
    }
    true
}

/// Splits `m > 0` as `f² · d` with `d` square-free.
fn square_free_split(m: &BigInt) -> Result<(BigInt, u64)> {
    let mut rest = m
        .to_u64()
        .ok_or_else(|| Error::Parse(format!("radicand {m} too large for square-free split")))?;
    let mut square = 1u64;
    let mut p = 2u64;
    while p * p <= rest {
        while rest % (p * p) == 0 {
            rest /= p * p;
            square *= p;
        }
        p += 1;
    }
    Ok((BigInt::from(square), rest))
}

impl QuadExt {
    pub fn new(a: Rational, b: Rational, d: u64) -> Result<Self> {
        if d < 2 || !is_square_free(d) {
            return Err(Error::InvalidDiscriminant(d));
        }
        Ok(QuadExt { a, b, d })
    }

    pub fn from_rational(q: Rational) -> Self {
        QuadExt {
            a: q,
            b: Rational::zero(),
            d: 1,
        }
    }

    /// Rational embedded in ℚ(√d).
    pub fn rational_in(q: Rational, d: u64) -> Result<Self> {
        QuadExt::new(q, Rational::zero(), d)
    }

    /// Exact square root of a non-negative rational, extending to ℚ(√d)
    /// when it is not a perfect square.
    pub fn sqrt_of(q: &Rational) -> Result<Self> {
        if let Some(r) = q.try_sqrt()? {
            return Ok(QuadExt::from_rational(r));
        }
        // √(p/q) = √(p·q) / q
        let m = q.numer() * q.denom();
        let (f, d) = square_free_split(&m)?;
        let coeff = Rational::from_big(f, q.denom().clone())?;
        QuadExt::new(Rational::zero(), coeff, d)
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    pub fn to_rational(&self) -> Option<Rational> {
        self.is_rational().then(|| self.a.clone())
    }

    /// Discriminant that actually matters for arithmetic (`None` for rationals).
    pub fn discriminant(&self) -> Option<u64> {
        (!self.b.is_zero()).then_some(self.d)
    }

    fn common_d(&self, other: &Self) -> Result<u64> {
        match (self.discriminant(), other.discriminant()) {
            (Some(x), Some(y)) if x != y => Err(Error::MixedDiscriminant(x, y)),
            (Some(x), _) | (_, Some(x)) => Ok(x),
            (None, None) => Ok(self.d.max(other.d)),
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        let d = self.common_d(other)?;
        Ok(QuadExt {
            a: &self.a + &other.a,
            b: &self.b + &other.b,
            d,
        })
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        let d = self.common_d(other)?;
        Ok(QuadExt {
            a: &self.a - &other.a,
            b: &self.b - &other.b,
            d,
        })
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        let d = self.common_d(other)?;
        let dq = Rational::from(BigInt::from(d));
        Ok(QuadExt {
            a: &self.a * &other.a + &(&self.b * &other.b) * &dq,
            b: &self.a * &other.b + &self.b * &other.a,
            d,
        })
    }

    pub fn try_inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let dq = Rational::from(BigInt::from(self.d));
        let norm = &self.a * &self.a - &(&self.b * &self.b) * &dq;
        Ok(QuadExt {
            a: self.a.checked_div(&norm)?,
            b: (-&self.b).checked_div(&norm)?,
            d: self.d,
        })
    }

    pub fn try_div(&self, other: &Self) -> Result<Self> {
        // Check compatibility before inverting so the error names both sides.
        self.common_d(other)?;
        self.try_mul(&other.try_inv()?)
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    /// Exact sign of `a + b√d`.
    pub fn signum(&self) -> i32 {
        let sa = self.a.signum();
        let sb = self.b.signum();
        if sb == 0 {
            return sa;
        }
        if sa == 0 || sa == sb {
            return sb;
        }
        let dq = Rational::from(BigInt::from(self.d));
        let a2 = &self.a * &self.a;
        let b2d = &(&self.b * &self.b) * &dq;
        if a2 > b2d {
            sa
        } else {
            sb
        }
    }

    pub fn conjugate(&self) -> Self {
        QuadExt {
            a: self.a.clone(),
            b: -&self.b,
            d: self.d,
        }
    }
}

impl PartialEq for QuadExt {
    fn eq(&self, other: &Self) -> bool {
        self.a == other.a && self.b == other.b && (self.b.is_zero() || self.d == other.d)
    }
}

impl Eq for QuadExt {}

impl fmt::Display for QuadExt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_zero() {
            write!(f, "{}", self.a)
        } else if self.a.is_zero() {
            write!(f, "{}*sqrt({})", self.b, self.d)
        } else {
            write!(f, "{} + {}*sqrt({})", self.a, self.b, self.d)
        }
    }
}

impl fmt::Debug for QuadExt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl From<Rational> for QuadExt {
    fn from(q: Rational) -> Self {
        QuadExt::from_rational(q)
    }
}

impl Neg for QuadExt {
    type Output = QuadExt;
    fn neg(self) -> QuadExt {
        QuadExt {
            a: -self.a,
            b: -self.b,
            d: self.d,
        }
    }
}

// The operator impls panic on mixed discriminants; the `try_*` methods are
// the fallible equivalents.
macro_rules! quad_binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl $trait<QuadExt> for QuadExt {
            type Output = QuadExt;
            fn $method(self, rhs: QuadExt) -> QuadExt {
                self.$checked(&rhs).unwrap_or_else(|e| panic!("{e}"))
            }
        }
        impl<'a> $trait<&'a QuadExt> for QuadExt {
            type Output = QuadExt;
            fn $method(self, rhs: &'a QuadExt) -> QuadExt {
                self.$checked(rhs).unwrap_or_else(|e| panic!("{e}"))
            }
        }
        impl<'a, 'b> $trait<&'b QuadExt> for &'a QuadExt {
            type Output = QuadExt;
            fn $method(self, rhs: &'b QuadExt) -> QuadExt {
                self.$checked(rhs).unwrap_or_else(|e| panic!("{e}"))
            }
        }
    };
}

quad_binop!(Add, add, try_add);
quad_binop!(Sub, sub, try_sub);
quad_binop!(Mul, mul, try_mul);
quad_binop!(Div, div, try_div);

impl AddAssign for QuadExt {
    fn add_assign(&mut self, rhs: QuadExt) {
        *self = self.try_add(&rhs).unwrap_or_else(|e| panic!("{e}"));
    }
}

impl<'a> AddAssign<&'a QuadExt> for QuadExt {
    fn add_assign(&mut self, rhs: &'a QuadExt) {
        *self = self.try_add(rhs).unwrap_or_else(|e| panic!("{e}"));
    }
}

impl SubAssign for QuadExt {
    fn sub_assign(&mut self, rhs: QuadExt) {
        *self = self.try_sub(&rhs).unwrap_or_else(|e| panic!("{e}"));
    }
}

impl<'a> SubAssign<&'a QuadExt> for QuadExt {
    fn sub_assign(&mut self, rhs: &'a QuadExt) {
        *self = self.try_sub(rhs).unwrap_or_else(|e| panic!("{e}"));
    }
}

impl One for QuadExt {
    fn one() -> Self {
        QuadExt::from_rational(Rational::one())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    #[test]
    fn defining_relation() {
        let r6 = QuadExt::new(q(0, 1), q(1, 1), 6).unwrap();
        let sq = r6.try_mul(&r6).unwrap();
        assert_eq!(sq, QuadExt::from_rational(q(6, 1)));
    }

    #[test]
    fn conjugate_sum() {
        let x = QuadExt::new(q(1, 2), q(1, 3), 6).unwrap();
        let y = QuadExt::new(q(1, 2), q(-1, 3), 6).unwrap();
        assert_eq!(x.try_add(&y).unwrap(), QuadExt::from_rational(q(1, 1)));
        assert_eq!(x.conjugate(), y);
    }

    #[test]
    fn mixed_discriminant_rejected() {
        let x = QuadExt::new(q(0, 1), q(1, 1), 2).unwrap();
        let y = QuadExt::new(q(0, 1), q(1, 1), 3).unwrap();
        assert_eq!(x.try_add(&y), Err(Error::MixedDiscriminant(2, 3)));
        assert_eq!(x.try_mul(&y), Err(Error::MixedDiscriminant(2, 3)));
        // rationals mix freely
        let r = QuadExt::from_rational(q(5, 1));
        assert!(x.try_mul(&r).is_ok());
    }

    #[test]
    fn invalid_discriminants() {
        assert!(QuadExt::new(q(1, 1), q(1, 1), 4).is_err());
        assert!(QuadExt::new(q(1, 1), q(1, 1), 1).is_err());
        assert!(QuadExt::new(q(1, 1), q(1, 1), 12).is_err());
        assert!(QuadExt::new(q(1, 1), q(1, 1), 30).is_ok());
    }

    #[test]
    fn inverse_and_division() {
        let x = QuadExt::new(q(1, 1), q(1, 1), 2).unwrap();
        let inv = x.try_inv().unwrap();
        assert_eq!(x.try_mul(&inv).unwrap(), QuadExt::one());
        assert_eq!(
            QuadExt::from_rational(Rational::zero()).try_inv(),
            Err(Error::DivisionByZero)
        );
    }

    #[test]
    fn sqrt_of_rationals() {
        let s = QuadExt::sqrt_of(&q(1, 8)).unwrap();
        assert_eq!(s, QuadExt::new(q(0, 1), q(1, 4), 2).unwrap());
        assert_eq!(s.try_mul(&s).unwrap(), QuadExt::from_rational(q(1, 8)));
        let s = QuadExt::sqrt_of(&q(9, 4)).unwrap();
        assert_eq!(s, QuadExt::from_rational(q(3, 2)));
        let s = QuadExt::sqrt_of(&q(1, 6)).unwrap();
        assert_eq!(s.d, 6);
        assert_eq!(s.try_mul(&s).unwrap(), QuadExt::from_rational(q(1, 6)));
        assert!(QuadExt::sqrt_of(&q(-2, 1)).is_err());
    }

    #[test]
    fn signs() {
        let x = QuadExt::new(q(-1, 1), q(1, 1), 2).unwrap(); // √2 - 1 > 0
        assert_eq!(x.signum(), 1);
        let y = QuadExt::new(q(3, 2), q(-1, 1), 2).unwrap(); // 1.5 - √2 > 0
        assert_eq!(y.signum(), 1);
        let z = QuadExt::new(q(7, 5), q(-1, 1), 2).unwrap(); // 1.4 - √2 < 0
        assert_eq!(z.signum(), -1);
        assert_eq!(QuadExt::from_rational(Rational::zero()).signum(), 0);
    }
}
