//! Exact scalar fields: ℚ and real quadratic extensions ℚ(√d).

mod quad;
mod rational;

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

pub use quad::QuadExt;
pub use rational::Rational;

/// Exact field used by the generic matrix code.
pub trait Field:
    Clone
    + PartialEq
    + fmt::Debug
    + fmt::Display
    + Send
    + Sync
    + 'static
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
    + for<'a> Add<&'a Self, Output = Self>
    + for<'a> Sub<&'a Self, Output = Self>
    + for<'a> Mul<&'a Self, Output = Self>
    + AddAssign
    + SubAssign
    + for<'a> AddAssign<&'a Self>
    + for<'a> SubAssign<&'a Self>
{
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    /// Multiplicative inverse, `None` for zero.
    fn inv(&self) -> Option<Self>;
    fn from_rational(q: &Rational) -> Self;
    fn mul_ref(&self, other: &Self) -> Self;
}

/// Field with an exact order, needed for signatures.
pub trait OrderedField: Field {
    fn signum(&self) -> i32;
}

impl Field for Rational {
    fn zero() -> Self {
        Rational::zero()
    }
    fn one() -> Self {
        Rational::one()
    }
    fn is_zero(&self) -> bool {
        Rational::is_zero(self)
    }
    fn inv(&self) -> Option<Self> {
        self.recip().ok()
    }
    fn from_rational(q: &Rational) -> Self {
        q.clone()
    }
    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }
}

impl OrderedField for Rational {
    fn signum(&self) -> i32 {
        Rational::signum(self)
    }
}

impl Field for QuadExt {
    fn zero() -> Self {
        QuadExt::from_rational(Rational::zero())
    }
    fn one() -> Self {
        QuadExt::from_rational(Rational::one())
    }
    fn is_zero(&self) -> bool {
        QuadExt::is_zero(self)
    }
    fn inv(&self) -> Option<Self> {
        self.try_inv().ok()
    }
    fn from_rational(q: &Rational) -> Self {
        QuadExt::from_rational(q.clone())
    }
    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }
}

impl OrderedField for QuadExt {
    fn signum(&self) -> i32 {
        QuadExt::signum(self)
    }
}

/// Shorthand for building rationals in tests and examples.
pub fn q(numer: i64, denom: i64) -> Rational {
    Rational::new(numer, denom)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn small_rational() -> impl Strategy<Value = Rational> {
        (-20i64..=20, 1i64..=12).prop_map(|(n, d)| Rational::new(n, d))
    }

    fn quad6() -> impl Strategy<Value = QuadExt> {
        (small_rational(), small_rational()).prop_map(|(a, b)| QuadExt { a, b, d: 6 })
    }

    proptest! {
        #[test]
        fn rational_field_axioms(x in small_rational(), y in small_rational(), z in small_rational()) {
            prop_assert_eq!(&(&x + &y) + &z, &x + &(&y + &z));
            prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
            prop_assert_eq!(&x * &(&y + &z), &(&x * &y) + &(&x * &z));
            if !x.is_zero() {
                prop_assert_eq!(&x * &x.recip().unwrap(), Rational::one());
            }
        }

        #[test]
        fn quad_field_axioms(x in quad6(), y in quad6(), z in quad6()) {
            prop_assert_eq!(&(&x + &y) + &z, &x + &(&y + &z));
            prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
            prop_assert_eq!(&x * &(&y + &z), &(&x * &y) + &(&x * &z));
            if !x.is_zero() {
                prop_assert_eq!(&x * &x.try_inv().unwrap(), <QuadExt as Field>::one());
            }
        }

        #[test]
        fn rational_embedding_round_trip(x in small_rational(), d in prop::sample::select(vec![2u64, 3, 5, 6, 7, 10])) {
            let e = QuadExt::rational_in(x.clone(), d).unwrap();
            prop_assert_eq!(e.to_rational(), Some(x));
        }
    }
}
