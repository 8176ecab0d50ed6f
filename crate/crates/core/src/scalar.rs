//! Coefficient ring abstractions.
//!
//! Every polynomial in this crate is generic over a [`Ring`]. The exact
//! algorithms (resultants, discriminants, integration) additionally need
//! [`ExactDiv`], which both fields (`BigRational`, `f64`) and integral
//! domains with exact quotients (`BigInt`, polynomial rings) provide.

use std::fmt::Debug;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::{BigRational, Ratio};
use num_traits::{One, Zero};

/// A commutative ring with identity.
pub trait Ring:
    Clone
    + PartialEq
    + Debug
    + Zero
    + One
    + Neg<Output = Self>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
{
    /// Image of a machine integer under the canonical map `Z -> Self`.
    fn from_i64(v: i64) -> Self;

    /// `self^e` by repeated squaring.
    fn pow_u32(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base.clone();
            }
            e >>= 1;
            if e > 0 {
                base = base.clone() * base;
            }
        }
        acc
    }
}

/// Rings in which a quotient can be taken whenever it exists.
pub trait ExactDiv: Ring {
    /// Returns `q` with `q * rhs == self`, or `None` if `rhs` is zero or
    /// does not divide `self`.
    fn exact_div(&self, rhs: &Self) -> Option<Self>;
}

macro_rules! float_ring {
    ($($t:ty),*) => {$(
        impl Ring for $t {
            fn from_i64(v: i64) -> Self {
                v as $t
            }
        }

        impl ExactDiv for $t {
            fn exact_div(&self, rhs: &Self) -> Option<Self> {
                if *rhs == 0.0 {
                    None
                } else {
                    Some(self / rhs)
                }
            }
        }
    )*};
}

float_ring!(f32, f64);

impl Ring for BigInt {
    fn from_i64(v: i64) -> Self {
        BigInt::from(v)
    }
}

impl ExactDiv for BigInt {
    fn exact_div(&self, rhs: &Self) -> Option<Self> {
        if rhs.is_zero() {
            return None;
        }
        let (q, r) = self.div_rem(rhs);
        r.is_zero().then_some(q)
    }
}

impl Ring for BigRational {
    fn from_i64(v: i64) -> Self {
        Ratio::from_integer(BigInt::from(v))
    }
}

impl ExactDiv for BigRational {
    fn exact_div(&self, rhs: &Self) -> Option<Self> {
        if rhs.is_zero() {
            None
        } else {
            Some(self / rhs)
        }
    }
}

/// Shorthand for an integer-valued rational.
pub fn rat(v: i64) -> BigRational {
    BigRational::from_i64(v)
}

/// Shorthand for `num / den`.
pub fn ratio(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// `base^e` for an integer exponent of either sign.
pub fn pow_signed(base: &BigRational, e: i64) -> BigRational {
    let p = base.pow_u32(e.unsigned_abs() as u32);
    if e < 0 {
        p.recip()
    } else {
        p
    }
}
