use std::fmt::Debug;
use std::ops::{AddAssign, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Coefficient ring for polynomials, series, and matrices.
///
/// Blanket-implemented for every type with the listed operations, so it
/// covers `BigInt`, `BigRational`, and the machine integers used on hot
/// paths, without any impls to maintain per scalar.
pub trait Coeff:
    Clone
    + Debug
    + PartialEq
    + Zero
    + One
    + Neg<Output = Self>
    + Sub<Output = Self>
    + AddAssign
    + SubAssign
{
}

impl<T> Coeff for T where
    T: Clone
        + Debug
        + PartialEq
        + Zero
        + One
        + Neg<Output = T>
        + Sub<Output = T>
        + AddAssign
        + SubAssign
{
}

/// Division that either yields an exact quotient in the ring or reports
/// failure; never a rounded value.
pub trait ExactDiv: Sized {
    fn exact_div(&self, rhs: &Self) -> Option<Self>;
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

impl ExactDiv for BigRational {
    fn exact_div(&self, rhs: &Self) -> Option<Self> {
        (!rhs.is_zero()).then(|| self / rhs)
    }
}

macro_rules! exact_div_int {
    ($($t:ty),*) => {$(
        impl ExactDiv for $t {
            fn exact_div(&self, rhs: &Self) -> Option<Self> {
                if *rhs == 0 || self % rhs != 0 {
                    None
                } else {
                    Some(self / rhs)
                }
            }
        }
    )*};
}

exact_div_int!(i32, i64, i128);
