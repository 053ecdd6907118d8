use std::fmt;

use super::poly::Poly;
use super::scalar::{Coeff, ExactDiv};
use crate::{Error, Result};

/// Power series truncated at an explicit order: coefficients of degrees
/// `0..=order` are exact, everything above is discarded. Binary operations
/// truncate to the smaller order so precision is never overstated.
#[derive(Clone, PartialEq, Eq)]
pub struct TruncSeries<C> {
    order: usize,
    coeffs: Vec<C>, // always exactly order + 1 entries
}

impl<C: Coeff> TruncSeries<C> {
    pub fn zero(order: usize) -> Self {
        TruncSeries {
            order,
            coeffs: vec![C::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        let mut s = TruncSeries::zero(order);
        s.coeffs[0] = C::one();
        s
    }

    /// Reads off the polynomial's coefficients up to `order`; higher terms
    /// are genuinely truncated away.
    pub fn from_poly(p: &Poly<C>, order: usize) -> Self {
        let mut coeffs = Vec::with_capacity(order + 1);
        for k in 0..=order {
            coeffs.push(p.coeff(k));
        }
        TruncSeries { order, coeffs }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// Coefficients of degrees `0..=order`.
    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> &C {
        assert!(k <= self.order, "coefficient {k} beyond order {}", self.order);
        &self.coeffs[k]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let order = self.order.min(rhs.order);
        let mut coeffs = Vec::with_capacity(order + 1);
        for k in 0..=order {
            coeffs.push(self.coeffs[k].clone() + rhs.coeffs[k].clone());
        }
        TruncSeries { order, coeffs }
    }

    /// `self += c · rhs`, requiring `rhs` to carry at least as much
    /// precision; the workhorse of the census-weighted sums.
    pub fn add_scaled(&mut self, rhs: &Self, c: &C) {
        assert!(
            rhs.order >= self.order,
            "cannot add a series of order {} into one of order {}",
            rhs.order,
            self.order
        );
        if c.is_zero() {
            return;
        }
        for (k, a) in self.coeffs.iter_mut().enumerate() {
            if !rhs.coeffs[k].is_zero() {
                *a += rhs.coeffs[k].clone() * c.clone();
            }
        }
    }

    pub fn scale(&self, c: &C) -> Self {
        TruncSeries {
            order: self.order,
            coeffs: self.coeffs.iter().map(|a| a.clone() * c.clone()).collect(),
        }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        let order = self.order.min(rhs.order);
        let mut coeffs = vec![C::zero(); order + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(order + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate().take(order + 1 - i) {
                if !b.is_zero() {
                    coeffs[i + j] += a.clone() * b.clone();
                }
            }
        }
        TruncSeries { order, coeffs }
    }

    /// Multiplication by an exact polynomial, keeping this series' order.
    pub fn mul_poly(&self, p: &Poly<C>) -> Self {
        let mut coeffs = vec![C::zero(); self.order + 1];
        for (j, b) in p.coeffs().iter().enumerate() {
            if j > self.order {
                break;
            }
            if b.is_zero() {
                continue;
            }
            for (i, a) in self.coeffs.iter().enumerate().take(self.order + 1 - j) {
                if !a.is_zero() {
                    coeffs[i + j] += a.clone() * b.clone();
                }
            }
        }
        TruncSeries {
            order: self.order,
            coeffs,
        }
    }

    pub fn pow(&self, e: usize) -> Self {
        let mut out = TruncSeries::one(self.order);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                out = out.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        out
    }

    /// Multiplicative inverse, requiring the constant term to be a unit of
    /// the coefficient ring (±1 over the integers).
    pub fn invert_unit(&self) -> Result<Self>
    where
        C: ExactDiv,
    {
        let c0 = &self.coeffs[0];
        let inv0 = C::one()
            .exact_div(c0)
            .ok_or_else(|| Error::NonUnitConstant(format!("{c0:?}")))?;
        let mut inv = vec![C::zero(); self.order + 1];
        inv[0] = inv0.clone();
        for n in 1..=self.order {
            let mut s = C::zero();
            for k in 1..=n {
                if !self.coeffs[k].is_zero() && !inv[n - k].is_zero() {
                    s += self.coeffs[k].clone() * inv[n - k].clone();
                }
            }
            inv[n] = -s * inv0.clone();
        }
        Ok(TruncSeries {
            order: self.order,
            coeffs: inv,
        })
    }

    /// Restricts to a smaller order.
    pub fn truncate(&self, order: usize) -> Self {
        assert!(order <= self.order, "truncate cannot extend a series");
        TruncSeries {
            order,
            coeffs: self.coeffs[..=order].to_vec(),
        }
    }

    /// Reinterprets the truncated series as a polynomial (use only when the
    /// series is known to terminate within the order).
    pub fn into_poly(self) -> Poly<C> {
        Poly::new(self.coeffs)
    }
}

impl<C: fmt::Debug> fmt::Debug for TruncSeries<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TruncSeries(order {}){:?}", self.order, self.coeffs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{Int, IntPoly, IntSeries};
    use proptest::prelude::*;

    fn sp(v: &[i64], order: usize) -> IntSeries {
        TruncSeries::from_poly(&IntPoly::from_ints(v), order)
    }

    #[test]
    fn construction_and_truncation() {
        let s = sp(&[1, 2, 3, 4], 2);
        assert_eq!(s.coeffs(), &[Int::from(1), Int::from(2), Int::from(3)]);
        assert_eq!(s.order(), 2);
        let t = s.truncate(1);
        assert_eq!(t.coeffs(), &[Int::from(1), Int::from(2)]);
    }

    #[test]
    fn orders_shrink_to_min() {
        let a = sp(&[1, 1, 1, 1, 1], 4);
        let b = sp(&[1, -1], 2);
        assert_eq!(a.add(&b).order(), 2);
        assert_eq!(a.mul(&b).order(), 2);
        // (1+q+q²)·(1−q) = 1 − q³ ≡ 1 to order 2
        assert_eq!(a.mul(&b), sp(&[1], 2));
    }

    #[test]
    fn geometric_series_inverse() {
        let s = sp(&[1, -1], 8).invert_unit().unwrap();
        assert_eq!(s, sp(&[1, 1, 1, 1, 1, 1, 1, 1, 1], 8));
        let back = s.mul_poly(&IntPoly::from_ints(&[1, -1]));
        assert_eq!(back, sp(&[1], 8));
    }

    #[test]
    fn inverse_of_negative_unit() {
        let s = sp(&[-1, 1], 4).invert_unit().unwrap();
        assert_eq!(s, sp(&[-1, -1, -1, -1, -1], 4));
    }

    #[test]
    fn inverse_needs_unit() {
        assert!(matches!(
            sp(&[2, 1], 4).invert_unit(),
            Err(Error::NonUnitConstant(_))
        ));
        assert!(sp(&[0, 1], 4).invert_unit().is_err());
    }

    #[test]
    fn add_scaled_accumulates() {
        let mut acc = IntSeries::zero(3);
        acc.add_scaled(&sp(&[1, 1, 1, 1, 1], 5), &Int::from(3));
        acc.add_scaled(&sp(&[0, 1], 3), &Int::from(-2));
        assert_eq!(acc, sp(&[3, 1, 3, 3], 3));
    }

    #[test]
    #[should_panic(expected = "cannot add a series")]
    fn add_scaled_rejects_shorter_source() {
        let mut acc = IntSeries::zero(5);
        acc.add_scaled(&IntSeries::one(3), &Int::from(1));
    }

    #[test]
    fn pow_matches_polynomial_power() {
        let s = sp(&[1, 1], 6).pow(4);
        assert_eq!(s, sp(&[1, 4, 6, 4, 1], 6));
        assert_eq!(sp(&[1, 1], 6).pow(0), IntSeries::one(6));
    }

    proptest! {
        #[test]
        fn inverse_times_self_is_one(
            tail in proptest::collection::vec(-5i64..6, 0..7),
            sign in prop::bool::ANY) {
            let mut v = vec![if sign { 1 } else { -1 }];
            v.extend(tail);
            let s = sp(&v, 10);
            let inv = s.invert_unit().unwrap();
            prop_assert_eq!(s.mul(&inv), IntSeries::one(10));
        }

        #[test]
        fn mul_poly_agrees_with_series_mul(
            a in proptest::collection::vec(-5i64..6, 1..7),
            b in proptest::collection::vec(-5i64..6, 1..7)) {
            let s = sp(&a, 9);
            let p = IntPoly::from_ints(&b);
            prop_assert_eq!(s.mul_poly(&p), s.mul(&TruncSeries::from_poly(&p, 9)));
        }
    }
}
