//! Exact polynomial and series arithmetic over a generic coefficient ring.
//!
//! All types here are dense and parametric in the scalar: [`Poly`],
//! [`TruncSeries`], [`BiPoly`] and [`Mat`] work over anything implementing
//! [`Coeff`] (big integers, big rationals, fixed-width integers). There is
//! no floating point anywhere; operations either produce exact results or
//! fail loudly.

mod bipoly;
mod matrix;
mod poly;
mod scalar;
mod trunc;

pub use bipoly::{BiPoly, BiSeries};
pub use matrix::{charpoly, Mat};
pub use poly::Poly;
pub use scalar::{Coeff, ExactDiv};
pub use trunc::TruncSeries;

use crate::{Error, Result};

/// The three determinant polynomials of a group element `w`, all derived
/// from its characteristic polynomial `χ(t) = det(t·I − w)` of degree `r`:
///
/// * `plus`  = `det(1 + q·w)`, coefficient of `q^j` is `(−1)^j · χ[r−j]`;
/// * `minus` = `det(1 − q·w)`, coefficient of `q^j` is `χ[r−j]`;
/// * `q_squared` = `det(1 − q²·w)`, which is `minus` with `q ↦ q²`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Dets<C> {
    pub plus: Poly<C>,
    pub minus: Poly<C>,
    pub q_squared: Poly<C>,
}

/// Derives [`Dets`] from a monic characteristic polynomial.
///
/// If `χ = Π (t − λ_k)` then `det(1 ± q·w) = Π (1 ± q·λ_k)` is the
/// appropriately signed coefficient reversal of `χ`, and `det(1 − q²·w)`
/// is the substitution `q ↦ q²` in `det(1 − q·w)`.
pub fn dets_from_charpoly<C: Coeff>(chi: &Poly<C>) -> Result<Dets<C>> {
    let r = match chi.degree() {
        Some(r) if chi.coeffs()[r].is_one() => r,
        _ => return Err(Error::NonMonic),
    };
    let mut minus = Vec::with_capacity(r + 1);
    let mut plus = Vec::with_capacity(r + 1);
    for j in 0..=r {
        let c = chi.coeffs()[r - j].clone();
        if j % 2 == 0 {
            plus.push(c.clone());
        } else {
            plus.push(-c.clone());
        }
        minus.push(c);
    }
    let minus = Poly::new(minus);
    let plus = Poly::new(plus);
    let q_squared = minus.substitute_power(2);
    Ok(Dets {
        plus,
        minus,
        q_squared,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{Int, IntPoly};

    fn ip(v: &[i64]) -> IntPoly {
        Poly::from_ints(v)
    }

    #[test]
    fn dets_of_identity_rank_two() {
        // χ of the 2×2 identity is (t−1)² = t² − 2t + 1.
        let d = dets_from_charpoly(&ip(&[1, -2, 1])).unwrap();
        assert_eq!(d.plus, ip(&[1, 2, 1]));
        assert_eq!(d.minus, ip(&[1, -2, 1]));
        assert_eq!(d.q_squared, ip(&[1, 0, -2, 0, 1]));
    }

    #[test]
    fn dets_of_negative_one() {
        // χ of the 1×1 matrix (−1) is t + 1.
        let d = dets_from_charpoly(&ip(&[1, 1])).unwrap();
        assert_eq!(d.plus, ip(&[1, -1]));
        assert_eq!(d.minus, ip(&[1, 1]));
        assert_eq!(d.q_squared, ip(&[1, 0, 1]));
    }

    #[test]
    fn dets_of_rotation() {
        // A 90° rotation has χ = t² + 1; eigenvalues ±i, so
        // det(1 − q²w) = (1 − i·q²)(1 + i·q²) = 1 + q⁴.
        let d = dets_from_charpoly(&ip(&[1, 0, 1])).unwrap();
        assert_eq!(d.plus, ip(&[1, 0, 1]));
        assert_eq!(d.minus, ip(&[1, 0, 1]));
        assert_eq!(d.q_squared, ip(&[1, 0, 0, 0, 1]));
    }

    #[test]
    fn q_squared_is_substitution_not_product() {
        // For w with eigenvalues {1, −1} (χ = t² − 1) the correct value is
        // det(1 − q²w) = (1 − q²)(1 + q²) = 1 − q⁴, which differs from
        // det(1 − qw)·det(1 + qw) = (1 − q²)².
        let d = dets_from_charpoly(&ip(&[-1, 0, 1])).unwrap();
        assert_eq!(d.q_squared, ip(&[1, 0, 0, 0, -1]));
        assert_ne!(d.q_squared, &d.plus * &d.minus);
    }

    #[test]
    fn non_monic_rejected() {
        assert!(matches!(
            dets_from_charpoly(&ip(&[1, 0, 2])),
            Err(Error::NonMonic)
        ));
        assert!(matches!(
            dets_from_charpoly(&IntPoly::zero()),
            Err(Error::NonMonic)
        ));
    }

    #[test]
    fn substitution_matches_product_on_squarefree_spectrum() {
        // When −1 is not an eigenvalue shared with +1 the two expressions
        // can coincide; the rotation by 120° (χ = t² + t + 1) is such a case:
        // det(1−q²w) = 1 + q² + q⁴ = (1 − q + q²)(1 + q + q²).
        let d = dets_from_charpoly(&ip(&[1, 1, 1])).unwrap();
        assert_eq!(d.q_squared, &d.plus * &d.minus);
        assert_eq!(d.q_squared, Poly::from_ints(&[1, 0, 1, 0, 1]));
    }

    #[test]
    fn eval_consistency_with_charpoly() {
        // det(1 + q·w) at q = 1 equals det(1 + w) = (−1)^r χ(−1).
        let chi = ip(&[3, -1, 4, 1]); // monic cubic with scattered coefficients
        let d = dets_from_charpoly(&chi).unwrap();
        let at_one = d.plus.eval(&Int::from(1));
        let expected = -chi.eval(&Int::from(-1));
        assert_eq!(at_one, expected);
    }
}
