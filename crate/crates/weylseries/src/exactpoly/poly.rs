use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use super::scalar::{Coeff, ExactDiv};
use crate::{Error, Result};

/// Dense univariate polynomial, coefficients stored low degree first.
///
/// The representation is canonical: no trailing zero coefficients, and the
/// zero polynomial is the empty vector, so derived equality, hashing and
/// lexicographic ordering are well defined. Polynomials are
/// variable-agnostic; rendering takes the variable name as an argument.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Poly<C> {
    coeffs: Vec<C>,
}

impl<C: Coeff> Poly<C> {
    /// Builds a polynomial from coefficients, trimming trailing zeros.
    pub fn new(mut coeffs: Vec<C>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly::constant(C::one())
    }

    pub fn constant(c: C) -> Self {
        Poly::new(vec![c])
    }

    /// `c · x^k`.
    pub fn monomial(c: C, k: usize) -> Self {
        if c.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![C::zero(); k + 1];
        coeffs[k] = c;
        Poly { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Coefficients, lowest degree first, with no trailing zeros.
    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    /// Coefficient of `x^k` (zero beyond the degree).
    pub fn coeff(&self, k: usize) -> C {
        self.coeffs.get(k).cloned().unwrap_or_else(C::zero)
    }

    /// Horner evaluation.
    pub fn eval(&self, x: &C) -> C {
        let mut acc = C::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x.clone() + c.clone();
        }
        acc
    }

    pub fn scale(&self, c: &C) -> Self {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly::new(self.coeffs.iter().map(|a| a.clone() * c.clone()).collect())
    }

    /// Substitutes `x ↦ x^k` for `k ≥ 1`.
    pub fn substitute_power(&self, k: usize) -> Self {
        assert!(k >= 1, "substitute_power needs a positive exponent");
        if self.is_zero() || k == 1 {
            return self.clone();
        }
        let mut coeffs = vec![C::zero(); (self.coeffs.len() - 1) * k + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i * k] = c.clone();
        }
        Poly { coeffs }
    }

    /// Binary exponentiation.
    pub fn pow(&self, e: usize) -> Self {
        let mut base = self.clone();
        let mut out = Poly::one();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                out = &out * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        out
    }

    /// Exact polynomial division: errors unless `d` divides `self` with an
    /// exact quotient in the coefficient ring.
    pub fn exact_div(&self, d: &Self) -> Result<Self>
    where
        C: ExactDiv,
    {
        if d.is_zero() {
            return Err(Error::NotDivisible("division by zero polynomial".into()));
        }
        if self.is_zero() {
            return Ok(Poly::zero());
        }
        if self.coeffs.len() < d.coeffs.len() {
            return Err(Error::NotDivisible(format!(
                "degree {} into degree {}",
                d.coeffs.len() - 1,
                self.coeffs.len() - 1
            )));
        }
        let lead = d.coeffs.last().unwrap();
        let mut rem = self.coeffs.clone();
        let qlen = self.coeffs.len() - d.coeffs.len() + 1;
        let mut q = vec![C::zero(); qlen];
        for k in (0..qlen).rev() {
            let top = rem[k + d.coeffs.len() - 1].clone();
            if top.is_zero() {
                continue;
            }
            let c = top.exact_div(lead).ok_or_else(|| {
                Error::NotDivisible(format!("leading coefficient step at x^{k}"))
            })?;
            for (i, dc) in d.coeffs.iter().enumerate() {
                rem[k + i] -= dc.clone() * c.clone();
            }
            q[k] = c;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return Err(Error::NotDivisible("nonzero remainder".into()));
        }
        Ok(Poly::new(q))
    }

    /// Plain-text rendering, ascending powers: `1 + 3q + 6q^2`.
    pub fn display(&self, var: &str) -> String
    where
        C: fmt::Display,
    {
        self.render(var, false)
    }

    /// LaTeX rendering, ascending powers: `1 + 3q + 6q^{2}`.
    pub fn display_latex(&self, var: &str) -> String
    where
        C: fmt::Display,
    {
        self.render(var, true)
    }

    fn render(&self, var: &str, latex: bool) -> String
    where
        C: fmt::Display,
    {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let s = c.to_string();
            let (neg, mag) = match s.strip_prefix('-') {
                Some(rest) => (true, rest.to_string()),
                None => (false, s),
            };
            // Rational magnitudes get parentheses so `1/2q` cannot be
            // misread as `1/(2q)`.
            let mag = if mag.contains('/') {
                format!("({mag})")
            } else {
                mag
            };
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else if neg {
                out.push_str(" - ");
            } else {
                out.push_str(" + ");
            }
            let power = match k {
                0 => String::new(),
                1 => var.to_string(),
                _ if latex => format!("{var}^{{{k}}}"),
                _ => format!("{var}^{k}"),
            };
            if power.is_empty() {
                out.push_str(&mag);
            } else if mag == "1" {
                out.push_str(&power);
            } else {
                out.push_str(&mag);
                out.push_str(&power);
            }
        }
        out
    }
}

impl<C: Coeff + From<i64>> Poly<C> {
    /// Convenience constructor from machine integers, lowest degree first.
    pub fn from_ints(v: &[i64]) -> Self {
        Poly::new(v.iter().map(|&x| C::from(x)).collect())
    }
}

impl<C: fmt::Debug> fmt::Debug for Poly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly{:?}", self.coeffs)
    }
}

impl<C: Coeff> Add for &Poly<C> {
    type Output = Poly<C>;
    fn add(self, rhs: Self) -> Poly<C> {
        let (long, short) = if self.coeffs.len() >= rhs.coeffs.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut out = long.coeffs.clone();
        for (i, c) in short.coeffs.iter().enumerate() {
            out[i] += c.clone();
        }
        Poly::new(out)
    }
}

impl<C: Coeff> Sub for &Poly<C> {
    type Output = Poly<C>;
    fn sub(self, rhs: Self) -> Poly<C> {
        let mut out = self.coeffs.clone();
        if rhs.coeffs.len() > out.len() {
            out.resize(rhs.coeffs.len(), C::zero());
        }
        for (i, c) in rhs.coeffs.iter().enumerate() {
            out[i] -= c.clone();
        }
        Poly::new(out)
    }
}

impl<C: Coeff> Mul for &Poly<C> {
    type Output = Poly<C>;
    fn mul(self, rhs: Self) -> Poly<C> {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![C::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a.clone() * b.clone();
            }
        }
        Poly::new(out)
    }
}

impl<C: Coeff> Neg for &Poly<C> {
    type Output = Poly<C>;
    fn neg(self) -> Poly<C> {
        Poly {
            coeffs: self.coeffs.iter().map(|c| -c.clone()).collect(),
        }
    }
}

macro_rules! forward_owned_binop {
    ($($op:ident / $f:ident),*) => {$(
        impl<C: Coeff> $op for Poly<C> {
            type Output = Poly<C>;
            fn $f(self, rhs: Self) -> Poly<C> {
                (&self).$f(&rhs)
            }
        }
        impl<C: Coeff> $op<&Poly<C>> for Poly<C> {
            type Output = Poly<C>;
            fn $f(self, rhs: &Poly<C>) -> Poly<C> {
                (&self).$f(rhs)
            }
        }
    )*};
}

forward_owned_binop!(Add / add, Sub / sub, Mul / mul);

impl<C: Coeff> Neg for Poly<C> {
    type Output = Poly<C>;
    fn neg(self) -> Poly<C> {
        -&self
    }
}

impl<C: Coeff> AddAssign<&Poly<C>> for Poly<C> {
    fn add_assign(&mut self, rhs: &Poly<C>) {
        *self = &*self + rhs;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{Int, IntPoly, Rat, RatPoly};
    use proptest::prelude::*;

    fn ip(v: &[i64]) -> IntPoly {
        Poly::from_ints(v)
    }

    #[test]
    fn canonical_form() {
        assert_eq!(ip(&[1, 2, 0, 0]), ip(&[1, 2]));
        assert!(ip(&[0, 0]).is_zero());
        assert_eq!(IntPoly::zero().degree(), None);
        assert_eq!(ip(&[0, 0, 5]).degree(), Some(2));
        assert_eq!(IntPoly::monomial(Int::from(0), 7), IntPoly::zero());
    }

    #[test]
    fn ring_operations() {
        let a = ip(&[1, 2, 3]);
        let b = ip(&[-1, 0, 0, 4]);
        assert_eq!(&a + &b, ip(&[0, 2, 3, 4]));
        assert_eq!(&a - &a, IntPoly::zero());
        assert_eq!(&a * &b, ip(&[-1, -2, -3, 4, 8, 12]));
        assert_eq!(&a * &IntPoly::zero(), IntPoly::zero());
        assert_eq!(-&b, ip(&[1, 0, 0, -4]));
    }

    #[test]
    fn pow_and_substitution() {
        let p = ip(&[1, 1]);
        assert_eq!(p.pow(0), IntPoly::one());
        assert_eq!(p.pow(4), ip(&[1, 4, 6, 4, 1]));
        assert_eq!(ip(&[1, -2, 1]).substitute_power(2), ip(&[1, 0, -2, 0, 1]));
        assert_eq!(ip(&[3]).substitute_power(5), ip(&[3]));
    }

    #[test]
    fn eval_points() {
        let p = ip(&[1, 0, 1, 2]);
        assert_eq!(p.eval(&Int::from(1)), Int::from(4));
        assert_eq!(p.eval(&Int::from(-1)), Int::from(0));
        assert_eq!(p.eval(&Int::from(2)), Int::from(21));
    }

    #[test]
    fn exact_division() {
        let num = ip(&[-1, 0, 0, 0, 0, 0, 1]); // t⁶ − 1
        let den = ip(&[-1, 1]); // t − 1
        assert_eq!(num.exact_div(&den).unwrap(), ip(&[1, 1, 1, 1, 1, 1]));
        let q = num.exact_div(&ip(&[1, 1, 1])).unwrap();
        assert_eq!(&q * &ip(&[1, 1, 1]), num);
    }

    #[test]
    fn exact_division_failures() {
        assert!(ip(&[1, 1]).exact_div(&IntPoly::zero()).is_err());
        assert!(ip(&[1, 1]).exact_div(&ip(&[0, 0, 1])).is_err());
        assert!(ip(&[1, 0, 1]).exact_div(&ip(&[1, 1])).is_err());
        // 2t + 2 is not divisible by 4 over the integers at the leading step
        assert!(ip(&[2, 2]).exact_div(&ip(&[4])).is_err());
        // ... but it is over the rationals.
        let num: RatPoly = Poly::new(vec![Rat::from(Int::from(2)), Rat::from(Int::from(2))]);
        let den = RatPoly::constant(Rat::from(Int::from(4)));
        assert!(num.exact_div(&den).is_ok());
    }

    #[test]
    fn rendering() {
        assert_eq!(ip(&[1, 3, 6]).display("q"), "1 + 3q + 6q^2");
        assert_eq!(ip(&[1, 0, -1]).display("q"), "1 - q^2");
        assert_eq!(ip(&[0, 1]).display("q"), "q");
        assert_eq!(ip(&[-1, -1]).display("q"), "-1 - q");
        assert_eq!(IntPoly::zero().display("q"), "0");
        assert_eq!(ip(&[1, 0, 13]).display_latex("q"), "1 + 13q^{2}");
        assert_eq!(ip(&[2]).display("q"), "2");
    }

    proptest! {
        #[test]
        fn mul_commutes(a in proptest::collection::vec(-6i64..6, 0..8),
                        b in proptest::collection::vec(-6i64..6, 0..8)) {
            let (a, b) = (ip(&a), ip(&b));
            prop_assert_eq!(&a * &b, &b * &a);
        }

        #[test]
        fn mul_distributes(a in proptest::collection::vec(-6i64..6, 0..6),
                           b in proptest::collection::vec(-6i64..6, 0..6),
                           c in proptest::collection::vec(-6i64..6, 0..6)) {
            let (a, b, c) = (ip(&a), ip(&b), ip(&c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        }

        #[test]
        fn division_inverts_multiplication(
            a in proptest::collection::vec(-6i64..6, 1..7),
            b in proptest::collection::vec(-6i64..6, 1..7)) {
            let (a, b) = (ip(&a), ip(&b));
            prop_assume!(!a.is_zero() && !b.is_zero());
            let p = &a * &b;
            prop_assert_eq!(p.exact_div(&a).unwrap(), b);
        }

        #[test]
        fn eval_is_ring_hom(a in proptest::collection::vec(-6i64..6, 0..7),
                            b in proptest::collection::vec(-6i64..6, 0..7),
                            x in -4i64..5) {
            let (a, b) = (ip(&a), ip(&b));
            let x = Int::from(x);
            prop_assert_eq!((&a * &b).eval(&x), a.eval(&x) * b.eval(&x));
            prop_assert_eq!((&a + &b).eval(&x), a.eval(&x) + b.eval(&x));
        }
    }
}
