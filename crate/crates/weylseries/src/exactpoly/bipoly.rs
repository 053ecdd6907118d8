use std::fmt;

use super::poly::Poly;
use super::scalar::{Coeff, ExactDiv};
use super::trunc::TruncSeries;
use crate::{Error, Result};

/// Accumulator for doubly graded sums: truncated in `q` (rows), exact in
/// `s` (row entries). Census sums land here as outer products of a `q`
/// series against an `s` polynomial, one per characteristic-polynomial
/// class.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BiSeries<C> {
    q_order: usize,
    rows: Vec<Vec<C>>, // rows[i][j] is the coefficient of q^i s^j
}

impl<C: Coeff> BiSeries<C> {
    pub fn zero(q_order: usize) -> Self {
        BiSeries {
            q_order,
            rows: vec![Vec::new(); q_order + 1],
        }
    }

    pub fn q_order(&self) -> usize {
        self.q_order
    }

    /// `self += weight · q_part(q) · s_part(s)`.
    pub fn add_outer(&mut self, weight: &C, q_part: &TruncSeries<C>, s_part: &Poly<C>) {
        assert!(
            q_part.order() >= self.q_order,
            "q series carries too little precision"
        );
        if weight.is_zero() || s_part.is_zero() {
            return;
        }
        for (i, row) in self.rows.iter_mut().enumerate() {
            let qc = q_part.coeff(i);
            if qc.is_zero() {
                continue;
            }
            let wq = weight.clone() * qc.clone();
            if row.len() < s_part.coeffs().len() {
                row.resize(s_part.coeffs().len(), C::zero());
            }
            for (j, sc) in s_part.coeffs().iter().enumerate() {
                if !sc.is_zero() {
                    row[j] += wq.clone() * sc.clone();
                }
            }
        }
    }

    /// Multiplies by a polynomial in `q` alone, truncating at the order.
    pub fn mul_q_poly(&mut self, p: &Poly<C>) {
        let mut rows = vec![Vec::new(); self.q_order + 1];
        for (k, c) in p.coeffs().iter().enumerate() {
            if k > self.q_order {
                break;
            }
            if c.is_zero() {
                continue;
            }
            for i in 0..=(self.q_order - k) {
                let src = &self.rows[i];
                if src.is_empty() {
                    continue;
                }
                let dst = &mut rows[i + k];
                if dst.len() < src.len() {
                    dst.resize(src.len(), C::zero());
                }
                for (j, a) in src.iter().enumerate() {
                    if !a.is_zero() {
                        dst[j] += c.clone() * a.clone();
                    }
                }
            }
        }
        self.rows = rows;
    }

    /// Divides every coefficient exactly, reporting the first failure by
    /// its `q` degree.
    pub fn exact_div_scalar(&self, d: &C) -> Result<Self>
    where
        C: ExactDiv,
    {
        let mut rows = Vec::with_capacity(self.rows.len());
        for (i, row) in self.rows.iter().enumerate() {
            let mut out = Vec::with_capacity(row.len());
            for c in row {
                out.push(
                    c.exact_div(d)
                        .ok_or(Error::NonIntegral { degree: i })?,
                );
            }
            rows.push(out);
        }
        Ok(BiSeries {
            q_order: self.q_order,
            rows,
        })
    }

    /// Checks that every coefficient above `q_bound` vanished, then strips
    /// the guard band and returns the exact bivariate polynomial.
    pub fn into_bipoly(self, q_bound: usize) -> Result<BiPoly<C>>
    where
        C: fmt::Debug,
    {
        for (i, row) in self.rows.iter().enumerate().skip(q_bound + 1) {
            if let Some(j) = row.iter().position(|c| !c.is_zero()) {
                return Err(Error::DegreeBound {
                    degree: i,
                    bound: q_bound,
                    value: format!("{:?} (at s^{j})", row[j]),
                });
            }
        }
        let mut rows = self.rows;
        rows.truncate(q_bound + 1);
        Ok(BiPoly::from_rows(rows))
    }
}

/// Bivariate polynomial, exact in both variables. Rows are graded by `q`,
/// row entries by `s`; the representation is canonical (no trailing zero
/// rows, no trailing zeros within a row).
#[derive(Clone, PartialEq, Eq)]
pub struct BiPoly<C> {
    rows: Vec<Vec<C>>,
}

impl<C: Coeff> BiPoly<C> {
    pub fn zero() -> Self {
        BiPoly { rows: Vec::new() }
    }

    pub fn one() -> Self {
        BiPoly {
            rows: vec![vec![C::one()]],
        }
    }

    pub fn from_rows(mut rows: Vec<Vec<C>>) -> Self {
        for row in &mut rows {
            while row.last().is_some_and(|c| c.is_zero()) {
                row.pop();
            }
        }
        while rows.last().is_some_and(|r| r.is_empty()) {
            rows.pop();
        }
        BiPoly { rows }
    }

    pub fn is_zero(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn rows(&self) -> &[Vec<C>] {
        &self.rows
    }

    pub fn coeff(&self, qk: usize, sk: usize) -> C {
        self.rows
            .get(qk)
            .and_then(|r| r.get(sk))
            .cloned()
            .unwrap_or_else(C::zero)
    }

    /// Degree in `q`, or `None` when zero.
    pub fn q_degree(&self) -> Option<usize> {
        self.rows.len().checked_sub(1)
    }

    /// Degree in `s`, or `None` when zero.
    pub fn s_degree(&self) -> Option<usize> {
        self.rows.iter().map(|r| r.len()).max().and_then(|m| m.checked_sub(1))
    }

    /// The coefficient of `s^j`, as a polynomial in `q`.
    pub fn s_column(&self, j: usize) -> Poly<C> {
        Poly::new(
            self.rows
                .iter()
                .map(|r| r.get(j).cloned().unwrap_or_else(C::zero))
                .collect(),
        )
    }

    /// Specialises `s := q`, the bigraded-to-singly-graded collapse.
    pub fn subst_s_to_q(&self) -> Poly<C> {
        let mut out = Vec::new();
        for (i, row) in self.rows.iter().enumerate() {
            for (j, c) in row.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                if out.len() <= i + j {
                    out.resize(i + j + 1, C::zero());
                }
                out[i + j] += c.clone();
            }
        }
        Poly::new(out)
    }

    pub fn iter_coeffs(&self) -> impl Iterator<Item = (usize, usize, &C)> {
        self.rows.iter().enumerate().flat_map(|(i, row)| {
            row.iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(move |(j, c)| (i, j, c))
        })
    }

    /// Plain text, row-major ascending: `1 + q^3 s + q^4 s^2`.
    pub fn display(&self, q: &str, s: &str) -> String
    where
        C: fmt::Display,
    {
        self.render(q, s, false)
    }

    pub fn display_latex(&self, q: &str, s: &str) -> String
    where
        C: fmt::Display,
    {
        self.render(q, s, true)
    }

    fn render(&self, q: &str, s: &str, latex: bool) -> String
    where
        C: fmt::Display,
    {
        if self.is_zero() {
            return "0".to_string();
        }
        let var_pow = |var: &str, k: usize| -> String {
            match k {
                0 => String::new(),
                1 => var.to_string(),
                _ if latex => format!("{var}^{{{k}}}"),
                _ => format!("{var}^{k}"),
            }
        };
        let mut out = String::new();
        for (i, j, c) in self.iter_coeffs() {
            let txt = c.to_string();
            let (neg, mag) = match txt.strip_prefix('-') {
                Some(rest) => (true, rest.to_string()),
                None => (false, txt),
            };
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
            let mut vars = var_pow(q, i);
            let spow = var_pow(s, j);
            if !vars.is_empty() && !spow.is_empty() {
                vars.push(' ');
            }
            vars.push_str(&spow);
            if vars.is_empty() {
                out.push_str(&mag);
            } else if mag == "1" {
                out.push_str(&vars);
            } else {
                out.push_str(&mag);
                out.push(' ');
                out.push_str(&vars);
            }
        }
        out
    }
}

impl<C: fmt::Debug> fmt::Debug for BiPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BiPoly{:?}", self.rows)
    }
}
