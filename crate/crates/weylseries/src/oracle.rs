//! Independent cross-checks for the main computation path.
//!
//! Everything here recomputes from first principles with deliberately plain
//! machinery: list-based group closure over `Vec<Vec<i64>>`, cofactor
//! characteristic polynomials on hand-rolled coefficient vectors, and
//! monomial-by-monomial symmetric-power traces. Nothing is shared with the
//! main path beyond big-integer arithmetic and the census container being
//! filled, so a defect would have to hit two unrelated implementations the
//! same way to go unnoticed.

use std::collections::BTreeMap;

use num_traits::Zero;
use rustc_hash::FxHashMap;

use crate::census::CharPolyCensus;
use crate::exactpoly::Poly;
use crate::groups::{GroupDescriptor, ReflectionRep};
use crate::{Error, Int, IntPoly, Result};

/// Outcome of one oracle comparison, ready for reporting.
#[derive(Clone, Debug)]
pub struct OracleReport {
    pub check: String,
    pub instance: String,
    pub expected: String,
    pub found: String,
    pub passed: bool,
}

impl std::fmt::Display for OracleReport {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "{} [{}]: {}",
            self.check,
            self.instance,
            if self.passed { "ok" } else { "FAIL" }
        )?;
        if !self.passed {
            write!(f, "\n  expected {}\n  found    {}", self.expected, self.found)?;
        }
        Ok(())
    }
}

type OMat = Vec<Vec<i64>>;

fn omat_identity(n: usize) -> OMat {
    (0..n)
        .map(|i| (0..n).map(|j| i64::from(i == j)).collect())
        .collect()
}

fn omat_mul(a: &OMat, b: &OMat) -> OMat {
    let n = a.len();
    let mut out = vec![vec![0i64; n]; n];
    for i in 0..n {
        for k in 0..n {
            let aik = a[i][k];
            if aik == 0 {
                continue;
            }
            for j in 0..n {
                out[i][j] += aik * b[k][j];
            }
        }
    }
    out
}

/// Closure of the generated group, with the visited set kept as a plain
/// list behind linear membership tests.
fn closure(gens: &[OMat], size: usize, limit: usize) -> Result<Vec<OMat>> {
    let mut elems = vec![omat_identity(size)];
    let mut next = 0;
    while next < elems.len() {
        let cur = elems[next].clone();
        next += 1;
        for g in gens {
            let p = omat_mul(&cur, g);
            if !elems.contains(&p) {
                if elems.len() >= limit {
                    return Err(Error::OracleScale(format!(
                        "group closure exceeded {limit} elements"
                    )));
                }
                elems.push(p);
            }
        }
    }
    Ok(elems)
}

fn opoly_mul(a: &[Int], b: &[Int]) -> Vec<Int> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![Int::from(0); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn opoly_trim(mut v: Vec<Int>) -> Vec<Int> {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
    v
}

/// `det(t·I − M)` by recursive cofactor expansion over polynomial entries.
fn oracle_charpoly(m: &OMat) -> Vec<Int> {
    fn det(rows: &[Vec<Vec<Int>>]) -> Vec<Int> {
        let n = rows.len();
        if n == 0 {
            return vec![Int::from(1)];
        }
        if n == 1 {
            return rows[0][0].clone();
        }
        let mut acc: Vec<Int> = Vec::new();
        for j in 0..n {
            if rows[0][j].iter().all(|c| c.is_zero()) {
                continue;
            }
            let minor: Vec<Vec<Vec<Int>>> = rows[1..]
                .iter()
                .map(|r| {
                    r.iter()
                        .enumerate()
                        .filter(|&(k, _)| k != j)
                        .map(|(_, e)| e.clone())
                        .collect()
                })
                .collect();
            let mut term = opoly_mul(&rows[0][j], &det(&minor));
            if j % 2 == 1 {
                for c in &mut term {
                    *c = -c.clone();
                }
            }
            if acc.len() < term.len() {
                acc.resize(term.len(), Int::from(0));
            }
            for (k, c) in term.into_iter().enumerate() {
                acc[k] += c;
            }
        }
        acc
    }
    let n = m.len();
    let entries: Vec<Vec<Vec<Int>>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    if i == j {
                        vec![Int::from(-m[i][j]), Int::from(1)]
                    } else {
                        vec![Int::from(-m[i][j])]
                    }
                })
                .collect()
        })
        .collect();
    opoly_trim(det(&entries))
}

/// Census by exhaustive listing: every element of the closure gets its
/// characteristic polynomial computed by cofactor expansion. Intended for
/// Weyl groups of at most a few thousand elements.
pub fn brute_census(rep: &ReflectionRep, limit: usize) -> Result<CharPolyCensus> {
    let size = rep.matrix_size();
    let gens: Vec<OMat> = rep
        .generators()
        .iter()
        .map(|g| {
            (0..size)
                .map(|i| (0..size).map(|j| *g.get(i, j)).collect())
                .collect()
        })
        .collect();
    let elems = closure(&gens, size, limit)?;
    let central = rep.rank() - rep.matrix_size();
    let mut counts: BTreeMap<Vec<Int>, u64> = BTreeMap::new();
    for m in &elems {
        let mut chi = oracle_charpoly(m);
        for _ in 0..central {
            chi = opoly_mul(&chi, &[Int::from(-1), Int::from(1)]);
        }
        *counts.entry(chi).or_insert(0) += 1;
    }
    CharPolyCensus::from_entries(
        rep.rank(),
        counts
            .into_iter()
            .map(|(chi, c)| (Poly::new(chi), Int::from(c))),
    )
}

/// Compares the averaged symmetric-power traces of the Weyl action with the
/// degree product form of the Molien series, coefficient by coefficient up
/// to degree `d_max`. Small instances only: total rank at most 4 and
/// `d_max` at most 14, so the monomial bases stay tiny.
pub fn molien_trace(desc: &GroupDescriptor, d_max: usize) -> Result<OracleReport> {
    let r = desc.rank();
    if r > 4 {
        return Err(Error::OracleScale(format!(
            "molien_trace handles rank ≤ 4, got {r}"
        )));
    }
    if d_max > 14 {
        return Err(Error::OracleScale(format!(
            "molien_trace handles degree ≤ 14, got {d_max}"
        )));
    }
    let rep = desc.reflection_rep();
    let gens: Vec<OMat> = rep
        .embedded_generators()
        .iter()
        .map(|g| {
            (0..r)
                .map(|i| (0..r).map(|j| *g.get(i, j)).collect())
                .collect()
        })
        .collect();
    let elems = closure(&gens, r, 2000)?;
    let order = Int::from(elems.len());

    // Expected: the number of ways to write m as a sum of characteristic
    // degrees, i.e. the coefficients of Π 1/(1 − q^d).
    let mut expected = vec![Int::from(0); d_max + 1];
    expected[0] = Int::from(1);
    for &dg in desc.degrees().as_slice() {
        for m in dg..=d_max {
            let prev = expected[m - dg].clone();
            expected[m] += prev;
        }
    }

    // Found: averaged traces on each symmetric power.
    let mut found = Vec::with_capacity(d_max + 1);
    let mut exact = true;
    for m in 0..=d_max {
        let basis = monomials(r, m);
        let mut total = Int::from(0);
        for w in &elems {
            total += sym_power_trace(w, &basis, m);
        }
        let (avg, rem) = num_integer::Integer::div_rem(&total, &order);
        if !rem.is_zero() {
            exact = false;
        }
        found.push(avg);
    }
    let passed = exact && found == expected;
    Ok(OracleReport {
        check: "molien_trace".to_string(),
        instance: format!("{} to degree {d_max}", desc.canonical()),
        expected: format!("{expected:?}"),
        found: if exact {
            format!("{found:?}")
        } else {
            format!("{found:?} (with non-integral averages)")
        },
        passed,
    })
}

/// All exponent vectors of total degree `m` in `r` variables.
fn monomials(r: usize, m: usize) -> Vec<Vec<u8>> {
    fn rec(r: usize, m: usize, cur: &mut Vec<u8>, out: &mut Vec<Vec<u8>>) {
        if r == 1 {
            cur.push(m as u8);
            out.push(cur.clone());
            cur.pop();
            return;
        }
        for e in 0..=m {
            cur.push(e as u8);
            rec(r - 1, m - e, cur, out);
            cur.pop();
        }
    }
    if r == 0 {
        return if m == 0 { vec![vec![]] } else { Vec::new() };
    }
    let mut out = Vec::new();
    rec(r, m, &mut Vec::new(), &mut out);
    out
}

/// Trace of `w` on the degree-`m` symmetric power: for every basis monomial
/// x^e, expand Π_j (Σ_i w[i][j]·x_i)^(e_j) and read off the coefficient of
/// x^e itself.
fn sym_power_trace(w: &OMat, basis: &[Vec<u8>], m: usize) -> i128 {
    let r = w.len();
    if m == 0 {
        return 1;
    }
    let mut trace: i128 = 0;
    for e in basis {
        let mut terms: FxHashMap<Vec<u8>, i128> = FxHashMap::default();
        terms.insert(vec![0u8; r], 1);
        for (j, &ej) in e.iter().enumerate() {
            for _ in 0..ej {
                let mut nxt: FxHashMap<Vec<u8>, i128> =
                    FxHashMap::with_capacity_and_hasher(terms.len() * 2, Default::default());
                for (exp, coeff) in &terms {
                    for i in 0..r {
                        let a = w[i][j];
                        if a == 0 {
                            continue;
                        }
                        // discard anything already overshooting the target
                        if exp[i] + 1 > e[i] {
                            continue;
                        }
                        let mut ne = exp.clone();
                        ne[i] += 1;
                        *nxt.entry(ne).or_insert(0) += coeff * i128::from(a);
                    }
                }
                terms = nxt;
            }
        }
        if let Some(c) = terms.get(e) {
            trace += c;
        }
    }
    trace
}

/// Closed form for `SU(2)`: the Poincaré polynomial of the commuting
/// `n`-tuple space is `((1+q)^n (1+q²) + (1−q)^n (1−q²)) / 2`, computed
/// here with local convolutions only.
pub fn su2_reference(n: usize) -> IntPoly {
    let mut plus = vec![Int::from(1)];
    let mut minus = vec![Int::from(1)];
    for _ in 0..n {
        plus = opoly_mul(&plus, &[Int::from(1), Int::from(1)]);
        minus = opoly_mul(&minus, &[Int::from(1), Int::from(-1)]);
    }
    plus = opoly_mul(&plus, &[Int::from(1), Int::from(0), Int::from(1)]);
    minus = opoly_mul(&minus, &[Int::from(1), Int::from(0), Int::from(-1)]);
    let mut out = Vec::with_capacity(plus.len());
    let two = Int::from(2);
    for (a, b) in plus.into_iter().zip(minus) {
        let (half, rem) = num_integer::Integer::div_rem(&(a + b), &two);
        assert!(rem.is_zero(), "reference series must have integer halves");
        out.push(half);
    }
    Poly::new(out)
}
