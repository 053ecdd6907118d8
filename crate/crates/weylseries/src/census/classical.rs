//! Closed-form censuses for the classical families.
//!
//! * `A_{n−1}` is the symmetric group `S_n`: elements of cycle type
//!   `λ ⊢ n` number `n!/z_λ` with `z_λ = Π i^{a_i}·a_i!`, and act on the
//!   reflection representation with characteristic polynomial
//!   `Π (t^{λ_i} − 1) / (t − 1)`.
//! * `B_n`/`C_n` is the signed permutation group: signed cycle types are
//!   pairs `(λ, μ)` with `|λ| + |μ| = n` (positive and negative cycles),
//!   `2^n·n!/(z₂(λ)·z₂(μ))` elements each with `z₂(ν) = Π (2i)^{a_i}·a_i!`,
//!   and characteristic polynomial `Π (t^{λ_i} − 1) · Π (t^{μ_j} + 1)`.
//! * `D_n` consists of the signed permutations with an even number of sign
//!   changes, which is exactly the types with an even number of negative
//!   cycles, at unchanged per-type counts.

use super::CharPolyCensus;
use crate::groups::Family;
use crate::{Error, Int, IntPoly, Result};

/// Census of one classical factor from cycle-type combinatorics; errors on
/// exceptional families.
pub fn combinatorial_census(family: Family, rank: usize) -> Result<CharPolyCensus> {
    let (pairs, expected_total) = match family {
        Family::A => {
            let n = rank + 1;
            let nf = factorial(n);
            let tm1 = IntPoly::from_ints(&[-1, 1]);
            let mut pairs = Vec::new();
            for lam in partitions(n) {
                let count = exact(&nf, &z_perm(&lam));
                let mut chi = IntPoly::one();
                for &part in &lam {
                    chi = &chi * &cyc_minus(part);
                }
                pairs.push((chi.exact_div(&tm1)?, count));
            }
            (pairs, nf)
        }
        Family::B | Family::C => (signed_pairs(rank, false)?, b_order(rank)),
        Family::D => {
            let mut total = b_order(rank);
            total = exact(&total, &Int::from(2));
            (signed_pairs(rank, true)?, total)
        }
        other => {
            return Err(Error::Inconsistent(format!(
                "no combinatorial census for the exceptional family {other}"
            )))
        }
    };
    let census = CharPolyCensus::from_entries(rank, pairs)?;
    if census.total() != &expected_total {
        return Err(Error::Inconsistent(format!(
            "combinatorial census of {family}{rank} totals {}, expected {expected_total}",
            census.total()
        )));
    }
    Ok(census)
}

/// Signed cycle types `(λ, μ)`; `even_negative` restricts to even `ℓ(μ)`
/// (the `D` case).
fn signed_pairs(rank: usize, even_negative: bool) -> Result<Vec<(IntPoly, Int)>> {
    let base = b_order(rank);
    let mut pairs = Vec::new();
    for k in 0..=rank {
        for lam in partitions(k) {
            let zl = z_signed(&lam);
            for mu in partitions(rank - k) {
                if even_negative && mu.len() % 2 != 0 {
                    continue;
                }
                let count = exact(&base, &(&zl * z_signed(&mu)));
                let mut chi = IntPoly::one();
                for &part in &lam {
                    chi = &chi * &cyc_minus(part);
                }
                for &part in &mu {
                    chi = &chi * &cyc_plus(part);
                }
                pairs.push((chi, count));
            }
        }
    }
    Ok(pairs)
}

/// All partitions of `n`, parts descending; `[[]]` for `n = 0`.
fn partitions(n: usize) -> Vec<Vec<usize>> {
    fn rec(n: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if n == 0 {
            out.push(cur.clone());
            return;
        }
        for p in (1..=n.min(max)).rev() {
            cur.push(p);
            rec(n - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

fn factorial(n: usize) -> Int {
    (1..=n).fold(Int::from(1), |acc, k| acc * Int::from(k))
}

/// `2^n · n!`, the order of the signed permutation group.
fn b_order(n: usize) -> Int {
    factorial(n) * (Int::from(1) << n)
}

/// Centraliser order of a cycle type in `S_n`: `Π i^{a_i} · a_i!`.
fn z_perm(lam: &[usize]) -> Int {
    let mut z = Int::from(1);
    let mut run = 0usize;
    for (idx, &p) in lam.iter().enumerate() {
        z *= Int::from(p);
        run += 1;
        if idx + 1 == lam.len() || lam[idx + 1] != p {
            z *= factorial(run);
            run = 0;
        }
    }
    z
}

/// Signed analogue: `Π (2i)^{a_i} · a_i!`.
fn z_signed(lam: &[usize]) -> Int {
    let mut z = Int::from(1);
    let mut run = 0usize;
    for (idx, &p) in lam.iter().enumerate() {
        z *= Int::from(2 * p);
        run += 1;
        if idx + 1 == lam.len() || lam[idx + 1] != p {
            z *= factorial(run);
            run = 0;
        }
    }
    z
}

/// `t^k − 1`.
fn cyc_minus(k: usize) -> IntPoly {
    let mut v = vec![0i64; k + 1];
    v[0] = -1;
    v[k] = 1;
    IntPoly::from_ints(&v)
}

/// `t^k + 1`.
fn cyc_plus(k: usize) -> IntPoly {
    let mut v = vec![0i64; k + 1];
    v[0] = 1;
    v[k] = 1;
    IntPoly::from_ints(&v)
}

fn exact(num: &Int, den: &Int) -> Int {
    use num_integer::Integer;
    use num_traits::Zero;
    let (q, r) = num.div_rem(den);
    assert!(r.is_zero(), "class size formula must divide the group order");
    q
}
