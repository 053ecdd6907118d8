//! The series themselves.
//!
//! Everything here evaluates one master expression and its refinements over
//! a characteristic-polynomial census. Writing `χ_w(t) = det(tI − w)` for
//! the census keys, the one-variable Poincaré polynomial of the identity
//! component of the space of commuting `n`-tuples is
//!
//! ```text
//!   P(q) = (Π_i (1 − q^(2 d_i)) / |W|) · Σ_w det(1 + q w)^n / det(1 − q² w)
//! ```
//!
//! The two-variable refinement keeps the torus grading separate (`s` for
//! the torus directions, `q` for the flag-manifold directions), replacing
//! `det(1 + q w)^n` with `det(1 + s w)^n`; the reduced series of the wedge
//! summands replaces it with `(det(1 + s w) − 1)^m`; and the deformation
//! series in `t` stacks those up, one coefficient per `m`.
//!
//! All evaluation happens in truncated integer series with a guard band
//! above the a-priori degree bound. The band must come out identically
//! zero and the final division by `|W|` must be exact; both conditions are
//! checked at run time, so an answer that comes back at all has passed two
//! nontrivial internal proofs.

use std::time::{Duration, Instant};

use num_integer::binomial;
use num_traits::Zero;

use crate::census::{CensusSource, CharPolyCensus};
use crate::exactpoly::dets_from_charpoly;
use crate::groups::GroupDescriptor;
use crate::{Config, Error, Int, IntBiPoly, IntPoly, IntSeries, Result};

/// The global factor `A_W(q) = Π_i (1 − q^(2 d_i)) / |W|`, kept as an
/// integer numerator and a deferred scalar divisor so that every
/// computation stays in `ℤ[q]` until the final exactness-checked division.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AwFactor {
    pub numerator: IntPoly,
    pub weyl_order: Int,
}

pub fn a_w(desc: &GroupDescriptor) -> AwFactor {
    let mut numerator = IntPoly::one();
    for &d in desc.degrees().as_slice() {
        numerator = &numerator * &(IntPoly::one() - IntPoly::monomial(Int::from(1), 2 * d));
    }
    AwFactor {
        numerator,
        weyl_order: desc.weyl_order(),
    }
}

fn check_census(desc: &GroupDescriptor, census: &CharPolyCensus) -> Result<()> {
    if census.rank() != desc.rank() || *census.total() != desc.weyl_order() {
        return Err(Error::CensusMismatch {
            reason: format!(
                "census has rank {} and {} elements, {} needs rank {} and {}",
                census.rank(),
                census.total(),
                desc.canonical(),
                desc.rank(),
                desc.weyl_order()
            ),
        });
    }
    Ok(())
}

fn check_cap(n: usize, config: &Config) -> Result<()> {
    if n > config.n_cap {
        return Err(Error::NCapExceeded {
            n,
            cap: config.n_cap,
        });
    }
    Ok(())
}

fn guard_margin(desc: &GroupDescriptor, config: &Config) -> usize {
    config.margin.unwrap_or(2 * desc.degrees().max())
}

/// Strips the guard band (erroring on any nonzero coefficient in it) and
/// divides the surviving coefficients exactly by `|W|`.
fn finish_poly(acc: &IntSeries, bound: usize, weyl_order: &Int) -> Result<IntPoly> {
    use crate::exactpoly::ExactDiv;
    for k in bound + 1..=acc.order() {
        if !acc.coeff(k).is_zero() {
            return Err(Error::DegreeBound {
                degree: k,
                bound,
                value: acc.coeff(k).to_string(),
            });
        }
    }
    let mut coeffs = Vec::with_capacity(bound + 1);
    for k in 0..=bound.min(acc.order()) {
        coeffs.push(
            acc.coeff(k)
                .exact_div(weyl_order)
                .ok_or(Error::NonIntegral { degree: k })?,
        );
    }
    Ok(IntPoly::new(coeffs))
}

/// One-variable Poincaré polynomial of the identity component of the space
/// of commuting `n`-tuples,
///
/// ```text
///   A_W(q) · Σ_w det(1 + q w)^n / det(1 − q² w),
/// ```
///
/// summed census class by census class. The result is a polynomial of
/// degree at most `2 Σ (d_i − 1) + n·r`; the computation carries a guard
/// band above that bound and insists it comes back zero.
pub fn poincare_hom(
    desc: &GroupDescriptor,
    n: usize,
    census: &CharPolyCensus,
    config: &Config,
) -> Result<IntPoly> {
    check_census(desc, census)?;
    check_cap(n, config)?;
    let bound = desc.degree_bound(n);
    let order = bound + guard_margin(desc, config);
    let mut acc = IntSeries::zero(order);
    for (chi, count) in census.entries() {
        let dets = dets_from_charpoly(chi)?;
        let inv = IntSeries::from_poly(&dets.q_squared, order).invert_unit()?;
        acc.add_scaled(&inv.mul_poly(&dets.plus.pow(n)), count);
    }
    let aw = a_w(desc);
    finish_poly(&acc.mul_poly(&aw.numerator), bound, &aw.weyl_order)
}

/// Shared tail of the two-variable computations: multiply the accumulated
/// `(q, s)` grid by the `A_W` numerator, divide by `|W|`, and cash in the
/// guard band.
fn finish_bipoly(
    mut acc: crate::exactpoly::BiSeries<Int>,
    q_bound: usize,
    aw: &AwFactor,
) -> Result<IntBiPoly> {
    acc.mul_q_poly(&aw.numerator);
    acc.exact_div_scalar(&aw.weyl_order)?.into_bipoly(q_bound)
}

/// Two-variable Hilbert–Poincaré polynomial: coefficient of `q^i s^j` is
/// the rank of the `W`-invariants in degree `(i, j)` of
/// `H(G/T) ⊗ H(Tⁿ)`. Specialising `s := q` must recover [`poincare_hom`];
/// that identity is recomputed and asserted on every call.
pub fn hilbert_hom(
    desc: &GroupDescriptor,
    n: usize,
    census: &CharPolyCensus,
    config: &Config,
) -> Result<IntBiPoly> {
    check_census(desc, census)?;
    check_cap(n, config)?;
    let q_bound = desc.degree_bound(0);
    let order = q_bound + guard_margin(desc, config);
    let mut acc = crate::exactpoly::BiSeries::zero(order);
    for (chi, count) in census.entries() {
        let dets = dets_from_charpoly(chi)?;
        let inv = IntSeries::from_poly(&dets.q_squared, order).invert_unit()?;
        acc.add_outer(count, &inv, &dets.plus.pow(n));
    }
    let out = finish_bipoly(acc, q_bound, &a_w(desc))?;

    if out.s_degree().unwrap_or(0) > n * desc.rank() {
        return Err(Error::Inconsistent(format!(
            "two-variable series for {} at n = {n} has s-degree {:?}, above n·r = {}",
            desc.canonical(),
            out.s_degree(),
            n * desc.rank()
        )));
    }
    let specialised = out.subst_s_to_q();
    let direct = poincare_hom(desc, n, census, config)?;
    if specialised != direct {
        return Err(Error::Inconsistent(format!(
            "s := q specialisation disagrees with the one-variable series for {} at n = {n}",
            desc.canonical()
        )));
    }
    Ok(out)
}

/// Two-variable reduced series of the degree-`m` stable wedge summand,
///
/// ```text
///   A_W(q) · Σ_w (det(1 + s w) − 1)^m / det(1 − q² w).
/// ```
///
/// `m = 0` gives the one-point space, i.e. the constant polynomial `1`
/// (the formula itself produces it — the `m = 0` term is the Molien
/// identity in `q²`).
pub fn reduced_hom_hat(
    desc: &GroupDescriptor,
    m: usize,
    census: &CharPolyCensus,
    config: &Config,
) -> Result<IntBiPoly> {
    check_census(desc, census)?;
    check_cap(m, config)?;
    let q_bound = desc.degree_bound(0);
    let order = q_bound + guard_margin(desc, config);
    let mut acc = crate::exactpoly::BiSeries::zero(order);
    for (chi, count) in census.entries() {
        let dets = dets_from_charpoly(chi)?;
        let inv = IntSeries::from_poly(&dets.q_squared, order).invert_unit()?;
        let reduced = &dets.plus - &IntPoly::one();
        acc.add_outer(count, &inv, &reduced.pow(m));
    }
    finish_bipoly(acc, q_bound, &a_w(desc))
}

/// Coefficients of `t^0 … t^t_max` of the three-variable deformation
/// series
///
/// ```text
///   A_W(q) · Σ_w 1 / (det(1 − q² w) · (1 − t (det(1 + s w) − 1))),
/// ```
///
/// whose `t`-expansion stacks the reduced summand series: the coefficient
/// of `t^m` is [`reduced_hom_hat`] at `m`. This function builds the
/// coefficients in one pass with incrementally multiplied powers and then
/// checks each one against an independent [`reduced_hom_hat`] call.
pub fn comm_series(
    desc: &GroupDescriptor,
    t_max: usize,
    census: &CharPolyCensus,
    config: &Config,
) -> Result<Vec<IntBiPoly>> {
    check_census(desc, census)?;
    check_cap(t_max, config)?;
    let q_bound = desc.degree_bound(0);
    let order = q_bound + guard_margin(desc, config);
    let mut acc: Vec<crate::exactpoly::BiSeries<Int>> =
        (0..=t_max).map(|_| crate::exactpoly::BiSeries::zero(order)).collect();
    for (chi, count) in census.entries() {
        let dets = dets_from_charpoly(chi)?;
        let inv = IntSeries::from_poly(&dets.q_squared, order).invert_unit()?;
        let reduced = &dets.plus - &IntPoly::one();
        let mut power = IntPoly::one();
        for slot in acc.iter_mut() {
            slot.add_outer(count, &inv, &power);
            power = &power * &reduced;
        }
    }
    let aw = a_w(desc);
    let mut out = Vec::with_capacity(t_max + 1);
    for (m, slot) in acc.into_iter().enumerate() {
        let coeff = finish_bipoly(slot, q_bound, &aw)?;
        if coeff != reduced_hom_hat(desc, m, census, config)? {
            return Err(Error::Inconsistent(format!(
                "deformation coefficient t^{m} for {} disagrees with the direct summand series",
                desc.canonical()
            )));
        }
        out.push(coeff);
    }
    Ok(out)
}

/// Series of the nilpotent-tuple analogues: for every nilpotency class
/// `≥ 2` the identity components are (stably) indistinguishable from the
/// commuting case, so the payload is [`comm_series`] verbatim. Classes
/// `< 2` are not spaces of that kind and are refused.
pub fn xm_series(
    desc: &GroupDescriptor,
    nilpotency: usize,
    t_max: usize,
    census: &CharPolyCensus,
    config: &Config,
) -> Result<Vec<IntBiPoly>> {
    if nilpotency < 2 {
        return Err(Error::NilpotencyRange { got: nilpotency });
    }
    comm_series(desc, t_max, census, config)
}

/// One structural check on a computed polynomial, with both sides rendered
/// for reporting.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiagnosticCheck {
    pub name: String,
    pub expected: String,
    pub found: String,
    pub passed: bool,
}

impl DiagnosticCheck {
    fn new(name: &str, expected: impl ToString, found: impl ToString, passed: bool) -> Self {
        DiagnosticCheck {
            name: name.to_string(),
            expected: expected.to_string(),
            found: found.to_string(),
            passed,
        }
    }
}

/// The six structural identities every one-variable payload must satisfy.
///
/// 1. constant term `1` (connectedness);
/// 2. `P(1) = 2^(n·r)` (total rank);
/// 3. `P(−1) = 0` for `n·r ≥ 1` (vanishing Euler characteristic);
/// 4. coefficient of `q` equals `n ×` central rank (first Betti number);
/// 5. even- and odd-degree coefficients each sum to `2^(n·r − 1)` for
///    `n·r ≥ 1`;
/// 6. palindromic coefficients when `n` is odd (recorded as skipped for
///    even `n`).
pub fn diagnostics(desc: &GroupDescriptor, n: usize, p: &IntPoly) -> Vec<DiagnosticCheck> {
    let nr = n * desc.rank();
    let mut out = Vec::with_capacity(6);

    let constant = p.coeff(0);
    out.push(DiagnosticCheck::new(
        "constant term",
        1,
        &constant,
        constant == Int::from(1),
    ));

    let total = p.eval(&Int::from(1));
    let expected_total = Int::from(1) << nr;
    out.push(DiagnosticCheck::new(
        "total rank P(1)",
        format!("2^{nr} = {expected_total}"),
        &total,
        total == expected_total,
    ));

    let euler = p.eval(&Int::from(-1));
    let expected_euler = if nr >= 1 { Int::zero() } else { Int::from(1) };
    out.push(DiagnosticCheck::new(
        "Euler characteristic P(-1)",
        &expected_euler,
        &euler,
        euler == expected_euler,
    ));

    let linear = p.coeff(1);
    let expected_linear = Int::from(n) * Int::from(desc.central_rank());
    out.push(DiagnosticCheck::new(
        "coefficient of q",
        format!("n × central rank = {expected_linear}"),
        &linear,
        linear == expected_linear,
    ));

    let mut even = Int::zero();
    let mut odd = Int::zero();
    for (k, c) in p.coeffs().iter().enumerate() {
        if k % 2 == 0 {
            even += c.clone();
        } else {
            odd += c.clone();
        }
    }
    let (expected_half, half_ok) = if nr >= 1 {
        let h: Int = Int::from(1) << (nr - 1);
        let ok = even == h && odd == h;
        (format!("2^{} = {h} each", nr - 1), ok)
    } else {
        ("1 even, 0 odd".to_string(), even == Int::from(1) && odd.is_zero())
    };
    out.push(DiagnosticCheck::new(
        "even/odd rank split",
        expected_half,
        format!("{even} even, {odd} odd"),
        half_ok,
    ));

    if n % 2 == 1 {
        let d = p.degree().unwrap_or(0);
        let palindromic = (0..=d).all(|k| p.coeff(k) == p.coeff(d - k));
        out.push(DiagnosticCheck::new(
            "palindromic (n odd)",
            "coefficients equal their reverses",
            if palindromic { "palindromic" } else { "not palindromic" },
            palindromic,
        ));
    } else {
        out.push(DiagnosticCheck::new(
            "palindromic (n odd)",
            "skipped for even n",
            "skipped",
            true,
        ));
    }

    out
}

/// A computed series plus everything a caller needs to present or audit
/// it: which group, which indices, where the census came from, every
/// structural check with both sides, and how long it took.
#[derive(Clone, Debug)]
pub struct SeriesReport {
    pub descriptor: String,
    /// Tuple length for the `Hom` payloads.
    pub n: Option<usize>,
    /// Summand degree for the reduced payload.
    pub m: Option<usize>,
    /// Largest deformation degree for the `t`-expanded payload.
    pub t_max: Option<usize>,
    /// Requested nilpotency class, when the payload was asked for through
    /// the nilpotent-tuple interface.
    pub nilpotency: Option<usize>,
    pub census_source: CensusSource,
    pub payload: SeriesPayload,
    pub diagnostics: Vec<DiagnosticCheck>,
    pub elapsed: Duration,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SeriesPayload {
    /// One variable (`q`).
    Poincare(IntPoly),
    /// Two variables (`q`, `s`).
    Hilbert(IntBiPoly),
    /// Two variables, reduced summand.
    ReducedHat(IntBiPoly),
    /// Coefficients of `t^0 ‥ t^t_max`, each in (`q`, `s`).
    Comm(Vec<IntBiPoly>),
}

impl SeriesReport {
    pub fn all_passed(&self) -> bool {
        self.diagnostics.iter().all(|d| d.passed)
    }
}

fn require_nonnegative_poly(p: &IntPoly, what: &str) -> Result<()> {
    if let Some(c) = p.coeffs().iter().find(|c| **c < Int::zero()) {
        return Err(Error::Inconsistent(format!(
            "{what} has negative coefficient {c}; ranks cannot be negative"
        )));
    }
    Ok(())
}

fn require_nonnegative_bipoly(p: &IntBiPoly, what: &str) -> Result<()> {
    for (i, j, c) in p.iter_coeffs() {
        if *c < Int::zero() {
            return Err(Error::Inconsistent(format!(
                "{what} has negative coefficient {c} at q^{i} s^{j}; ranks cannot be negative"
            )));
        }
    }
    Ok(())
}

pub fn report_hom(
    desc: &GroupDescriptor,
    n: usize,
    census: &CharPolyCensus,
    source: CensusSource,
    config: &Config,
) -> Result<SeriesReport> {
    let start = Instant::now();
    let p = poincare_hom(desc, n, census, config)?;
    require_nonnegative_poly(&p, "one-variable series")?;
    let diagnostics = diagnostics(desc, n, &p);
    Ok(SeriesReport {
        descriptor: desc.canonical(),
        n: Some(n),
        m: None,
        t_max: None,
        nilpotency: None,
        census_source: source,
        payload: SeriesPayload::Poincare(p),
        diagnostics,
        elapsed: start.elapsed(),
    })
}

pub fn report_hilbert(
    desc: &GroupDescriptor,
    n: usize,
    census: &CharPolyCensus,
    source: CensusSource,
    config: &Config,
) -> Result<SeriesReport> {
    let start = Instant::now();
    let h = hilbert_hom(desc, n, census, config)?;
    require_nonnegative_bipoly(&h, "two-variable series")?;
    let p = poincare_hom(desc, n, census, config)?;

    let mut checks = Vec::new();
    let specialised = h.subst_s_to_q();
    checks.push(DiagnosticCheck::new(
        "s = q specialisation",
        p.display("q"),
        specialised.display("q"),
        specialised == p,
    ));
    let column = h.s_column(0);
    checks.push(DiagnosticCheck::new(
        "s^0 column",
        "1",
        column.display("q"),
        column.is_one(),
    ));
    let mut rows: Vec<Vec<Int>> = Vec::new();
    for k in 0..=n {
        let hat = reduced_hom_hat(desc, k, census, config)?;
        let c = binomial(Int::from(n), Int::from(k));
        for (i, j, v) in hat.iter_coeffs() {
            if rows.len() <= i {
                rows.resize(i + 1, Vec::new());
            }
            if rows[i].len() <= j {
                rows[i].resize(j + 1, Int::zero());
            }
            rows[i][j] += v.clone() * c.clone();
        }
    }
    let reassembled = IntBiPoly::from_rows(rows);
    checks.push(DiagnosticCheck::new(
        "binomial reassembly of summands",
        h.display("q", "s"),
        reassembled.display("q", "s"),
        reassembled == h,
    ));
    checks.extend(diagnostics(desc, n, &p));

    Ok(SeriesReport {
        descriptor: desc.canonical(),
        n: Some(n),
        m: None,
        t_max: None,
        nilpotency: None,
        census_source: source,
        payload: SeriesPayload::Hilbert(h),
        diagnostics: checks,
        elapsed: start.elapsed(),
    })
}

pub fn report_homhat(
    desc: &GroupDescriptor,
    m: usize,
    census: &CharPolyCensus,
    source: CensusSource,
    config: &Config,
) -> Result<SeriesReport> {
    let start = Instant::now();
    let h = reduced_hom_hat(desc, m, census, config)?;
    require_nonnegative_bipoly(&h, "reduced series")?;

    let mut checks = Vec::new();
    let constant = h.coeff(0, 0);
    let expected_constant = if m == 0 { Int::from(1) } else { Int::zero() };
    checks.push(DiagnosticCheck::new(
        "constant term",
        &expected_constant,
        &constant,
        constant == expected_constant,
    ));
    let valuation = h.iter_coeffs().map(|(_, j, _)| j).min();
    let val_ok = valuation.is_none_or(|v| v >= m);
    checks.push(DiagnosticCheck::new(
        "s-valuation",
        format!("at least {m}"),
        match valuation {
            Some(v) => v.to_string(),
            None => "empty".to_string(),
        },
        val_ok,
    ));

    Ok(SeriesReport {
        descriptor: desc.canonical(),
        n: None,
        m: Some(m),
        t_max: None,
        nilpotency: None,
        census_source: source,
        payload: SeriesPayload::ReducedHat(h),
        diagnostics: checks,
        elapsed: start.elapsed(),
    })
}

pub fn report_comm(
    desc: &GroupDescriptor,
    t_max: usize,
    nilpotency: Option<usize>,
    census: &CharPolyCensus,
    source: CensusSource,
    config: &Config,
) -> Result<SeriesReport> {
    let start = Instant::now();
    let coeffs = match nilpotency {
        Some(c) => xm_series(desc, c, t_max, census, config)?,
        None => comm_series(desc, t_max, census, config)?,
    };
    for (m, c) in coeffs.iter().enumerate() {
        require_nonnegative_bipoly(c, &format!("t^{m} coefficient"))?;
    }

    let mut checks = Vec::new();
    checks.push(DiagnosticCheck::new(
        "t^0 coefficient",
        "1",
        coeffs[0].display("q", "s"),
        coeffs[0] == IntBiPoly::one(),
    ));
    if t_max >= 1 {
        let expected = &poincare_hom(desc, 1, census, config)? - &IntPoly::one();
        let found = coeffs[1].subst_s_to_q();
        checks.push(DiagnosticCheck::new(
            "t^1 at s = q recovers P(G) - 1",
            expected.display("q"),
            found.display("q"),
            found == expected,
        ));
    }

    Ok(SeriesReport {
        descriptor: desc.canonical(),
        n: None,
        m: None,
        t_max: Some(t_max),
        nilpotency,
        census_source: source,
        payload: SeriesPayload::Comm(coeffs),
        diagnostics: checks,
        elapsed: start.elapsed(),
    })
}
