//! The characteristic-polynomial census of a Weyl group.
//!
//! All the series in this crate are census sums: they depend on a group
//! element `w` only through its characteristic polynomial `det(t·I − w)`
//! on the full Cartan algebra, so the multiset
//!
//! ```text
//!   { det(t·I − w) : w ∈ W }     (as polynomial ↦ element count)
//! ```
//!
//! is a sufficient statistic for everything downstream. This module
//! constructs censuses by breadth-first enumeration of the reflection
//! representation ([`enumerate_census`]), by cycle-type combinatorics for
//! the classical families ([`combinatorial_census`]), and by products of
//! factors ([`product_census`]); it also defines the on-disk format
//! ([`save_census`], [`load_census`]) and validation against the Molien
//! identity ([`validate_census`]).

mod classical;
mod file;

pub use classical::combinatorial_census;
pub use file::{load_census, save_census, CensusHeader};

use std::collections::{BTreeMap, VecDeque};
use std::fmt;

use num_traits::{One, Zero};
use rustc_hash::{FxHashMap, FxHashSet};

use crate::exactpoly::{dets_from_charpoly, Mat, Poly, TruncSeries};
use crate::groups::{Family, GroupDescriptor, ReflectionRep};
use crate::{Config, Error, Int, IntPoly, Result};

/// Multiset of characteristic polynomials of Weyl group elements on the
/// full-rank Cartan algebra (central circles contribute a factor `(t−1)`
/// to every entry). Keys are monic of degree `rank`; the identity's
/// polynomial `(t−1)^rank` appears with count exactly 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharPolyCensus {
    rank: usize,
    entries: BTreeMap<IntPoly, Int>,
    total: Int,
}

impl CharPolyCensus {
    /// Builds a census from `(charpoly, count)` pairs, merging duplicates
    /// and enforcing the structural invariants.
    pub fn from_entries(
        rank: usize,
        pairs: impl IntoIterator<Item = (IntPoly, Int)>,
    ) -> Result<Self> {
        let mut entries: BTreeMap<IntPoly, Int> = BTreeMap::new();
        for (chi, count) in pairs {
            if count <= Int::zero() {
                return Err(Error::Inconsistent(format!(
                    "census count {count} for {} is not positive",
                    chi.display("t")
                )));
            }
            if chi.degree() != Some(rank) && !(rank == 0 && chi.is_one()) {
                return Err(Error::Inconsistent(format!(
                    "census key {} does not have degree {rank}",
                    chi.display("t")
                )));
            }
            if !chi.coeff(rank).is_one() {
                return Err(Error::Inconsistent(format!(
                    "census key {} is not monic",
                    chi.display("t")
                )));
            }
            let c0 = chi.coeff(0);
            if !(c0 == Int::one() || c0 == -Int::one()) {
                return Err(Error::Inconsistent(format!(
                    "census key {} has constant term {c0}, not ±1",
                    chi.display("t")
                )));
            }
            *entries.entry(chi).or_insert_with(Int::zero) += count;
        }
        let identity = identity_charpoly(rank);
        match entries.get(&identity) {
            Some(c) if *c == Int::one() => {}
            other => {
                return Err(Error::Inconsistent(format!(
                    "identity class (t-1)^{rank} has count {:?}, expected exactly 1",
                    other
                )))
            }
        }
        let total = entries.values().sum();
        Ok(CharPolyCensus {
            rank,
            entries,
            total,
        })
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Number of elements accounted for (`|W|` for a complete census).
    pub fn total(&self) -> &Int {
        &self.total
    }

    /// Number of distinct characteristic polynomials.
    pub fn classes(&self) -> usize {
        self.entries.len()
    }

    /// Entries in ascending lexicographic order of coefficient vectors.
    pub fn entries(&self) -> impl Iterator<Item = (&IntPoly, &Int)> {
        self.entries.iter()
    }

    pub fn count_of(&self, chi: &IntPoly) -> Option<&Int> {
        self.entries.get(chi)
    }
}

/// `(t−1)^rank`, the census key of the identity element.
pub fn identity_charpoly(rank: usize) -> IntPoly {
    IntPoly::from_ints(&[-1, 1]).pow(rank)
}

/// Breadth-first enumeration of the full Weyl group in its reflection
/// representation, tallying characteristic polynomials as it goes.
///
/// Refuses groups with more than `limit` elements up front; matrices are
/// interned as boxed `i8` slices (entries of Weyl matrices in the
/// simple-root basis are bounded by the largest coefficient of the highest
/// root, well within `i8`).
pub fn enumerate_census(rep: &ReflectionRep, limit: u64) -> Result<CharPolyCensus> {
    if *rep.weyl_order() > Int::from(limit) {
        return Err(Error::EnumerationLimit {
            descriptor: rep.descriptor().to_string(),
            order: rep.weyl_order().clone(),
            limit,
        });
    }
    let size = rep.matrix_size();
    let key_of = |m: &Mat<i64>| -> Box<[i8]> {
        m.data()
            .iter()
            .map(|&x| i8::try_from(x).expect("Weyl matrix entry fits in i8"))
            .collect()
    };
    let mat_of = |k: &[i8]| -> Mat<i64> {
        Mat::from_flat(size, k.iter().map(|&x| i64::from(x)).collect())
    };

    let mut visited: FxHashSet<Box<[i8]>> = FxHashSet::default();
    let mut queue: VecDeque<Box<[i8]>> = VecDeque::new();
    let start = key_of(&Mat::identity(size));
    visited.insert(start.clone());
    queue.push_back(start);

    let mut counts: FxHashMap<Vec<i64>, u64> = FxHashMap::default();
    while let Some(key) = queue.pop_front() {
        let m = mat_of(&key);
        let chi = crate::exactpoly::charpoly(&m);
        *counts.entry(chi.coeffs().to_vec()).or_insert(0) += 1;
        for g in rep.generators() {
            let next = key_of(&m.mul(g));
            if visited.insert(next.clone()) {
                queue.push_back(next);
            }
        }
    }

    let found = Int::from(visited.len());
    if found != *rep.weyl_order() {
        return Err(Error::Inconsistent(format!(
            "enumeration of {} found {found} elements, expected {}",
            rep.descriptor(),
            rep.weyl_order()
        )));
    }

    let central = rep.rank() - rep.matrix_size();
    let pad = identity_charpoly(central);
    CharPolyCensus::from_entries(
        rep.rank(),
        counts.into_iter().map(|(coeffs, count)| {
            let chi = Poly::new(coeffs.into_iter().map(Int::from).collect());
            (&chi * &pad, Int::from(count))
        }),
    )
}

/// Census of a direct product: characteristic polynomials multiply and
/// counts multiply.
pub fn product_census(a: &CharPolyCensus, b: &CharPolyCensus) -> Result<CharPolyCensus> {
    let mut pairs = Vec::with_capacity(a.classes() * b.classes());
    for (pa, ca) in a.entries() {
        for (pb, cb) in b.entries() {
            pairs.push((pa * pb, ca * cb));
        }
    }
    let out = CharPolyCensus::from_entries(a.rank + b.rank, pairs)?;
    if out.total != &a.total * &b.total {
        return Err(Error::Inconsistent(
            "product census total is not the product of totals".to_string(),
        ));
    }
    Ok(out)
}

/// The census of a torus: a single identity class.
pub fn trivial_census(rank: usize) -> CharPolyCensus {
    CharPolyCensus::from_entries(rank, [(identity_charpoly(rank), Int::one())])
        .expect("trivial census is structurally valid")
}

/// Where a census came from, for reporting.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CensusSource {
    Combinatorial,
    Enumerated,
    Mixed,
    File,
}

impl fmt::Display for CensusSource {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CensusSource::Combinatorial => "combinatorial",
            CensusSource::Enumerated => "enumerated",
            CensusSource::Mixed => "combinatorial+enumerated",
            CensusSource::File => "file",
        })
    }
}

/// Builds the census of a descriptor, factor by factor: closed-form
/// combinatorics for classical factors, breadth-first enumeration for
/// exceptional ones (subject to `config.enum_limit`), multiplied together
/// with the central torus.
pub fn census_for_descriptor(
    desc: &GroupDescriptor,
    config: &Config,
) -> Result<(CharPolyCensus, CensusSource)> {
    let mut census = trivial_census(desc.central_rank());
    let (mut any_comb, mut any_enum) = (false, false);
    for f in desc.factors() {
        let part = match f.family {
            Family::A | Family::B | Family::C | Family::D => {
                any_comb = true;
                combinatorial_census(f.family, f.rank)?
            }
            _ => {
                any_enum = true;
                let single = GroupDescriptor::from_parts(vec![*f], 0);
                enumerate_census(&single.reflection_rep(), config.enum_limit)?
            }
        };
        census = product_census(&census, &part)?;
    }
    let source = match (any_comb, any_enum) {
        (_, false) => CensusSource::Combinatorial,
        (false, true) => CensusSource::Enumerated,
        (true, true) => CensusSource::Mixed,
    };
    Ok((census, source))
}

/// Molien-identity failure details: the lowest diverging degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MolienDivergence {
    pub degree: usize,
    pub expected: Int,
    pub found: Int,
}

/// Result of validating a census against a descriptor.
#[derive(Clone, Debug)]
pub struct CensusValidation {
    pub descriptor: String,
    pub truncation: usize,
    pub order_expected: Int,
    pub order_found: Int,
    pub identity_count: Int,
    pub molien_divergence: Option<MolienDivergence>,
}

impl CensusValidation {
    pub fn order_ok(&self) -> bool {
        self.order_expected == self.order_found
    }

    pub fn identity_ok(&self) -> bool {
        self.identity_count == Int::one()
    }

    pub fn molien_ok(&self) -> bool {
        self.molien_divergence.is_none()
    }

    pub fn passed(&self) -> bool {
        self.order_ok() && self.identity_ok() && self.molien_ok()
    }
}

impl fmt::Display for CensusValidation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "census validation for {} (Molien check to degree {})",
            self.descriptor, self.truncation
        )?;
        writeln!(
            f,
            "  total count {} against |W| = {}: {}",
            self.order_found,
            self.order_expected,
            if self.order_ok() { "ok" } else { "FAIL" }
        )?;
        writeln!(
            f,
            "  identity class count {}: {}",
            self.identity_count,
            if self.identity_ok() { "ok" } else { "FAIL" }
        )?;
        match &self.molien_divergence {
            None => write!(f, "  Molien identity: ok"),
            Some(d) => write!(
                f,
                "  Molien identity: FAIL at degree {} (expected {}, found {})",
                d.degree, d.expected, d.found
            ),
        }
    }
}

/// Checks a census against the two identities a correct census must
/// satisfy: the total count equals `|W| = Π d_i`, and the averaged
/// resolvent matches the Molien series,
///
/// ```text
///   Σ_classes count / det(1 − q·w)  ==  |W| · Π_i 1/(1 − q^{d_i})
/// ```
///
/// compared coefficientwise up to `truncation` (default `2·max d_i + 2`).
/// The left side only needs the census; the right side only needs the
/// degree table, which is what makes this an informative cross-check.
pub fn validate_census(
    census: &CharPolyCensus,
    desc: &GroupDescriptor,
    truncation: Option<usize>,
) -> Result<CensusValidation> {
    if census.rank() != desc.rank() {
        return Err(Error::CensusMismatch {
            reason: format!(
                "census rank {} but {} has rank {}",
                census.rank(),
                desc.canonical(),
                desc.rank()
            ),
        });
    }
    let degrees = desc.degrees();
    let trunc = truncation.unwrap_or(2 * degrees.max() + 2);

    let mut lhs = TruncSeries::<Int>::zero(trunc);
    for (chi, count) in census.entries() {
        let dets = dets_from_charpoly(chi)?;
        let inv = TruncSeries::from_poly(&dets.minus, trunc).invert_unit()?;
        lhs.add_scaled(&inv, count);
    }
    let mut rhs = TruncSeries::<Int>::one(trunc);
    for &d in degrees.as_slice() {
        let factor = TruncSeries::from_poly(
            &(IntPoly::one() - IntPoly::monomial(Int::one(), d)),
            trunc,
        )
        .invert_unit()?;
        rhs = rhs.mul(&factor);
    }
    rhs = rhs.scale(&desc.weyl_order());

    let molien_divergence = lhs
        .coeffs()
        .iter()
        .zip(rhs.coeffs())
        .enumerate()
        .find(|(_, (a, b))| a != b)
        .map(|(degree, (found, expected))| MolienDivergence {
            degree,
            expected: expected.clone(),
            found: found.clone(),
        });

    Ok(CensusValidation {
        descriptor: desc.canonical(),
        truncation: trunc,
        order_expected: desc.weyl_order(),
        order_found: census.total().clone(),
        identity_count: census
            .count_of(&identity_charpoly(census.rank()))
            .cloned()
            .unwrap_or_else(Int::zero),
        molien_divergence,
    })
}
