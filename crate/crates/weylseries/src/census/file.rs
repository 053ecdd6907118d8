//! On-disk census format: UTF-8 JSON lines.
//!
//! Line 1 is a header object; each following line is one census entry with
//! the characteristic polynomial as a coefficient array (lowest degree
//! first) and the count as a decimal string; the last line is a checksum
//! object. Entries are sorted ascending lexicographically by coefficient
//! vector, so a census has exactly one serialisation and saving a loaded
//! file reproduces it byte for byte.
//!
//! ```text
//! {"format_version":1,"kind":"weylseries-census","descriptor":"B2","rank":2,"weyl_order":"8","degrees":[2,4]}
//! {"charpoly":[-1,0,1],"count":"4"}
//! ...
//! {"classes":4,"total":"8"}
//! ```

use std::io::Write;
use std::path::Path;
use std::str::FromStr;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use super::CharPolyCensus;
use crate::groups::GroupDescriptor;
use crate::{Error, Int, IntPoly, Result};

pub const CENSUS_FORMAT_VERSION: u32 = 1;
const CENSUS_KIND: &str = "weylseries-census";

#[derive(Serialize, Deserialize)]
struct HeaderLine {
    format_version: u32,
    kind: String,
    descriptor: String,
    rank: usize,
    weyl_order: String,
    degrees: Vec<usize>,
}

#[derive(Serialize, Deserialize)]
struct EntryLine {
    charpoly: Vec<i64>,
    count: String,
}

#[derive(Serialize, Deserialize)]
struct ChecksumLine {
    classes: usize,
    total: String,
}

/// Identifying data carried in a census file header.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CensusHeader {
    pub descriptor: String,
    pub rank: usize,
    pub weyl_order: Int,
    pub degrees: Vec<usize>,
}

impl CensusHeader {
    /// Errors unless the header identifies exactly this group.
    pub fn require_match(&self, desc: &GroupDescriptor) -> Result<()> {
        let mismatch = |what: &str, found: &dyn std::fmt::Display, want: &dyn std::fmt::Display| {
            Err(Error::CensusMismatch {
                reason: format!(
                    "file is for {} ({what} {found}), requested {} ({what} {want})",
                    self.descriptor,
                    desc.canonical()
                ),
            })
        };
        if self.descriptor != desc.canonical() {
            return mismatch("descriptor", &self.descriptor, &desc.canonical());
        }
        if self.rank != desc.rank() {
            return mismatch("rank", &self.rank, &desc.rank());
        }
        if self.weyl_order != desc.weyl_order() {
            return mismatch("|W|", &self.weyl_order, &desc.weyl_order());
        }
        if self.degrees != desc.degrees().as_slice() {
            return mismatch("degrees", &format!("{:?}", self.degrees), &format!("{:?}", desc.degrees().as_slice()));
        }
        Ok(())
    }
}

/// Saves a census for the given group. The pairing is checked first so a
/// file never carries a descriptor that disagrees with its own entries.
pub fn save_census(census: &CharPolyCensus, desc: &GroupDescriptor, path: &Path) -> Result<()> {
    let mut out = Vec::new();
    write_census(census, desc, &mut out)?;
    std::fs::write(path, out)?;
    Ok(())
}

pub(crate) fn write_census(
    census: &CharPolyCensus,
    desc: &GroupDescriptor,
    w: &mut impl Write,
) -> Result<()> {
    if census.rank() != desc.rank() || *census.total() != desc.weyl_order() {
        return Err(Error::CensusMismatch {
            reason: format!(
                "census (rank {}, total {}) does not belong to {} (rank {}, |W| {})",
                census.rank(),
                census.total(),
                desc.canonical(),
                desc.rank(),
                desc.weyl_order()
            ),
        });
    }
    let header = HeaderLine {
        format_version: CENSUS_FORMAT_VERSION,
        kind: CENSUS_KIND.to_string(),
        descriptor: desc.canonical(),
        rank: desc.rank(),
        weyl_order: desc.weyl_order().to_string(),
        degrees: desc.degrees().as_slice().to_vec(),
    };
    writeln!(w, "{}", serde_json::to_string(&header)?)?;
    let mut classes = 0usize;
    for (chi, count) in census.entries() {
        let mut coeffs = Vec::with_capacity(census.rank() + 1);
        for k in 0..=census.rank() {
            let c = chi.coeff(k);
            coeffs.push(i64::try_from(&c).map_err(|_| {
                Error::Inconsistent(format!("census coefficient {c} does not fit in 64 bits"))
            })?);
        }
        let entry = EntryLine {
            charpoly: coeffs,
            count: count.to_string(),
        };
        writeln!(w, "{}", serde_json::to_string(&entry)?)?;
        classes += 1;
    }
    let checksum = ChecksumLine {
        classes,
        total: census.total().to_string(),
    };
    writeln!(w, "{}", serde_json::to_string(&checksum)?)?;
    Ok(())
}

/// Loads and fully re-validates a census file.
pub fn load_census(path: &Path) -> Result<(CharPolyCensus, CensusHeader)> {
    let text = std::fs::read_to_string(path)?;
    parse_census(&text)
}

pub(crate) fn parse_census(text: &str) -> Result<(CharPolyCensus, CensusHeader)> {
    let bad = |line: usize, reason: String| Error::CensusFormat { line, reason };
    let lines: Vec<&str> = text.lines().collect();
    if lines.len() < 2 {
        return Err(bad(lines.len(), "file needs a header and a checksum".into()));
    }
    let header: HeaderLine =
        serde_json::from_str(lines[0]).map_err(|e| bad(1, format!("bad header: {e}")))?;
    if header.kind != CENSUS_KIND {
        return Err(bad(1, format!("kind {:?} is not {CENSUS_KIND:?}", header.kind)));
    }
    if header.format_version != CENSUS_FORMAT_VERSION {
        return Err(bad(
            1,
            format!(
                "format version {} unsupported (expected {CENSUS_FORMAT_VERSION})",
                header.format_version
            ),
        ));
    }
    let weyl_order = Int::from_str(&header.weyl_order)
        .map_err(|_| bad(1, format!("weyl_order {:?} is not an integer", header.weyl_order)))?;
    let degree_product: Int = header
        .degrees
        .iter()
        .fold(Int::from(1), |acc, &d| acc * Int::from(d));
    if degree_product != weyl_order {
        return Err(bad(
            1,
            format!("degrees {:?} multiply to {degree_product}, not {weyl_order}", header.degrees),
        ));
    }

    let last = lines.len() - 1;
    let checksum: ChecksumLine = serde_json::from_str(lines[last])
        .map_err(|e| bad(last + 1, format!("bad checksum line: {e}")))?;

    let mut pairs = Vec::with_capacity(last - 1);
    let mut running = Int::zero();
    let mut prev: Option<Vec<i64>> = None;
    for (idx, line) in lines[1..last].iter().enumerate() {
        let lineno = idx + 2;
        let entry: EntryLine =
            serde_json::from_str(line).map_err(|e| bad(lineno, format!("bad entry: {e}")))?;
        if entry.charpoly.len() != header.rank + 1 {
            return Err(bad(
                lineno,
                format!(
                    "charpoly has {} coefficients, expected rank + 1 = {}",
                    entry.charpoly.len(),
                    header.rank + 1
                ),
            ));
        }
        if entry.charpoly.last() != Some(&1) {
            return Err(bad(lineno, "charpoly is not monic".into()));
        }
        if let Some(p) = &prev {
            if *p >= entry.charpoly {
                return Err(bad(lineno, "entries out of ascending order".into()));
            }
        }
        let count = Int::from_str(&entry.count)
            .map_err(|_| bad(lineno, format!("count {:?} is not an integer", entry.count)))?;
        if count <= Int::zero() {
            return Err(bad(lineno, format!("count {count} is not positive")));
        }
        running += &count;
        pairs.push((IntPoly::from_ints(&entry.charpoly), count));
        prev = Some(entry.charpoly);
    }

    if checksum.classes != pairs.len() {
        return Err(bad(
            last + 1,
            format!("checksum says {} classes, file has {}", checksum.classes, pairs.len()),
        ));
    }
    let total = Int::from_str(&checksum.total)
        .map_err(|_| bad(last + 1, format!("total {:?} is not an integer", checksum.total)))?;
    if total != running {
        return Err(bad(
            last + 1,
            format!("checksum total {total} but entries sum to {running}"),
        ));
    }
    if total != weyl_order {
        return Err(bad(
            last + 1,
            format!("entries sum to {total}, header says |W| = {weyl_order}"),
        ));
    }

    let census = CharPolyCensus::from_entries(header.rank, pairs)?;
    Ok((
        census,
        CensusHeader {
            descriptor: header.descriptor,
            rank: header.rank,
            weyl_order,
            degrees: header.degrees,
        },
    ))
}
