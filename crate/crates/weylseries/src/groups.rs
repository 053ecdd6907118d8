//! Group descriptors and Weyl group data.
//!
//! A compact connected Lie group is described up to the invariants used
//! here by a product of simple factors and a central torus, written
//! `"A2xG2xT1"`. Classical aliases `SU(n)`, `U(n)`, `Sp(n)`, `SO(n)` are
//! accepted and expanded. Parsing normalises: `C_n` becomes `B_n` (their
//! Weyl groups are equal as matrix groups), `B1`/`C1` become `A1`, `D2`
//! becomes `A1xA1`, and rank-0 pieces disappear.
//!
//! From a descriptor one gets the characteristic degrees (with one degree 1
//! per central circle), the Weyl group order, and the reflection
//! representation: integer matrices for the simple reflections acting on
//! the simple-root basis, `s_i(α_j) = α_j − C_ji·α_i` for the Cartan
//! matrix `C`.

use std::fmt;

use crate::exactpoly::Mat;
use crate::{Error, Int, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    A,
    B,
    C,
    D,
    G2,
    F4,
    E6,
    E7,
    E8,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Family::A => "A",
            Family::B => "B",
            Family::C => "C",
            Family::D => "D",
            Family::G2 => "G2",
            Family::F4 => "F4",
            Family::E6 => "E6",
            Family::E7 => "E7",
            Family::E8 => "E8",
        };
        f.write_str(s)
    }
}

/// One simple factor, e.g. `B3`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct SimpleFactor {
    pub family: Family,
    pub rank: usize,
}

impl fmt::Display for SimpleFactor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.family {
            Family::A | Family::B | Family::C | Family::D => {
                write!(f, "{}{}", self.family, self.rank)
            }
            other => write!(f, "{other}"),
        }
    }
}

/// A parsed, normalised group descriptor.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GroupDescriptor {
    factors: Vec<SimpleFactor>,
    central_rank: usize,
}

/// Characteristic degrees of a Weyl group action, sorted ascending, with
/// one entry `1` per central circle so that products over degrees cover
/// the whole maximal torus.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeList(Vec<usize>);

impl DegreeList {
    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn max(&self) -> usize {
        self.0.last().copied().unwrap_or(1)
    }

    /// `|W| = Π d_i`.
    pub fn group_order(&self) -> Int {
        let mut o = Int::from(1);
        for &d in &self.0 {
            o *= Int::from(d);
        }
        o
    }

    /// `Σ (d_i − 1)`, the number of reflections / positive roots.
    pub fn reflection_count(&self) -> usize {
        self.0.iter().map(|&d| d - 1).sum()
    }
}

/// The reflection representation: simple reflections as integer matrices
/// in the simple-root basis of the semisimple part. Central circles carry
/// the trivial action and are kept implicit; `embedded_generators` makes
/// them explicit when full-rank matrices are needed.
#[derive(Clone, Debug)]
pub struct ReflectionRep {
    descriptor: String,
    matrix_size: usize,
    rank: usize,
    generators: Vec<Mat<i64>>,
    weyl_order: Int,
}

impl ReflectionRep {
    /// Canonical descriptor string this representation came from.
    pub fn descriptor(&self) -> &str {
        &self.descriptor
    }

    /// Size of the generator matrices (the semisimple rank).
    pub fn matrix_size(&self) -> usize {
        self.matrix_size
    }

    /// Total rank, central circles included.
    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn generators(&self) -> &[Mat<i64>] {
        &self.generators
    }

    pub fn weyl_order(&self) -> &Int {
        &self.weyl_order
    }

    /// Generators padded with an identity block for the central circles,
    /// acting on the full rank.
    pub fn embedded_generators(&self) -> Vec<Mat<i64>> {
        self.generators
            .iter()
            .map(|g| Mat::block_diag(&[g.clone(), Mat::identity(self.rank - self.matrix_size)]))
            .collect()
    }
}

impl GroupDescriptor {
    /// Assembles a descriptor from already-normalised parts.
    pub(crate) fn from_parts(factors: Vec<SimpleFactor>, central_rank: usize) -> Self {
        GroupDescriptor {
            factors,
            central_rank,
        }
    }

    /// Parses a descriptor such as `"A2xG2xT1"` or `"SU(4)xSO(5)"`.
    ///
    /// Tokens are joined by `x` and are case-insensitive: simple families
    /// `A<r>` (r ≥ 1), `B<r>`/`C<r>` (r ≥ 1, rank 1 collapsing to `A1`),
    /// `D<r>` (r ≥ 2, `D2` splitting into `A1xA1`), the exceptional names
    /// `G2 F4 E6 E7 E8`, central tori `T<k>`, and the classical aliases
    /// `SU(n)`, `U(n)`, `Sp(n)`, `SO(n)`.
    pub fn parse(input: &str) -> Result<Self> {
        let err = |reason: &str| Error::Descriptor {
            input: input.to_string(),
            reason: reason.to_string(),
        };
        let upper = input.to_ascii_uppercase();
        if upper.trim().is_empty() {
            return Err(err("empty descriptor"));
        }
        let mut factors = Vec::new();
        let mut central = 0usize;
        for raw in upper.split('X') {
            let tok = raw.trim();
            if tok.is_empty() {
                return Err(err("empty token"));
            }
            if !tok.is_ascii() {
                return Err(err(&format!("unrecognised token {tok:?}")));
            }
            if let Some(rest) = tok.strip_prefix('T') {
                let k: usize = rest
                    .parse()
                    .map_err(|_| err(&format!("bad torus rank in {tok:?}")))?;
                central += k;
                continue;
            }
            if let Some(k) = paren_arg(tok, "SU(")? {
                match k {
                    0 => return Err(err("SU(0) is not a group")),
                    1 => {}
                    n => factors.push(SimpleFactor {
                        family: Family::A,
                        rank: n - 1,
                    }),
                }
                continue;
            }
            if let Some(k) = paren_arg(tok, "U(")? {
                match k {
                    0 => return Err(err("U(0) is not a group")),
                    n => {
                        if n > 1 {
                            factors.push(SimpleFactor {
                                family: Family::A,
                                rank: n - 1,
                            });
                        }
                        central += 1;
                    }
                }
                continue;
            }
            if let Some(k) = paren_arg(tok, "SP(")? {
                match k {
                    0 => return Err(err("Sp(0) is not a group")),
                    n => push_bc(&mut factors, n),
                }
                continue;
            }
            if let Some(k) = paren_arg(tok, "SO(")? {
                match k {
                    0 => return Err(err("SO(0) is not a group")),
                    1 => {}
                    2 => central += 1,
                    n if n % 2 == 1 => push_bc(&mut factors, (n - 1) / 2),
                    n => push_d(&mut factors, n / 2),
                }
                continue;
            }
            match tok {
                "G2" => {
                    factors.push(SimpleFactor {
                        family: Family::G2,
                        rank: 2,
                    });
                    continue;
                }
                "F4" => {
                    factors.push(SimpleFactor {
                        family: Family::F4,
                        rank: 4,
                    });
                    continue;
                }
                "E6" | "E7" | "E8" => {
                    let family = match tok {
                        "E6" => Family::E6,
                        "E7" => Family::E7,
                        _ => Family::E8,
                    };
                    factors.push(SimpleFactor {
                        family,
                        rank: tok[1..].parse().unwrap(),
                    });
                    continue;
                }
                _ => {}
            }
            let (letter, digits) = tok.split_at(1);
            let rank: usize = digits
                .parse()
                .map_err(|_| err(&format!("unrecognised token {tok:?}")))?;
            match letter {
                "A" if rank >= 1 => factors.push(SimpleFactor {
                    family: Family::A,
                    rank,
                }),
                "B" | "C" if rank >= 1 => push_bc(&mut factors, rank),
                "D" if rank >= 2 => push_d(&mut factors, rank),
                "A" | "B" | "C" | "D" => {
                    return Err(err(&format!("rank out of range in {tok:?}")))
                }
                "E" => return Err(err(&format!("no exceptional group {tok:?}"))),
                _ => return Err(err(&format!("unrecognised token {tok:?}"))),
            }
        }
        Ok(GroupDescriptor {
            factors,
            central_rank: central,
        })
    }

    /// Canonical form: normalised factors joined by `x`, then the torus.
    pub fn canonical(&self) -> String {
        let mut parts: Vec<String> = self.factors.iter().map(|f| f.to_string()).collect();
        if self.central_rank > 0 || parts.is_empty() {
            parts.push(format!("T{}", self.central_rank));
        }
        parts.join("x")
    }

    pub fn factors(&self) -> &[SimpleFactor] {
        &self.factors
    }

    pub fn central_rank(&self) -> usize {
        self.central_rank
    }

    /// Rank of the semisimple part.
    pub fn semisimple_rank(&self) -> usize {
        self.factors.iter().map(|f| f.rank).sum()
    }

    /// Total rank of a maximal torus.
    pub fn rank(&self) -> usize {
        self.semisimple_rank() + self.central_rank
    }

    /// Characteristic degrees, central circles contributing degree 1.
    pub fn degrees(&self) -> DegreeList {
        let mut d = vec![1usize; self.central_rank];
        for f in &self.factors {
            d.extend(family_degrees(f.family, f.rank));
        }
        d.sort_unstable();
        DegreeList(d)
    }

    /// `|W|`.
    pub fn weyl_order(&self) -> Int {
        self.degrees().group_order()
    }

    /// Exact degree bound for the Poincaré polynomial of the space of
    /// commuting `n`-tuples: `2·Σ(d_i − 1) + n·rank`.
    pub fn degree_bound(&self, n: usize) -> usize {
        2 * self.degrees().reflection_count() + n * self.rank()
    }

    /// Builds the reflection representation of the Weyl group.
    pub fn reflection_rep(&self) -> ReflectionRep {
        let m = self.semisimple_rank();
        let mut generators = Vec::new();
        let mut off = 0;
        for f in &self.factors {
            let c = cartan(f.family, f.rank);
            for i in 0..f.rank {
                let mut g = Mat::identity(m);
                for (j, row) in c.iter().enumerate() {
                    let delta = i64::from(i == j);
                    g.set(off + i, off + j, delta - row[i]);
                }
                generators.push(g);
            }
            off += f.rank;
        }
        ReflectionRep {
            descriptor: self.canonical(),
            matrix_size: m,
            rank: self.rank(),
            generators,
            weyl_order: self.weyl_order(),
        }
    }
}

impl fmt::Display for GroupDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.canonical())
    }
}

fn push_bc(factors: &mut Vec<SimpleFactor>, rank: usize) {
    factors.push(if rank == 1 {
        SimpleFactor {
            family: Family::A,
            rank: 1,
        }
    } else {
        SimpleFactor {
            family: Family::B,
            rank,
        }
    });
}

fn push_d(factors: &mut Vec<SimpleFactor>, rank: usize) {
    if rank == 2 {
        for _ in 0..2 {
            factors.push(SimpleFactor {
                family: Family::A,
                rank: 1,
            });
        }
    } else {
        factors.push(SimpleFactor {
            family: Family::D,
            rank,
        });
    }
}

fn paren_arg(tok: &str, prefix: &str) -> Result<Option<usize>> {
    let Some(rest) = tok.strip_prefix(prefix) else {
        return Ok(None);
    };
    let inner = rest.strip_suffix(')').ok_or_else(|| Error::Descriptor {
        input: tok.to_string(),
        reason: "missing closing parenthesis".to_string(),
    })?;
    let k = inner.trim().parse().map_err(|_| Error::Descriptor {
        input: tok.to_string(),
        reason: "argument is not a number".to_string(),
    })?;
    Ok(Some(k))
}

/// Characteristic degrees of one simple factor.
pub fn family_degrees(family: Family, rank: usize) -> Vec<usize> {
    match family {
        Family::A => (2..=rank + 1).collect(),
        Family::B | Family::C => (1..=rank).map(|i| 2 * i).collect(),
        Family::D => {
            let mut d: Vec<usize> = (1..rank).map(|i| 2 * i).collect();
            d.push(rank);
            d.sort_unstable();
            d
        }
        Family::G2 => vec![2, 6],
        Family::F4 => vec![2, 6, 8, 12],
        Family::E6 => vec![2, 5, 6, 8, 9, 12],
        Family::E7 => vec![2, 6, 8, 10, 12, 14, 18],
        Family::E8 => vec![2, 8, 12, 14, 18, 20, 24, 30],
    }
}

/// Cartan matrix `C[i][j] = ⟨α_i, α_j^∨⟩` in the Bourbaki numbering.
pub fn cartan(family: Family, rank: usize) -> Vec<Vec<i64>> {
    let mut c = vec![vec![0i64; rank]; rank];
    for (i, row) in c.iter_mut().enumerate() {
        row[i] = 2;
    }
    let link = |c: &mut Vec<Vec<i64>>, i: usize, j: usize| {
        c[i][j] = -1;
        c[j][i] = -1;
    };
    match family {
        Family::A => {
            for i in 1..rank {
                link(&mut c, i - 1, i);
            }
        }
        Family::B | Family::C => {
            for i in 1..rank {
                link(&mut c, i - 1, i);
            }
            if rank >= 2 {
                // short last root for B; C is the transpose
                if family == Family::B {
                    c[rank - 2][rank - 1] = -2;
                    c[rank - 1][rank - 2] = -1;
                } else {
                    c[rank - 2][rank - 1] = -1;
                    c[rank - 1][rank - 2] = -2;
                }
            }
        }
        Family::D => {
            for i in 1..rank - 1 {
                link(&mut c, i - 1, i);
            }
            link(&mut c, rank - 3, rank - 1);
        }
        Family::G2 => {
            c[0][1] = -1;
            c[1][0] = -3;
        }
        Family::F4 => {
            link(&mut c, 0, 1);
            link(&mut c, 2, 3);
            c[1][2] = -2;
            c[2][1] = -1;
        }
        Family::E6 | Family::E7 | Family::E8 => {
            link(&mut c, 0, 2);
            link(&mut c, 2, 3);
            link(&mut c, 3, 4);
            link(&mut c, 4, 5);
            link(&mut c, 1, 3);
            if rank >= 7 {
                link(&mut c, 5, 6);
            }
            if rank >= 8 {
                link(&mut c, 6, 7);
            }
        }
    }
    c
}
