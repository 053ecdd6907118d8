//! Exact Poincaré and Hilbert–Poincaré series for spaces of commuting
//! tuples in compact connected Lie groups.
//!
//! For a compact connected Lie group `G` of rank `r` with Weyl group `W`,
//! the identity component of the space of commuting `n`-tuples in `G` has
//! Poincaré polynomial
//!
//! ```text
//!          Π_i (1 - q^(2·d_i))         det(1 + q·w)^n
//! P(q)  =  ------------------- · Σ_W  ----------------
//!                 |W|                  det(1 - q²·w)
//! ```
//!
//! where the `d_i` are the characteristic degrees of `W` acting on the dual
//! Cartan algebra. Everything on the right is computable from a finite
//! amount of integer data: the multiset of characteristic polynomials of
//! Weyl group elements, weighted by how many elements share each one. This
//! crate builds that multiset (the *census*) by breadth-first enumeration or
//! by cycle-type combinatorics, evaluates the sum in exact integer
//! arithmetic, and exposes the answers as polynomials in one variable (`q`),
//! two variables (`q`, `s`), or as coefficient lists in a formal deformation
//! variable (`t`).
//!
//! Modules:
//!
//! * [`exactpoly`] — dense polynomials, truncated power series, bivariate
//!   grids, and small matrices over any exact coefficient ring, plus a
//!   division-free characteristic polynomial.
//! * [`groups`] — descriptor parsing (`"A2xG2xT1"`, `"SU(4)"`, …), Cartan
//!   matrices, reflection representations, characteristic degrees.
//! * [`census`] — construction, products, file format, and validation of
//!   the characteristic-polynomial census.
//! * [`series`] — the series themselves plus structural diagnostics.
//! * [`oracle`] — independent low-tech recomputations used to cross-check
//!   the main path in tests.
//! * [`cli`] — the `weylseries` command line tool.

pub mod census;
pub mod cli;
pub mod exactpoly;
pub mod groups;
pub mod oracle;
pub mod series;

mod error;

pub use error::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Arbitrary-precision integer used throughout.
pub type Int = num_bigint::BigInt;
/// Arbitrary-precision rational.
pub type Rat = num_rational::BigRational;

/// Dense integer polynomial.
pub type IntPoly = exactpoly::Poly<Int>;
/// Dense rational polynomial.
pub type RatPoly = exactpoly::Poly<Rat>;
/// Truncated integer power series.
pub type IntSeries = exactpoly::TruncSeries<Int>;
/// Truncated rational power series.
pub type RatSeries = exactpoly::TruncSeries<Rat>;
/// Bivariate integer polynomial, rows graded by `q`, columns by `s`.
pub type IntBiPoly = exactpoly::BiPoly<Int>;
/// Square integer matrix.
pub type IntMat = exactpoly::Mat<Int>;

/// Runtime limits. Resolution order: explicit flag, then environment
/// variable, then the built-in default.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Config {
    /// Largest Weyl group order `enumerate_census` will attempt
    /// (`WEYLSERIES_ENUM_LIMIT`).
    pub enum_limit: u64,
    /// Extra truncation headroom above the a-priori degree bound; `None`
    /// means twice the largest characteristic degree (`WEYLSERIES_MARGIN`).
    pub margin: Option<usize>,
    /// Largest tuple length accepted by the series operations
    /// (`WEYLSERIES_NCAP`).
    pub n_cap: usize,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            enum_limit: 10_000_000,
            margin: None,
            n_cap: 12,
        }
    }
}

impl Config {
    /// Defaults overridden by any `WEYLSERIES_*` environment variables.
    pub fn from_env() -> Result<Self> {
        let mut cfg = Config::default();
        if let Some(v) = env_var("WEYLSERIES_ENUM_LIMIT")? {
            cfg.enum_limit = parse_env("WEYLSERIES_ENUM_LIMIT", &v)?;
        }
        if let Some(v) = env_var("WEYLSERIES_MARGIN")? {
            cfg.margin = Some(parse_env("WEYLSERIES_MARGIN", &v)?);
        }
        if let Some(v) = env_var("WEYLSERIES_NCAP")? {
            cfg.n_cap = parse_env("WEYLSERIES_NCAP", &v)?;
        }
        Ok(cfg)
    }
}

fn env_var(name: &str) -> Result<Option<String>> {
    match std::env::var(name) {
        Ok(v) => Ok(Some(v)),
        Err(std::env::VarError::NotPresent) => Ok(None),
        Err(std::env::VarError::NotUnicode(_)) => Err(Error::Config {
            var: name.to_string(),
            value: "<not unicode>".to_string(),
        }),
    }
}

fn parse_env<T: std::str::FromStr>(name: &str, value: &str) -> Result<T> {
    value.trim().parse().map_err(|_| Error::Config {
        var: name.to_string(),
        value: value.to_string(),
    })
}
