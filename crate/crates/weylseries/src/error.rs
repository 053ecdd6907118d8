use num_bigint::BigInt;

/// Everything that can go wrong in this crate.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("cannot parse group descriptor {input:?}: {reason}")]
    Descriptor { input: String, reason: String },

    #[error("invalid value for {var}: {value:?}")]
    Config { var: String, value: String },

    #[error("exact division failed: {0}")]
    NotDivisible(String),

    #[error("series inversion needs a unit constant term, got {0}")]
    NonUnitConstant(String),

    #[error("characteristic polynomial must be monic")]
    NonMonic,

    #[error(
        "Weyl group of {descriptor} has order {order}, above the enumeration \
         limit {limit}; supply a precomputed census file with --census-file \
         (see the README for the format) or raise WEYLSERIES_ENUM_LIMIT"
    )]
    EnumerationLimit {
        descriptor: String,
        order: BigInt,
        limit: u64,
    },

    #[error("census data is malformed at line {line}: {reason}")]
    CensusFormat { line: usize, reason: String },

    #[error("census does not match the requested group: {reason}")]
    CensusMismatch { reason: String },

    #[error("tuple length {n} exceeds the cap {cap}; raise WEYLSERIES_NCAP to override")]
    NCapExceeded { n: usize, cap: usize },

    #[error("nilpotency class must be at least 2, got {got}")]
    NilpotencyRange { got: usize },

    #[error("coefficient of degree {degree} is {value}, nonzero above the degree bound {bound}")]
    DegreeBound {
        degree: usize,
        bound: usize,
        value: String,
    },

    #[error("series numerator is not divisible by the Weyl group order at degree {degree}")]
    NonIntegral { degree: usize },

    #[error("oracle limited to small instances: {0}")]
    OracleScale(String),

    #[error("internal consistency check failed: {0}")]
    Inconsistent(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
