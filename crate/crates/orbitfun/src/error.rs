//! Error type shared across the crate.

use num_bigint::BigUint;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("rank {rank} is out of range for series {series}: expected {expected}")]
    RankOutOfRange {
        series: char,
        rank: usize,
        expected: &'static str,
    },

    #[error("orbit enumeration needs |W| = {weyl_order} group elements, exceeding the cap {cap}")]
    OrbitCapExceeded { weyl_order: BigUint, cap: u64 },

    #[error("grid refinement mismatch: expected M = {expected}, got M = {got}")]
    MismatchedM { expected: u64, got: u64 },

    #[error("sample/coefficient kind mismatch: expected {expected}, got {got}")]
    MismatchedKind { expected: &'static str, got: &'static str },

    #[error("invalid {what} coordinates {coords:?} for M = {m}: {reason}")]
    InvalidPoint {
        what: &'static str,
        coords: Vec<i64>,
        m: u64,
        reason: String,
    },

    #[error("{0}")]
    IncompleteSampleSet(String),

    #[error("file format error: {0}")]
    Format(String),

    #[error("unrecognized diagram component on nodes {nodes:?}; this indicates a bug")]
    UnrecognizedComponent { nodes: Vec<usize> },
}

impl Error {
    /// Short machine-parsable code, used by the CLI error lines.
    pub fn code(&self) -> &'static str {
        match self {
            Error::RankOutOfRange { .. } => "E_RANK",
            Error::OrbitCapExceeded { .. } => "E_CAP",
            Error::MismatchedM { .. } => "E_M_MISMATCH",
            Error::MismatchedKind { .. } => "E_KIND",
            Error::InvalidPoint { .. } => "E_POINT",
            Error::IncompleteSampleSet(_) => "E_GRID_MISMATCH",
            Error::Format(_) => "E_FORMAT",
            Error::UnrecognizedComponent { .. } => "E_INTERNAL",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
