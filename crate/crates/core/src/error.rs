use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("continued fraction entry {entry} at position {index} is less than 2")]
    EntryTooSmall { index: usize, entry: String },

    #[error("the empty chain has no rational value")]
    EmptyChain,

    #[error("index {index} out of range for a chain of length {len}")]
    IndexOutOfRange { index: usize, len: usize },

    #[error("invalid cyclic singularity 1/{q}(1,{q1}): {reason}")]
    InvalidSingularity { q: String, q1: String, reason: &'static str },

    #[error("{value} is not invertible modulo {modulus}")]
    NotInvertible { value: String, modulus: String },

    #[error("invalid pattern parameter {name} = {value}: {reason}")]
    InvalidPattern { name: &'static str, value: String, reason: &'static str },

    #[error("Kollar parameter a{index} = {value} must be at least 2")]
    InvalidKollarParam { index: usize, value: String },

    #[error("weights have w* = {wstar}; singularity types require w* = 1")]
    WeightGcdNotOne { wstar: String },

    #[error("inconsistent Kollar data: {0}")]
    KollarInconsistent(String),

    #[error("unknown curve `{0}`")]
    UnknownCurve(String),

    #[error("curve `{0}` already exists")]
    DuplicateCurve(String),

    #[error("invalid blow-up: {0}")]
    InvalidBlowup(String),

    #[error("not a Hirzebruch-Jung chain: {0}")]
    NotAChain(String),

    #[error("invalid contraction plan: {0}")]
    InvalidPlan(String),

    #[error("curve `{0}` lies in the contracted locus")]
    CurveContracted(String),

    #[error("Picard rank after contraction is {rho}; classification needs rank 1")]
    NotRankOne { rho: i64 },

    #[error("invalid parameters for family {family}: {reason}")]
    InvalidFamilyParams { family: String, reason: String },

    #[error("unknown family `{0}`")]
    UnknownFamily(String),

    #[error("expected chain {expected} but extracted {found}")]
    ChainMismatch { expected: String, found: String },

    #[error("output error: {0}")]
    Output(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
