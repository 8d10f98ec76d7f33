//! Crate-wide error type.

use thiserror::Error;

/// Errors surfaced by the exact-arithmetic engine.
///
/// Every variant corresponds to a rejected input or a violated structural
/// invariant; the arithmetic itself never approximates and never fails
/// silently.
#[derive(Debug, Error)]
pub enum Error {
    #[error("division by zero in a cyclotomic field")]
    DivisionByZero,

    #[error("galois map index {k} is not coprime to the cyclotomic order {order}")]
    NotCoprime { k: i64, order: u64 },

    #[error("cyclotomic order {from} does not divide target order {to}")]
    IncompatibleOrder { from: u64, to: u64 },

    #[error("matrix dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("exact division left a nonzero remainder")]
    InexactDivision,

    #[error("averaging projector is not idempotent; the matrices do not span a group image")]
    ProjectorNotIdempotent,

    #[error("linear system has no exact solution (subspace is not invariant)")]
    NotInvariant,

    #[error("not a valid group table: {0}")]
    NotAGroup(String),

    #[error("elements {{.., {a}, {b}, ..}} are not closed under the group operation")]
    NotASubgroup { a: usize, b: usize },

    #[error("class function takes different values {g} and {h} inside one conjugacy class")]
    NotClassConstant { g: usize, h: usize },

    #[error("character value at the identity is not a rational integer")]
    NonIntegralDegree,

    #[error("operands live on different groups")]
    GroupMismatch,

    #[error("invariant dimension {value} is not a nonnegative rational integer")]
    NonIntegralInvariants { value: String },

    #[error("element {frob} does not normalize the inertia subgroup (conjugate of {h} escapes)")]
    FrobeniusDoesNotNormalize { frob: usize, h: usize },

    #[error("conjugation element {0} does not square to the identity")]
    ConjugationNotInvolutive(usize),

    #[error("embedding tables invalid: {0}")]
    InvalidEmbeddingTables(String),

    #[error("involution pairs up {unpaired} non-fixed points, which is odd; tables are corrupted")]
    InvolutionParity { unpaired: usize },

    #[error("signature requires r1 + r2 >= 1")]
    EmptySignature,

    #[error("character mod {modulus} must be primitive here (conductor is {conductor})")]
    ImprimitiveCharacter { modulus: u64, conductor: u64 },

    #[error("character index {index} out of range for modulus {modulus} (phi = {phi})")]
    CharacterIndexOutOfRange { index: u64, modulus: u64, phi: u64 },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("input does not match the job schema: {0}")]
    Schema(String),

    #[error("i/o failure: {0}")]
    Io(#[from] std::io::Error),

    #[error("json failure: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
