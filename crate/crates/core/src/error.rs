use alloc::string::String;
use alloc::vec::Vec;

/// Errors produced by the computations in this crate.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    /// A character must have order at least 1.
    #[error("character order must be at least 1")]
    ZeroOrder,
    /// The multiplicity vector does not have one entry per eigenvalue index.
    #[error("multiplicity vector has {len} entries but the order is {order}")]
    LengthMismatch {
        /// Declared order.
        order: u32,
        /// Supplied vector length.
        len: usize,
    },
    /// A multiplicity was negative where a genuine character was required.
    #[error("negative multiplicity {value} at eigenvalue index {index}")]
    NegativeMultiplicity {
        /// Eigenvalue index.
        index: usize,
        /// Offending value.
        value: i64,
    },
    /// A Newton recurrence step did not divide exactly.
    #[error("inexact division in Newton recurrence at degree {degree}")]
    InexactDivision {
        /// Degree being computed.
        degree: usize,
    },
    /// An intermediate value does not fit the integer type.
    #[error("arithmetic overflow")]
    Overflow,
    /// The second-cohomology character has the wrong dimension for the profile.
    #[error("H^2 character has dimension {found}, expected {expected}")]
    WrongDimension {
        /// Second Betti number of the profile.
        expected: u64,
        /// Dimension of the supplied character.
        found: u64,
    },
    /// The character is not constant on Galois classes of eigenvalue indices.
    #[error("character is not rational: multiplicities differ inside a Galois class")]
    NotRational,
    /// The invariant dimension is not admissible for the order.
    #[error("invariant dimension {invariant_dim} is not admissible for order {order}")]
    InvalidInvariantDim {
        /// Automorphism order.
        order: u32,
        /// Requested fixed-subspace dimension on H^2.
        invariant_dim: u64,
    },
    /// The manifold profile is malformed.
    #[error("invalid manifold profile: {0}")]
    InvalidProfile(String),
    /// Two interpolation nodes share an abscissa.
    #[error("duplicate interpolation abscissa {0}")]
    DuplicateAbscissa(i64),
    /// No interpolation nodes were supplied.
    #[error("no interpolation points")]
    NoPoints,
    /// A sample is not reproduced by the fitted low-degree polynomial.
    #[error("sample at r = {x} is {found} but the fitted polynomial gives {expected}")]
    InconsistentSamples {
        /// Abscissa of the offending sample.
        x: i64,
        /// Value of the fitted polynomial.
        expected: String,
        /// Supplied sample value.
        found: i64,
    },
    /// Reference polynomial identifier not present in the shipped data.
    #[error("unknown reference polynomial `{0}`")]
    UnknownReference(String),
    /// The embedded reference data could not be parsed.
    #[error("malformed reference data on line {line}: {reason}")]
    MalformedReference {
        /// One-based line number.
        line: usize,
        /// What went wrong.
        reason: String,
    },
    /// The requested target does not exist for this order.
    #[error("target `{target}` is not available for order {order}")]
    InvalidTarget {
        /// Automorphism order.
        order: u32,
        /// Target name.
        target: String,
    },
    /// Unknown target name.
    #[error("unknown target `{0}`")]
    UnknownTarget(String),
    /// The order is not supported by this operation.
    #[error("order {0} is not supported here")]
    UnsupportedOrder(u32),
    /// A weight is not dominant for type D.
    #[error("weight {0:?} is not dominant")]
    NotDominant(Vec<i32>),
    /// Weights or characters of different ranks were combined.
    #[error("rank mismatch: expected {expected}, found {found}")]
    RankMismatch {
        /// Expected rank.
        expected: usize,
        /// Supplied rank.
        found: usize,
    },
    /// The rank is outside the supported range.
    #[error("rank {0} is outside the supported range 2..=13")]
    UnsupportedRank(usize),
    /// The configured work cap was exceeded.
    #[error("work cap of {cap} steps exceeded; raise the cap to continue")]
    WorkCapExceeded {
        /// Cap in elementary steps.
        cap: u64,
    },
    /// Greedy decomposition met a negative leading multiplicity.
    #[error("negative remainder at weight {weight:?}: input is not a genuine character")]
    NegativeRemainder {
        /// Leading weight of the remainder.
        weight: Vec<i32>,
    },
}

/// Crate-wide result alias.
pub type Result<T> = core::result::Result<T, Error>;
