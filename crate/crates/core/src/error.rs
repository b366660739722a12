//! Error type shared by every module in the crate.

use thiserror::Error;

/// Everything that can go wrong while building, decomposing, evaluating, or
/// verifying a series.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Two linear factors are proportional (share a root), so the denominator
    /// has a repeated root and no simple partial fraction decomposition.
    #[error("duplicate factor: {0} and {1} share a root")]
    DuplicateFactor(String, String),

    /// Proper partial fractions need the numerator degree strictly below the
    /// number of linear factors.
    #[error("numerator degree {degree} is not below the factor count {factors}")]
    DegreeTooHigh { degree: usize, factors: usize },

    /// A linear factor a*n + b must have a >= 1 and a + b >= 1 so that it is
    /// positive for every index n >= 1.
    #[error("invalid factor {0}: need a >= 1 and a + b >= 1")]
    InvalidFactor(String),

    /// The degree condition for convergence fails.
    #[error("divergent series: {0}")]
    DivergentSeries(String),

    /// Exact partial summation is capped; larger sums go through ball
    /// evaluation instead.
    #[error("exact-sum cap exceeded: N = {n} > {cap}; use ball evaluation")]
    CapExceeded { n: u64, cap: u64 },

    /// A stated precondition of the operation does not hold.
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),

    /// Requested precision is outside the supported range.
    #[error("precision overflow: {0}")]
    PrecisionOverflow(String),

    /// The closed form would need constants outside span{1, pi, ln 2, gamma}.
    #[error("unsupported constant basis: {0}")]
    UnsupportedConstantBasis(String),

    /// Numeric evaluation of a constant vector with a gamma component has no
    /// oracle here.
    #[error("gamma coefficient {0} is nonzero and has no numeric oracle")]
    GammaUnsupported(String),

    /// A name used by a rule or formula does not resolve in the ledger.
    #[error("unknown name: {0}")]
    UnknownName(String),

    /// An accuracy scan exhausted its term budget.
    #[error("no convergence within {0} terms")]
    NoConvergence(u64),

    /// Series expression text does not match the grammar.
    #[error("parse error at byte {position}: {message}")]
    Parse { position: usize, message: String },

    /// A ledger document violates the schema.
    #[error("ledger format error: {0}")]
    Format(String),
}

pub type Result<T> = std::result::Result<T, Error>;
