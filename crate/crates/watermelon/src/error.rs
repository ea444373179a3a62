//! Crate-wide error type.
//!
//! Everything that can go wrong here is a *caller* mistake (an inadmissible walker
//! configuration, a fugacity outside a series' convergence domain, an index past the end
//! of an enumeration) or an *internal consistency* failure that must never be silently
//! absorbed (a determinant that is not divisible by the fugacity power the theory
//! predicts, a tableau that stopped being semistandard mid-slide). Both kinds carry
//! enough context to reproduce the offending call.

use thiserror::Error;

/// Errors produced by the exact and asymptotic computation routes.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// The walker configuration itself is inadmissible (parity, ordering, or range
    /// violations). The CLI maps this to exit code 2.
    #[error("invalid walker configuration: {0}")]
    InvalidConfig(String),

    /// A fugacity value lies outside the domain where a series representation
    /// converges (or sits exactly on its boundary).
    #[error("fugacity {kappa} is outside the domain {domain}")]
    OutsideDomain { kappa: f64, domain: &'static str },

    /// An exact division in the fugacity polynomial ring failed. This indicates a bug
    /// or an inadmissible input: the determinant identities guarantee divisibility for
    /// every admissible configuration.
    #[error("polynomial is not exactly divisible by kappa^{power}")]
    NotDivisible { power: usize },

    /// A quantity that must be a (nonnegative) integer came out otherwise.
    #[error("expected an integer value, got {value}")]
    NotInteger { value: String },

    /// Normalization by a partition function that vanishes at the requested fugacity.
    #[error("partition function vanishes at kappa = {kappa}; normalized mean undefined")]
    ZeroPartition { kappa: String },

    /// A floating-point evaluation lost all significance (e.g. a positive quantity
    /// summed to a nonpositive value through cancellation).
    #[error("numerical evaluation failed: {0}")]
    Numerical(String),

    /// An enumeration index past the end of the family list.
    #[error("family index {index} out of range: only {count} families")]
    IndexOutOfRange { index: usize, count: usize },

    /// A tableau failed a semistandardness or shape check.
    #[error("invalid tableau: {0}")]
    InvalidTableau(String),
}

/// Convenience alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;
