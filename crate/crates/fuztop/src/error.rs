//! Error types shared across the crate.

use thiserror::Error;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A code or grade vector does not belong to the lattice it was used with.
    #[error("{0}")]
    OutOfRange(String),

    /// Arguments violate a precondition (n >= 1, m >= 2, valid ranges, ...).
    #[error("{0}")]
    InvalidArgs(String),

    /// An open-set count outside [2, m^n] was requested from the enumerator.
    #[error("k = {k} is outside the valid range [2, {max}]")]
    InvalidK { k: u64, max: u64 },

    /// The instance is too large for brute force under the configured budget.
    #[error("{0}")]
    BudgetExceeded(String),

    /// The maximal-cardinality results are only stated for n >= m >= 2.
    #[error("hypothesis n >= m >= 2 not met for n = {n}, m = {m}; fall back to enumeration")]
    HypothesisNotMet { n: u64, m: u64 },

    /// No closed form covers this open-set count.
    #[error("no closed form covers k = {k}; use enumeration")]
    NotCovered { k: u64 },

    /// m^n does not fit in 64 bits, so codes cannot be represented.
    #[error("lattice size {m}^{n} does not fit in 64 bits")]
    ContextTooLarge { n: u64, m: u64 },

    /// A family failed the topology axioms during validated construction.
    #[error("not a topology: {0}")]
    NotATopology(String),
}
