use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ZdgError {
    /// Bad caller input (out-of-range modulus, empty range, ...).
    #[error("usage error: {0}")]
    Usage(String),
    /// Z_n has no nonzero zero divisor (n = 1, n prime).
    #[error("Z_{0} has no nonzero zero divisors")]
    NoZeroDivisors(u64),
    /// Work or memory guard tripped.
    #[error("resource limit exceeded: {0}")]
    ResourceLimit(String),
}

pub type Result<T> = std::result::Result<T, ZdgError>;
