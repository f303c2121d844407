use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Input is structurally malformed (not a permutation, not a set partition, size mismatch).
    #[error("validation error: {0}")]
    Validation(String),

    /// Input is well formed but outside the domain of the operation
    /// (a permutation containing 132, a crossing partition).
    #[error("domain error: {0}")]
    Domain(String),

    #[error("capacity error: {what} = {got} is outside the supported range (maximum {max})")]
    Capacity {
        what: &'static str,
        got: usize,
        max: usize,
    },

    #[error("arithmetic overflow computing {0}")]
    Overflow(String),

    #[error("parse error: {0}")]
    Parse(String),

    /// An internal invariant failed; signals a falsified theorem rather than bad input.
    #[error("consistency error: {0}")]
    Consistency(String),
}

pub(crate) fn check_capacity(what: &'static str, got: usize, min: usize, max: usize) -> Result<()> {
    if got < min || got > max {
        return Err(Error::Capacity { what, got, max });
    }
    Ok(())
}
