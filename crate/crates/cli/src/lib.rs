//! Front end for the `bkl4` library: word syntax, reports, graph export and
//! the β_k benchmark.

pub mod bench;
pub mod output;
pub mod parse;

use thiserror::Error;

/// Environment variable overriding the sliding-circuit vertex cap.
pub const CAP_VAR: &str = "B4_SC_CAP";

#[derive(Debug, Error, PartialEq, Eq)]
#[error("{CAP_VAR} must be a positive integer, got '{0}'")]
pub struct CapError(pub String);

/// The cap from `B4_SC_CAP`, or the library default.
pub fn cap_from_env() -> Result<usize, CapError> {
    match std::env::var(CAP_VAR) {
        Ok(v) => v
            .trim()
            .parse::<usize>()
            .ok()
            .filter(|&n| n > 0)
            .ok_or(CapError(v)),
        Err(_) => Ok(bkl4::circuits::DEFAULT_SC_CAP),
    }
}
