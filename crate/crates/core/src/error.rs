use core::fmt;

/// Error type shared across the solver, search and simulation routines.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// Model parameters violate `1 <= s <= r <= MAX_R`.
    InvalidParams { r: u32, s: u32 },
    /// Probability argument outside `[0, 1]` beyond the boundary clamp.
    Domain { value: f64 },
    /// Root refinement failed to reach the requested tolerance; the
    /// tolerance is too tight for the float format.
    NonConvergence { k: u64 },
    /// A bounded search exhausted its ceiling without success.
    NotFound { what: &'static str, limit: u64 },
    /// The simulation would exceed the endpoint-array memory cap.
    MemoryCap { requested_steps: u64, max_steps: u64 },
    /// The operation's precondition does not hold for these inputs.
    Unsupported { what: &'static str },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidParams { r, s } => {
                write!(f, "invalid model parameters r={r}, s={s}: need 1 <= s <= r <= 64")
            }
            Error::Domain { value } => write!(f, "argument {value} outside [0, 1]"),
            Error::NonConvergence { k } => {
                write!(f, "root refinement at k={k} did not converge to tolerance")
            }
            Error::NotFound { what, limit } => write!(f, "{what} not found up to {limit}"),
            Error::MemoryCap { requested_steps, max_steps } => write!(
                f,
                "simulation of {requested_steps} steps exceeds the memory cap ({max_steps} steps)"
            ),
            Error::Unsupported { what } => write!(f, "unsupported: {what}"),
        }
    }
}

impl core::error::Error for Error {}
