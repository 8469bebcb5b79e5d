use std::fmt;

use thiserror::Error;

/// Everything that can go wrong while building or checking series and constants.
///
/// The variants split into two families: bad input (`VariableMismatch`,
/// `Precondition`, `Unsupported`) and `Consistency`, which means two routes
/// that must agree did not. The CLI maps the first family to exit code 1 and
/// the second to exit code 2.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("variable mismatch: series in {0} combined with series in {1}")]
    VariableMismatch(Var, Var),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("internal consistency check failed: {0}")]
    Consistency(String),
}

impl Error {
    pub(crate) fn pre(msg: impl Into<String>) -> Self {
        Error::Precondition(msg.into())
    }

    pub(crate) fn inconsistent(msg: impl Into<String>) -> Self {
        Error::Consistency(msg.into())
    }

    /// Process exit code used by the command-line front end.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Consistency(_) => 2,
            _ => 1,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;

/// Symbolic name of the expansion variable of a series.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Var(&'static str);

impl Var {
    /// `Q = e^t`, the coordinate in which the hypergeometric series are expanded.
    pub const Q: Var = Var("Q");
    /// `q = e^T`, the mirror coordinate.
    pub const SMALL_Q: Var = Var("q");
    /// Auxiliary variable of the generating function `R(w, t)`.
    pub const W: Var = Var("w");
    /// Hyperplane class, used for truncated Chern class arithmetic.
    pub const H: Var = Var("H");

    pub const fn new(name: &'static str) -> Self {
        Var(name)
    }

    pub fn name(&self) -> &'static str {
        self.0
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.0)
    }
}
