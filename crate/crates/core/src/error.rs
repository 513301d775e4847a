use thiserror::Error;

use crate::cayley::BallIndex;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    /// Malformed or out-of-range input (letters, specs, parameters).
    #[error("input error: {0}")]
    Input(String),

    /// The enumerated ball is too small to answer the query; enumerate deeper.
    #[error("capability error: {what} needs radius {needed}, index has radius {available}")]
    Capability {
        what: &'static str,
        needed: usize,
        available: usize,
    },

    /// Enumeration stopped on a resource limit. `partial` holds the ball up to
    /// the last completed radius.
    #[error("budget exceeded after completing radius {completed_radius}")]
    Budget {
        completed_radius: usize,
        partial: Box<BallIndex>,
    },

    /// The operation is undefined for this group model.
    #[error("unsupported: {0}")]
    Unsupported(String),

    /// Window, level or grid too small to extract a rate.
    #[error("degenerate input: {0}")]
    Degenerate(String),

    #[error("cache error: {0}")]
    Cache(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub(crate) fn input(msg: impl Into<String>) -> Self {
        Error::Input(msg.into())
    }

    pub(crate) fn degenerate(msg: impl Into<String>) -> Self {
        Error::Degenerate(msg.into())
    }

    pub(crate) fn capability(what: &'static str, needed: usize, available: usize) -> Self {
        Error::Capability {
            what,
            needed,
            available,
        }
    }
}
