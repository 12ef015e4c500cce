use alloc::string::String;
use core::fmt;

/// Errors shared across the clustering pipeline.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Malformed input: ragged rows, non-finite coordinates, length
    /// mismatches, invalid parameters.
    InvalidInput(String),
    /// Every nearest-neighbour distance is zero; the threshold is undefined.
    DegenerateData(String),
    /// Pruning removed every point; the selectivity coefficient is too high.
    DecreaseC,
    /// A validity index is undefined for this labelling (e.g. one cluster).
    MetricUndefined(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidInput(msg) => write!(f, "invalid input: {msg}"),
            Error::DegenerateData(msg) => write!(f, "degenerate data: {msg}"),
            Error::DecreaseC => write!(f, "Decrease C"),
            Error::MetricUndefined(msg) => write!(f, "metric undefined: {msg}"),
        }
    }
}

impl core::error::Error for Error {}

pub type Result<T> = core::result::Result<T, Error>;
