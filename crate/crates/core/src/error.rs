use std::fmt;

use serde::Serialize;

use crate::bounds::BoundReport;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("a graph needs at least one vertex")]
    NoVertices,
    #[error("{n} vertices exceeds the supported maximum of {max}")]
    TooManyVertices { n: usize, max: usize },
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("cannot duplicate vertex {0} onto itself")]
    DuplicateOntoSelf(usize),
    #[error("exact chromatic number is limited to {limit} vertices, got {n}")]
    ChromaticCap { n: usize, limit: usize },
    #[error("enumeration supports {min}..={max} vertices, got {n}")]
    EnumerationCap { n: usize, min: usize, max: usize },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("vector length {got} does not match {expected} vertices")]
    LengthMismatch { expected: usize, got: usize },
    #[error("graph is not connected")]
    Disconnected,
    #[error("parse error: {0}")]
    Parse(String),
    #[error("Jacobi eigensolver did not converge after {sweeps} sweeps (off-diagonal norm {off_norm:e})")]
    NoConvergence { sweeps: usize, off_norm: f64 },
    #[error("eigenpair residual {residual:e} exceeds {tolerance:e}")]
    Residual { residual: f64, tolerance: f64 },
    #[error("{0}")]
    Violation(Box<Violation>),
}

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidParameter(msg.into())
    }

    pub(crate) fn parse(msg: impl Into<String>) -> Self {
        Error::Parse(msg.into())
    }
}

/// A falsified inequality or equality characterization, with the offending
/// graph attached.
#[derive(Debug, Clone, Serialize)]
pub struct Violation {
    pub check: String,
    pub graph6: String,
    pub detail: String,
    pub report: Option<BoundReport>,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} violated by {}: {}", self.check, self.graph6, self.detail)
    }
}
