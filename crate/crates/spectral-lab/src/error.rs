use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Error)]
pub enum Error {
    #[error("unknown vertex id {0}")]
    UnknownVertex(usize),

    #[error("unknown edge id {0}")]
    UnknownEdge(usize),

    #[error("unknown label {0:?}")]
    UnknownLabel(String),

    #[error("graph validation failed: {0}")]
    InvalidGraph(String),

    #[error("builder limit exceeded: {got} vertices (cap {cap})")]
    SizeCap { got: usize, cap: usize },

    #[error("{0}")]
    InvalidArgument(String),

    #[error("quadrature rule incompatible with sample count: {0}")]
    Quadrature(String),

    #[error("empty assembly window")]
    EmptyWindow,

    #[error("stiffness form is singular: window touches no boundary and the graph is finite without grounding")]
    SingularStiffness,

    #[error("mesh too coarse for the sampled potential on edge {edge}: {intervals} intervals < {samples} sample intervals")]
    MeshTooCoarse { edge: usize, intervals: usize, samples: usize },

    #[error("factorization failure: {0}")]
    Factorization(String),

    #[error("eigensolver did not converge after {0} iterations")]
    NoConvergence(usize),

    #[error("problem size {got} exceeds the dense-solver cap {cap}")]
    DenseCap { got: usize, cap: usize },

    #[error("value {value} lies inside the threshold guard band of eigenvalue {eigenvalue}")]
    ThresholdAmbiguous { value: f64, eigenvalue: f64 },

    #[error("spectrum is incomplete below s = {0}; recompute with a lower threshold or full spectrum")]
    IncompleteSpectrum(f64),

    #[error("provenance mismatch: {0}")]
    ProvenanceMismatch(String),

    #[error("{0}")]
    Parse(String),

    #[error("config error: {0}")]
    Config(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
