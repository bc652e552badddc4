use thiserror::Error;

/// Errors surfaced by the numerical kernels and the embedding pipeline.
///
/// Cross-check variants indicate an internal inconsistency between two
/// independent computation routes and should be treated as faults, not as
/// properties of the input.
#[derive(Debug, Clone, Error)]
pub enum Error {
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },

    #[error("dimension {dim} exceeds the supported limit {limit}")]
    DimensionLimit { dim: usize, limit: usize },

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimMismatch { expected: usize, got: usize },

    #[error("non-finite entry at ({row},{col})")]
    NonFinite { row: usize, col: usize },

    #[error("matrix is singular to working precision")]
    Singular,

    #[error("condition estimate {cond:.3e} exceeds the limit {limit:.1e}")]
    IllConditioned { cond: f64, limit: f64 },

    #[error("matrix is not Hermitian (relative asymmetry {defect:.3e})")]
    NotHermitian { defect: f64 },

    #[error("matrix is not symmetric (relative asymmetry {defect:.3e})")]
    NotSymmetric { defect: f64 },

    #[error("matrix is not positive definite (min eigenvalue {min_eig:.3e})")]
    NotPositiveDefinite { min_eig: f64 },

    #[error("eigenvalue iteration failed to converge after {sweeps} sweeps")]
    IterationFailure { sweeps: usize },

    #[error("weights are not comparable (margin {margin:.3e}); operation requires an ordered pair")]
    RequiresComparable { margin: f64 },

    #[error("operation requires a strictly ordered pair (ordering was {got})")]
    RequiresStrict { got: &'static str },

    #[error("spectrum pairing failed: eigenvalue {value:.6e} has no reciprocal partner (best residual {residual:.3e})")]
    PairingFailure { value: f64, residual: f64 },

    #[error("spectrum of the ordered pair must be real; found imaginary residual {residual:.3e}")]
    SpectrumNotReal { residual: f64 },

    #[error("word atom {index} maps the packet outside the Gaussian family (A + B*T singular)")]
    WordAtomSingular { index: usize },

    #[error("Gaussian packet is not integrable against the weight (margin {margin:.3e})")]
    NotIntegrable { margin: f64 },

    #[error("stable subspace is not a graph (column condition {cond:.3e})")]
    StableSubspaceNotGraph { cond: f64 },

    #[error("no unboundedness witness found within the delta ladder")]
    WitnessLadderExhausted,

    #[error("cross-check disagreement in {context}: {detail}")]
    CrossCheck { context: &'static str, detail: String },
}

pub type Result<T> = std::result::Result<T, Error>;
