use thiserror::Error;

/// Errors shared across the crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("matrix is not positive definite (pivot {pivot} at index {index})")]
    NotPositiveDefinite { index: usize, pivot: f64 },
    #[error("matrix is not self-adjoint (relative deviation {deviation:e})")]
    NotSelfAdjoint { deviation: f64 },
    #[error("parameter vector does not match scheme {expected}: got length {got}")]
    SchemeMismatch { expected: String, got: usize },
    #[error("matrix is not invariant under the symmetry group (relative deviation {deviation:e} > {tolerance:e})")]
    NotInvariant { deviation: f64, tolerance: f64 },
    #[error("quadrature evaluation failed at point {index}: {reason}")]
    QuadratureFailure { index: usize, reason: String },
    #[error("degree {k} is not compatible with canonical exponent {p} (need k = -2p)")]
    ExponentMismatch { k: usize, p: i32 },
    #[error("point lies outside the chart domain: {0}")]
    OutsideDomain(String),
    #[error("too close to the branch locus in the small chart (|x^5 y^5| = {0:e})")]
    NearBranchSingularity(f64),
    #[error("monomial degree overflow: {0}")]
    DegreeOverflow(String),
    #[error("product map is rank deficient on H0(L^2k)")]
    RankDeficient,
    #[error("residual decay is not geometric; cannot fit a rate")]
    InsufficientDecay,
    #[error("volume ratio is non-positive ({0:e}); branch or formula error")]
    NotPositive(f64),
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
