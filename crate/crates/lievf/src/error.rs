//! Crate-wide error type.

use thiserror::Error;

/// Errors produced by any layer of the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("unknown identifier `{name}` at position {pos}")]
    UnknownIdentifier { name: String, pos: usize },
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("denominator vanishes at the evaluation point")]
    DenominatorVanishes,
    #[error("vector fields live on different charts")]
    ChartMismatch,
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("coefficients are not polynomial")]
    NonPolynomial,
    #[error("wedge of the given fields is zero")]
    DegenerateWedge,
    #[error("basis fields are not linearly independent over the constants")]
    NotIndependent,
    #[error("bracket [e{i}, e{j}] does not lie in the constant span of the basis")]
    NotClosed { i: usize, j: usize },
    #[error("structure tensor violates antisymmetry at ({i},{j},{k})")]
    NotAntisymmetric { i: usize, j: usize, k: usize },
    #[error("structure tensor violates the Jacobi identity at ({i},{j},{k})")]
    JacobiViolation { i: usize, j: usize, k: usize },
    #[error("subspace is not closed under the bracket")]
    NotASubalgebra,
    #[error("point is not valid for this algebra (denominator vanishes or rank drops)")]
    InvalidPoint,
    #[error("generic point search exhausted after {attempts} attempts")]
    PointSearchExhausted { attempts: usize },
    #[error("internal identity violation: {0}")]
    IdentityViolation(String),
    #[error("input algebra is abelian")]
    AbelianInput,
    #[error("no pair (v1, v2) with [v1,v2]=v1 found within search bound {bound}")]
    NoAffinePair { bound: usize },
    #[error("curve normalization identity failed: {0}")]
    CurveVerificationFailed(String),
    #[error("isotropy part is zero (abelian case); the affine construction does not apply")]
    AbelianCase,
    #[error("dim V0 = {dim} < n = {n}: invariant foliation detected, pair is not primitive")]
    NonPrimitiveDetected { dim: usize, n: usize },
    #[error("derivative of map entry {entry} by basis field {field} is not an affine combination of the map entries")]
    RelatednessSolveFailed { field: usize, entry: usize },
    #[error("normalization requires verdict {required}, got {got}")]
    WrongNormalizationMode { required: String, got: String },
    #[error("jet homomorphism system inconsistent at degree {degree} ({residual})")]
    InconsistentJetSystem { degree: usize, residual: String },
    #[error("{0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;
