//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    /// A Laurent polynomial was used with a Galois setup over a different
    /// root denominator, or two polynomials with incompatible denominators
    /// were combined through a setup-aware operation.
    #[error("setup mismatch: {0}")]
    SetupMismatch(String),

    /// An eigenvalue computation needed ξ but the coefficient field was ℚ.
    #[error("coefficient field too small: {0}")]
    FieldTooSmall(String),

    /// A type letter/rank combination outside the Bourbaki tables.
    #[error("invalid finite type: {0}")]
    InvalidType(String),

    /// A (type, r) pair that does not belong to one of the sixteen affine
    /// families.
    #[error("unsupported affine type: {0}")]
    UnsupportedAffineType(String),

    /// Coefficients from different base rings were mixed in one bracket.
    #[error("coefficient ring mismatch: {0}")]
    CoefficientMismatch(String),

    /// The affine generator construction failed an internal assertion
    /// (non-unique lowest-weight vector, bracket not proportional, ...).
    #[error("generator construction failed: {0}")]
    GeneratorConstruction(String),

    /// No Γ-fixed correction exists for the requested root orbit in the
    /// searched form.
    #[error("unsupported orbit: {0}")]
    UnsupportedOrbit(String),

    /// A group element without a stored generator factorization was asked
    /// for an operation that needs one.
    #[error("no generator word available: {0}")]
    NoWord(String),

    /// A requested computation exceeds the configured resource cap.
    #[error("resource cap exceeded: {0}")]
    ResourceCap(String),
}

pub type Result<T> = std::result::Result<T, Error>;
