//! Error type shared across the crate.

use thiserror::Error;

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum LieError {
    #[error("dimension mismatch: {context}")]
    DimensionMismatch { context: String },

    #[error("matrix is singular")]
    SingularMatrix,

    #[error("Jacobi identity fails on basis triple ({i},{j},{k}); defect {defect}")]
    JacobiViolation {
        i: usize,
        j: usize,
        k: usize,
        defect: String,
    },

    #[error("Leibniz rule fails on basis pair ({i},{j}); defect {defect}")]
    LeibnizViolation {
        i: usize,
        j: usize,
        defect: String,
    },

    #[error("subspace is not a subalgebra")]
    NotASubalgebra,

    #[error("subspace is not an ideal")]
    NotAnIdeal,

    #[error("subspace is not invariant under the derivation")]
    NotInvariant,

    #[error("algebra is not nilpotent")]
    NotNilpotent,

    #[error("algebra is not solvable")]
    NotSolvable,

    #[error("spectrum has an eigenvalue with non-positive real part: factor {factor}")]
    NonPositiveSpectrum { factor: String },

    #[error("unsupported spectrum: {context}")]
    UnsupportedSpectrum { context: String },

    #[error("operation requires a rational spectrum; found irreducible factor {factor}")]
    RequiresRationalSpectrum { factor: String },

    #[error("{0} is not an eigenvalue")]
    NotAnEigenvalue(String),

    #[error("matrix is not semisimple")]
    NotSemisimple,

    #[error("no valid nilradical complement found after {tried} candidates")]
    ComplementSearchFailed { tried: usize },

    #[error("twist map failed verification for the chosen complement")]
    PhiNotHomomorphism,

    #[error("the fiber algebra of the presentation is not completely solvable")]
    HNotCompletelySolvable,

    #[error("unknown catalog label `{0}`")]
    UnknownLabel(String),

    #[error("parameter out of range for `{label}`: {detail}")]
    ParameterOutOfRange { label: String, detail: String },

    #[error("no catalog match: {0}")]
    NoCatalogMatch(String),

    #[error("internal invariant violated: {0}")]
    Internal(String),
}
