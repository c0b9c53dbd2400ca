//! Exact-arithmetic invariants of low-dimensional solvable Lie groups.
//!
//! Everything is computed over the rationals: Lie algebras are given by
//! rational structure constants, derivations by rational matrices, and all
//! invariants (reachability filtrations, normalizer towers, real-shadows,
//! cone dimensions, Betti numbers, ...) come out as exact certificates
//! rather than floating-point approximations.
//!
//! Module map:
//! - [`rat`], [`matrix`], [`subspace`], [`poly`], [`spectral`]: exact
//!   rational linear and polynomial algebra (echelon forms, characteristic
//!   polynomials, factorization, Jordan-Chevalley decomposition).
//! - [`lie`]: Lie algebras by structure constants and their derived objects
//!   (series, normalizers, quotients, semidirect extensions, Carnot grading).
//! - [`homogeneous`]: homogeneous groups `(N, alpha)` and their biLipschitz
//!   invariants (reachability subalgebras, invariant profiles, characteristic
//!   subalgebras).
//! - [`shadow`]: adjoint weights, nilradicals, real-shadows, cone dimension,
//!   growth degree, Betti numbers.
//! - [`catalog`]: built-in structure constants for the named low-dimensional
//!   algebras, fixture isomorphisms and golden classification tables.
//! - [`compare`]: the distinguishability engine and isometry-class labeling.

pub mod catalog;
pub mod compare;
pub mod error;
pub mod homogeneous;
pub mod lie;
pub mod matrix;
pub mod poly;
pub mod rat;
pub mod shadow;
pub mod spectral;
pub mod subspace;

pub use error::LieError;
pub use lie::{Derivation, LieAlgebra, SemidirectPresentation};
pub use matrix::Matrix;
pub use poly::Poly;
pub use rat::Rat;
pub use subspace::Subspace;
