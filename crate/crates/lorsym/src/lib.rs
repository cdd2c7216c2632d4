//! Exact-arithmetic membership testing for Lorentzian symmetric polynomials
//! and symmetric functions.
//!
//! Everything here is computed over arbitrary-precision rationals; no floating
//! point is used anywhere. The crate provides:
//!
//! - partitions, dominance order, covers, conjugation, block structure, and
//!   permutohedron membership ([`partitions`]);
//! - symmetric polynomials in the monomial, normalized-monomial, Schur, and
//!   normalized-Schur bases, with exact basis conversion, Kostka numbers,
//!   monomial expansion, the normalized omega involution, Hall inner products,
//!   and the dual Cauchy kernel ([`symfunc`]);
//! - the signed-principal-minor test for "at most one positive eigenvalue"
//!   on symmetric nonnegative matrices ([`linalg`]);
//! - the reduced-Hessian membership test for Lorentzian symmetric polynomials
//!   (fixed variable count) and symmetric functions (stable limit), with
//!   machine-checkable failure certificates and a deterministic operation
//!   count ([`lorentz`]);
//! - a brute-force oracle on dense polynomials for cross-validation
//!   ([`oracle::oracle_is_lorentzian`]);
//! - closed-form membership tests for low degrees and structured families
//!   ([`closedform`], [`families`]).
//!
//! The reduced-Hessian core runs data-parallel via rayon when the `parallel`
//! feature (default) is enabled; [`exec::force_sequential`] switches the same
//! binary to the sequential fallback, and results and operation counts are
//! identical either way.

pub mod closedform;
pub mod dense;
pub mod error;
pub mod exec;
pub mod families;
pub mod kostka;
pub mod linalg;
pub mod lorentz;
pub mod oracle;
pub mod partitions;
pub mod rational;
pub mod symfunc;

pub use error::{Error, Result};
