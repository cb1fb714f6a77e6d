//! Moments of the Chebotarev error term, at desk scale.
//!
//! This crate implements the computable objects behind moment lower bounds
//! for the error term in the Chebotarev density theorem:
//!
//! * [`groups`] — finite-group character theory: tables for cyclic, abelian,
//!   dihedral, affine, symmetric and explicit groups; class functions with
//!   Fourier coefficients t̂(χ), the λ_{j,k} norms, the normalized maximal
//!   character sum S_t, induction, and Frobenius-Schur indicators.
//! * [`conductors`] — Artin conductor exponents from ramification
//!   filtrations, log A(χ), and the pointwise/averaged bound suites.
//! * [`dirichlet`] — Dirichlet characters mod q: structure of (Z/q)^*,
//!   conductors, Gauss sums, parity.
//! * [`zeros`] — low-lying zeros of Dirichlet L-functions by completed-
//!   function sign changes with an internal completeness certification, the
//!   zero sums b(χ;h) and b₀, the variance ν, and w₄.
//! * [`weights`] — the test-function families η and Φ with their transforms
//!   and derived constants.
//! * [`chebotarev`] — Frobenius oracles, the weighted prime sum ψ_η, the
//!   unweighted ψ, the explicit-formula cross-check, and the induction
//!   identity.
//! * [`moments`] — empirical moments M̃_n, truncated theoretical moments
//!   D̃_n, Gaussian moments, combinatorial pairing sums, and the reporting
//!   operations for the main lower bounds.
//!
//! The `chebmoments` binary exposes all of this on the command line; the
//! `examples/` directory contains one runnable example per capability.

pub mod chebotarev;
pub mod cli;
pub mod conductors;
pub mod config;
pub mod dirichlet;
pub mod error;
pub mod groups;
pub mod kahan;
pub mod moments;
pub mod quad;
pub mod sieve;
pub mod special;
pub mod weights;
pub mod zeros;

pub use error::{Error, Result};
