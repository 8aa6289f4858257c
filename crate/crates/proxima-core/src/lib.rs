//! Finite-instance machinery for best proximity points and F-contractions.
//!
//! The crate provides four layers:
//!
//! * [`metric`] — finite metric spaces (Euclidean, Chebyshev, matrix-defined)
//!   with exhaustive axiom checking,
//! * [`f_family`] — the class of strictly increasing comparison functions used
//!   by F-contractions, with a numerical membership checker,
//! * [`proximity`] — the pair machinery: set distance, proximal subsets,
//!   p-property, approximative compactness,
//! * [`contraction`] — exhaustive checkers for the F-contraction,
//!   Hardy-Rogers, and first-kind F-proximal inequalities,
//! * [`solver`] — Picard iteration, the direct best-proximity iteration, the
//!   induced self-map construction, and the route-equivalence verifier.
//!
//! Everything operates on explicit finite point sets and mapping tables, so
//! every hypothesis is decidable by enumeration and every checker verdict is
//! ground truth at that scale. All functions are pure; the crate is `no_std`
//! (with `alloc`).

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod contraction;
pub mod f_family;
pub mod metric;
pub mod proximity;
pub mod solver;

/// Slack below this magnitude is treated as rounding noise rather than a
/// genuine inequality violation.
pub const SLACK_TOL: f64 = 1e-12;

/// Tolerance used when validating coefficient sum constraints.
pub const COEF_SUM_TOL: f64 = 1e-12;
