//! Exact max-plus (tropical) Nevanlinna calculus over the rationals.
//!
//! The carrier is the tropical semiring `T = Q ∪ {-inf}` with `⊕ = max` and
//! `⊗ = +`, computed exactly with arbitrary-precision rationals. On top of it
//! this crate provides:
//!
//! * [`plfun`] — continuous piecewise-linear functions with rational
//!   breakpoints and slopes (tropical meromorphic functions), their pointwise
//!   algebra, shifts, and slope-jump (root/pole) analysis;
//! * [`linalg`] — tropical matrices, determinants with a uniqueness
//!   certificate, adjoints, Cramer bounds, and general-position tests;
//! * [`curve`] — curves into tropical projective space, hyperplanes,
//!   compositions, dependence witnesses, and representation lengths;
//! * [`casorati`] — tropical Casorati determinants of function tuples;
//! * [`nevanlinna`] — proximity, counting, characteristic, Jensen identity,
//!   Cartan characteristic, and Weil functions;
//! * [`harness`] — the value-distribution inequalities assembled as exact,
//!   machine-checkable reports (slope verdicts over rational grids);
//! * [`suites`] — deterministic randomized property suites used by the
//!   verification harness and the CLI.
//!
//! All equality and tie decisions ("the maximum is attained at least twice")
//! are exact rational comparisons; there is no floating-point mode. The one
//! use of floating point is the diagnostic growth indicator, which renders
//! `log T(r) / r` samples.
//!
//! The crate is `no_std` (with `alloc`); file formats, parsing and the CLI
//! live in the companion `tropnev-cli` crate.

#![no_std]
#![deny(unsafe_code)]

extern crate alloc;

pub mod casorati;
pub mod curve;
pub mod harness;
pub mod linalg;
pub mod nevanlinna;
pub mod plfun;
pub mod scalar;
pub mod suites;
pub mod tail;

pub use curve::{Curve, Hyperplane};
pub use plfun::PLFunction;
pub use scalar::{Rat, TropScalar};
