//! Numerical laboratory for q-deformed Weyl (bosonic) and Clifford
//! (fermionic) algebras realized inside their undeformed counterparts on
//! truncated Fock spaces.
//!
//! The crate builds explicit changes of generators `A^i, A⁺_j` out of the
//! ordinary ladder operators, and verifies — to stated tolerances — the
//! deformed commutation relations they satisfy, the braid-matrix/projector
//! algebra behind those relations, quantum-group covariance under a
//! Jordan–Schwinger realization of U_q(sl2), and the coincidence of
//! classical and deformed invariant subalgebras.
//!
//! Layout:
//! - [`qnum`]: q-numbers, q-factorial, q-Gamma, and the scalar u·v⁻¹ ratios.
//! - [`fock`]: truncated occupation spaces, dense operators, guarded residuals.
//! - [`deform`]: the explicit deforming maps and the inner-automorphism family.
//! - [`qgroup`]: braid matrices, Hecke projectors, DCR verification,
//!   Jordan–Schwinger realizations, Hopf actions, covariance search.
//! - [`invariants`]: classical/deformed quadratic invariants and their
//!   coincidence checks.
//! - [`report`]: machine-readable verification reports.
//! - [`harness`]: configuration-driven verification suites and CSV tables.

pub mod error;
pub mod qnum;
pub mod fock;
pub mod deform;
pub mod qgroup;
pub mod invariants;
pub mod report;
pub mod harness;

pub use error::{Error, Result};
pub use qnum::QParam;
pub use fock::{FockSpace, GuardSpec, Operator, State, Statistics};
