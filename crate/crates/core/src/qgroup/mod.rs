//! Braid matrices, Hecke projectors, deformed-commutation-relation
//! verification, classical and deformed Jordan–Schwinger realizations, Hopf
//! actions and the covariance convention search.

pub mod covariance;
pub mod dcr;
pub mod hopf;
pub mod js;
pub mod rmatrix;

pub use covariance::{covariance_search, CaseOutcome, CovarianceOutcome, SearchCase};
pub use dcr::{dcr_residuals, max_residual, DcrOptions, DcrSign};
pub use hopf::{uq_sl2_realization, CoproductConvention, HopfGenerator, HopfRealization};
pub use js::{classical_action, classical_js, JsTriple};
pub use rmatrix::{projectors_sl, r_matrix_sl, ProjectorPair, RMatrix, ROrientation};
