//! Machine-readable verification reports.

use serde::{Deserialize, Serialize};

/// One verified relation: `pass` holds exactly when `residual < tolerance`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Relation {
    pub name: String,
    pub residual: f64,
    pub tolerance: f64,
    pub pass: bool,
}

impl Relation {
    pub fn new(name: impl Into<String>, residual: f64, tolerance: f64) -> Self {
        Relation {
            name: name.into(),
            residual,
            tolerance,
            pass: residual < tolerance,
        }
    }

    /// Same relation with the tolerance replaced (pass recomputed).
    pub fn with_tolerance(&self, tolerance: f64) -> Self {
        Relation::new(self.name.clone(), self.residual, tolerance)
    }

    pub fn prefixed(&self, prefix: &str) -> Self {
        Relation {
            name: format!("{prefix}/{}", self.name),
            ..self.clone()
        }
    }
}

/// Report for one verification case. Serialization order is fixed by the
/// field order, so identical configs on the same build produce byte-identical
/// bodies up to the `timestamp` field.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct VerificationReport {
    pub case: String,
    pub q: f64,
    pub h: f64,
    pub cutoff: u32,
    /// Guard-degree override; `null` means the per-relation defaults
    /// (2 for quadratic families, 1 for exchange relations, 0 wherever a
    /// relation is exact) were in force.
    pub guard: Option<u32>,
    pub number_convention: String,
    /// Best action convention found by a covariance search, when the case
    /// ran one.
    pub convention: Option<String>,
    pub timestamp: String,
    pub version: String,
    pub relations: Vec<Relation>,
}

impl VerificationReport {
    pub fn all_pass(&self) -> bool {
        self.relations.iter().all(|r| r.pass)
    }
}
