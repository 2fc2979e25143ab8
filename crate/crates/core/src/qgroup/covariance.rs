//! Exhaustive convention search for quantum-group covariance of the
//! deformed generators.
//!
//! The transformation laws under test are
//!
//! `x ▷ A⁺_i = ρ(x)^j_i A⁺_j` and `x ▷ A^i = ρ(S x)^i_j A^j`
//!
//! for x ∈ {E, F, K}, with ρ the fundamental 2×2 representation. The search
//! iterates over the standard ambiguities — two coproduct orientations,
//! q ↔ q⁻¹, and the two braid-matrix orientations — evaluates the
//! covariance residuals and the deformed-commutation-relation residuals for
//! each triple, and reports the best case. Failure is a reported outcome,
//! not an error: whether some convention closes at q ≠ 1 is exactly the
//! question the search answers.

use super::dcr::{dcr_residuals, max_residual, DcrOptions, DcrSign};
use super::hopf::{uq_sl2_realization, CoproductConvention, HopfGenerator, HopfRealization};
use super::rmatrix::{projectors_sl, r_matrix_sl, ROrientation};
use crate::deform::{GeneratorKind, GeneratorSet};
use crate::error::{Error, Result};
use crate::fock::{guarded_residual, GuardSpec, Operator, Statistics};
use crate::qnum::QParam;

/// Default pass tolerance for a search case.
pub const COVARIANCE_TOLERANCE: f64 = 1e-9;

/// One point of the convention search space.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchCase {
    pub convention: CoproductConvention,
    pub q_inverted: bool,
    pub orientation: ROrientation,
}

impl SearchCase {
    /// The eight cases, in the fixed evaluation (and tie-breaking) order.
    pub fn all() -> Vec<SearchCase> {
        let mut cases = Vec::with_capacity(8);
        for convention in CoproductConvention::ALL {
            for q_inverted in [false, true] {
                for orientation in ROrientation::ALL {
                    cases.push(SearchCase { convention, q_inverted, orientation });
                }
            }
        }
        cases
    }

    pub fn label(&self) -> String {
        format!(
            "{}/{}/{}",
            self.convention.label(),
            if self.q_inverted { "q-inverted" } else { "q-direct" },
            self.orientation.label()
        )
    }
}

/// Residuals of one search case.
#[derive(Debug, Clone)]
pub struct CaseOutcome {
    pub case: SearchCase,
    pub covariance_residual: f64,
    pub dcr_residual: f64,
    pub pass: bool,
}

impl CaseOutcome {
    pub fn worst(&self) -> f64 {
        self.covariance_residual.max(self.dcr_residual)
    }
}

/// Full search result; `best` indexes the case with the smallest worst
/// residual (ties broken by evaluation order).
#[derive(Debug, Clone)]
pub struct CovarianceOutcome {
    pub cases: Vec<CaseOutcome>,
    pub best: usize,
    pub tolerance: f64,
}

impl CovarianceOutcome {
    pub fn best_case(&self) -> &CaseOutcome {
        &self.cases[self.best]
    }

    /// True when some convention closes all laws below the tolerance.
    pub fn passed(&self) -> bool {
        self.cases.iter().any(|c| c.pass)
    }

    pub fn min_covariance_residual(&self) -> f64 {
        self.cases
            .iter()
            .map(|c| c.covariance_residual)
            .fold(f64::INFINITY, f64::min)
    }
}

fn dcr_sign_for(gs: &GeneratorSet) -> DcrSign {
    match gs.space().statistics() {
        Statistics::Bose => DcrSign::Weyl,
        Statistics::Fermi => DcrSign::Clifford,
    }
}

/// Covariance residual of both transformation laws for one realization.
fn covariance_residual(
    hr: &HopfRealization,
    gs: &GeneratorSet,
    guard: GuardSpec,
) -> Result<f64> {
    let space = gs.space();
    let mut worst = 0.0f64;
    for x in [HopfGenerator::E, HopfGenerator::F, HopfGenerator::K] {
        let rho = hr.fundamental(x);
        let rho_s = hr.fundamental_antipode(x);
        for i in 0..2 {
            // Creator law: x ▷ A⁺_i = Σ_j ρ(x)^j_i A⁺_j.
            let lhs = hr.deformed_action(x, gs.creator(i));
            let mut target = Operator::zero(space);
            for j in 0..2 {
                if rho[j][i] != 0.0 {
                    target = &target + &(gs.creator(j) * rho[j][i]);
                }
            }
            worst = worst.max(guarded_residual(&lhs, &target, guard)?);

            // Annihilator law: x ▷ A^i = Σ_j ρ(S x)^i_j A^j.
            let lhs = hr.deformed_action(x, gs.annihilator(i));
            let mut target = Operator::zero(space);
            for j in 0..2 {
                if rho_s[i][j] != 0.0 {
                    target = &target + &(gs.annihilator(j) * rho_s[i][j]);
                }
            }
            worst = worst.max(guarded_residual(&lhs, &target, guard)?);
        }
    }
    Ok(worst)
}

/// Runs the eight-case convention search for a deformed (or undeformed)
/// two-mode generator family.
pub fn covariance_search(
    gs: &GeneratorSet,
    p: QParam,
    guard_override: Option<u32>,
) -> Result<CovarianceOutcome> {
    match gs.kind() {
        GeneratorKind::Sl2Weyl | GeneratorKind::Sl2Clifford | GeneratorKind::Undeformed => {}
        other => {
            return Err(Error::SpaceShape {
                expected: format!(
                    "an sl(2) Weyl/Clifford map output or the undeformed family, got {other:?}"
                ),
            })
        }
    }
    let space = gs.space();
    if space.modes() != 2 {
        return Err(Error::SpaceShape { expected: "a two-mode space".to_string() });
    }
    let guard = match space.statistics() {
        Statistics::Bose => GuardSpec::new(guard_override.unwrap_or(2)),
        Statistics::Fermi => GuardSpec::new(guard_override.unwrap_or(0)),
    };
    let sign = dcr_sign_for(gs);

    let mut outcomes = Vec::with_capacity(8);
    for case in SearchCase::all() {
        let p_eff = if case.q_inverted { p.inverted() } else { p };
        let hr = uq_sl2_realization(space, p_eff, case.convention)?;
        let cov = covariance_residual(&hr, gs, guard)?;
        let r = r_matrix_sl(2, p_eff, case.orientation)?;
        let projs = projectors_sl(&r)?;
        let opts = DcrOptions::for_statistics(space.statistics(), guard_override)
            .with_tolerance(COVARIANCE_TOLERANCE);
        let dcr = max_residual(&dcr_residuals(gs, &r, &projs, sign, &opts)?);
        outcomes.push(CaseOutcome {
            case,
            covariance_residual: cov,
            dcr_residual: dcr,
            pass: cov < COVARIANCE_TOLERANCE && dcr < COVARIANCE_TOLERANCE,
        });
    }
    let best = outcomes
        .iter()
        .enumerate()
        .min_by(|(_, a), (_, b)| a.worst().total_cmp(&b.worst()))
        .map(|(i, _)| i)
        .unwrap_or(0);
    Ok(CovarianceOutcome { cases: outcomes, best, tolerance: COVARIANCE_TOLERANCE })
}
