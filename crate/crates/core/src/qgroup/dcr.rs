//! Verification of the deformed commutation relations.
//!
//! The three relation families, with `P = P_−` and exchange factor `+q` in
//! the bosonic (Weyl) case, `P = P_+` and exchange factor `−q⁻¹` in the
//! fermionic (Clifford) case:
//!
//! 1. `Σ_{h,k} P^{ij}_{hk} A^k A^h = 0`
//! 2. `Σ_{h,k} P^{hk}_{ij} A⁺_h A⁺_k = 0`
//! 3. `A^i A⁺_j = δ^i_j ± q^{±1} Σ_{h,k} R̂^{ih}_{jk} A⁺_h A^k`
//!
//! The exchange factor flips both sign and power between the two statistics;
//! with the same upper-coupled braid matrix this makes both families of
//! generators close at machine precision, which the test-suite checks
//! against the alternative readings.

use super::rmatrix::{ProjectorPair, RMatrix};
use crate::deform::GeneratorSet;
use crate::error::{Error, Result};
use crate::fock::{guarded_residual, GuardSpec, Operator, Statistics};
use crate::report::Relation;

/// Which sign/projector branch of the relations to verify.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DcrSign {
    Weyl,
    Clifford,
}

/// Guard degrees and pass tolerance for one verification run.
#[derive(Debug, Clone, Copy)]
pub struct DcrOptions {
    pub tolerance: f64,
    pub guard_quadratic: u32,
    pub guard_exchange: u32,
}

impl DcrOptions {
    /// Spec default guards: degree 2 for the quadratic families, 1 for the
    /// exchange relation; fermionic spaces are exact and need no guard.
    /// The default tolerances are 1e−10 (guarded bosonic) and 1e−13
    /// (exact fermionic).
    pub fn for_statistics(statistics: Statistics, guard_override: Option<u32>) -> Self {
        match statistics {
            Statistics::Bose => DcrOptions {
                tolerance: 1e-10,
                guard_quadratic: guard_override.unwrap_or(2),
                guard_exchange: guard_override.unwrap_or(1),
            },
            Statistics::Fermi => DcrOptions {
                tolerance: 1e-13,
                guard_quadratic: guard_override.unwrap_or(0),
                guard_exchange: guard_override.unwrap_or(0),
            },
        }
    }

    pub fn with_tolerance(mut self, tolerance: f64) -> Self {
        self.tolerance = tolerance;
        self
    }
}

/// Evaluates every component of the three relation families on the guarded
/// subspace and reports one relation per component.
pub fn dcr_residuals(
    gs: &GeneratorSet,
    r: &RMatrix,
    projectors: &ProjectorPair,
    sign: DcrSign,
    opts: &DcrOptions,
) -> Result<Vec<Relation>> {
    let space = gs.space();
    let n = space.modes();
    if r.n() != n {
        return Err(Error::SpaceShape {
            expected: format!("a braid matrix of fundamental dimension {n}"),
        });
    }
    let statistics_ok = matches!(
        (sign, space.statistics()),
        (DcrSign::Weyl, Statistics::Bose) | (DcrSign::Clifford, Statistics::Fermi)
    );
    if !statistics_ok {
        return Err(Error::SpaceShape {
            expected: "matching statistics for the requested sign branch".to_string(),
        });
    }

    let projector = match sign {
        DcrSign::Weyl => &projectors.p_minus,
        DcrSign::Clifford => &projectors.p_plus,
    };
    let exchange_factor = match sign {
        DcrSign::Weyl => r.p().q(),
        DcrSign::Clifford => -1.0 / r.p().q(),
    };

    let zero = Operator::zero(space);
    let id = Operator::identity(space);

    // The quadratic monomials are shared across all relation components.
    let aa: Vec<Vec<Operator>> = (0..n)
        .map(|k| (0..n).map(|h| gs.annihilator(k) * gs.annihilator(h)).collect())
        .collect();
    let cc: Vec<Vec<Operator>> = (0..n)
        .map(|h| (0..n).map(|k| gs.creator(h) * gs.creator(k)).collect())
        .collect();
    let ca: Vec<Vec<Operator>> = (0..n)
        .map(|h| (0..n).map(|k| gs.creator(h) * gs.annihilator(k)).collect())
        .collect();

    let mut relations = Vec::with_capacity(3 * n * n);
    for i in 0..n {
        for j in 0..n {
            let row = i * n + j;

            // Family 1: P^{ij}_{hk} A^k A^h.
            let mut acc = Operator::zero(space);
            for h in 0..n {
                for k in 0..n {
                    let c = projector[(row, h * n + k)];
                    if c != 0.0 {
                        acc = &acc + &(&aa[k][h] * c);
                    }
                }
            }
            let residual =
                guarded_residual(&acc, &zero, GuardSpec::new(opts.guard_quadratic))?;
            relations.push(Relation::new(
                format!("annihilator_quadratic_{}{}", i + 1, j + 1),
                residual,
                opts.tolerance,
            ));

            // Family 2: P^{hk}_{ij} A⁺_h A⁺_k (transposed contraction).
            let mut acc = Operator::zero(space);
            for h in 0..n {
                for k in 0..n {
                    let c = projector[(h * n + k, row)];
                    if c != 0.0 {
                        acc = &acc + &(&cc[h][k] * c);
                    }
                }
            }
            let residual =
                guarded_residual(&acc, &zero, GuardSpec::new(opts.guard_quadratic))?;
            relations.push(Relation::new(
                format!("creator_quadratic_{}{}", i + 1, j + 1),
                residual,
                opts.tolerance,
            ));

            // Family 3: A^i A⁺_j − δ^i_j − (±q^{±1}) R̂^{ih}_{jk} A⁺_h A^k.
            let lhs = gs.annihilator(i) * gs.creator(j);
            let mut rhs = if i == j { id.clone() } else { Operator::zero(space) };
            for h in 0..n {
                for k in 0..n {
                    let c = r.entry(i, h, j, k);
                    if c != 0.0 {
                        rhs = &rhs + &(&ca[h][k] * (exchange_factor * c));
                    }
                }
            }
            let residual = guarded_residual(&lhs, &rhs, GuardSpec::new(opts.guard_exchange))?;
            relations.push(Relation::new(
                format!("exchange_{}{}", i + 1, j + 1),
                residual,
                opts.tolerance,
            ));
        }
    }
    Ok(relations)
}

/// Largest residual in a relation list.
pub fn max_residual(relations: &[Relation]) -> f64 {
    relations.iter().map(|r| r.residual).fold(0.0, f64::max)
}
