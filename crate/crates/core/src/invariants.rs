//! Classical and deformed quadratic invariants, and the coincidence of the
//! invariant subalgebras under the classical and deformed actions.
//!
//! The quadratic invariants are `I¹ = Σ_i a⁺_i a^i` (the total number
//! operator) and `I¹_h = Σ_i A⁺_i A^i`. For the two-mode maps both are
//! diagonal, and the deformed one is a q-number of the classical one:
//! `(I¹)_{q²}` in the bosonic case, `(I¹)_{q⁻²}` in the fermionic case.
//! That single diagonal identity carries the whole story: a Hamiltonian
//! `H = I¹_h` is quadratic in the deformed generators yet a non-polynomial
//! function of the undeformed number operator.

use num_complex::Complex64;

use crate::deform::{GeneratorKind, GeneratorSet};
use crate::error::{Error, Result};
use crate::fock::{self, guarded_residual, FockSpace, GuardSpec, Operator, Statistics};
use crate::qgroup::hopf::{HopfGenerator, HopfRealization};
use crate::qgroup::js::{classical_action, JsTriple};
use crate::qnum::{basic_qnumber, QParam};

/// Classical quadratic invariant `I¹ = Σ_i a⁺_i a^i`.
pub fn quadratic_invariant(space: FockSpace) -> Operator {
    fock::total_number(space)
}

/// Deformed quadratic invariant `I¹_h = Σ_i A⁺_i A^i`.
pub fn deformed_quadratic_invariant(gs: &GeneratorSet) -> Operator {
    let mut acc = Operator::zero(gs.space());
    for i in 0..gs.modes() {
        acc = &acc + &(gs.creator(i) * gs.annihilator(i));
    }
    acc
}

/// A classical/deformed invariant pair with its provenance.
#[derive(Debug, Clone)]
pub struct InvariantPair {
    pub classical: Operator,
    pub deformed: Operator,
    pub label: String,
    pub kind: GeneratorKind,
    pub statistics: Statistics,
}

/// Builds the quadratic pair for a generator family.
pub fn invariant_pair(gs: &GeneratorSet) -> InvariantPair {
    InvariantPair {
        classical: quadratic_invariant(gs.space()),
        deformed: deformed_quadratic_invariant(gs),
        label: "quadratic".to_string(),
        kind: gs.kind(),
        statistics: gs.space().statistics(),
    }
}

/// q-number base through which the deformed quadratic invariant is a
/// function of the classical one: q² for the bosonic sl(2) map, q⁻² for the
/// fermionic one.
fn identity_base(kind: GeneratorKind, p: &QParam) -> Result<f64> {
    match kind {
        GeneratorKind::Sl2Weyl | GeneratorKind::OneDimWeyl => Ok(p.q_squared()),
        GeneratorKind::Sl2Clifford => Ok(p.inverted().q_squared()),
        other => Err(Error::Construction(format!(
            "no closed-form invariant identity for generator kind {other:?}"
        ))),
    }
}

/// Residual of `I¹_h − (I¹)_base` as diagonal matrices, normalized like
/// every other residual by one plus the largest expected entry (the raw
/// entries grow like `(2D)_{q²}`, so an absolute comparison would drown in
/// ulps of the largest eigenvalue).
///
/// The one-mode map uses base q (its diagonal is `(n)_q`), the sl(2) maps
/// base q^{±2}.
pub fn g_identity_residual(pair: &InvariantPair, p: &QParam) -> Result<f64> {
    let base = match pair.kind {
        GeneratorKind::OneDimWeyl => p.q(),
        _ => identity_base(pair.kind, p)?,
    };
    let space = pair.classical.space();
    let expected = fock::diag_fn(space, |occ| {
        basic_qnumber(occ.iter().sum::<u32>() as f64, base)
    })?;
    guarded_residual(&pair.deformed, &expected, GuardSpec::new(0))
}

/// Action context for invariance checks.
pub enum ActionContext<'a> {
    /// Commutator action of the classical su(2) generators (counit 0).
    Classical(&'a JsTriple),
    /// Hopf action of a U_q(sl2) realization, with ε(E) = ε(F) = 0 and
    /// ε(K) = 1.
    Deformed(&'a HopfRealization),
}

/// Max over generators of the guarded residual of `x ▷ I − ε(x)·I`.
pub fn invariance_residual(
    invariant: &Operator,
    context: &ActionContext,
    guard_override: Option<u32>,
) -> Result<f64> {
    let space = invariant.space();
    let guard = match space.statistics() {
        Statistics::Bose => GuardSpec::new(guard_override.unwrap_or(2)),
        Statistics::Fermi => GuardSpec::new(guard_override.unwrap_or(0)),
    };
    let mut worst = 0.0f64;
    match context {
        ActionContext::Classical(js) => {
            let zero = Operator::zero(space);
            for g in js.generators() {
                let moved = classical_action(g, invariant);
                worst = worst.max(guarded_residual(&moved, &zero, guard)?);
            }
        }
        ActionContext::Deformed(hr) => {
            for g in [HopfGenerator::E, HopfGenerator::F, HopfGenerator::K] {
                let moved = hr.deformed_action(g, invariant);
                let target = invariant.scale(Complex64::new(hr.counit(g), 0.0));
                worst = worst.max(guarded_residual(&moved, &target, guard)?);
            }
        }
    }
    Ok(worst)
}

/// Deformed epsilon-contracted invariant of the fermionic sl(2) family:
/// `ε_q^{ij} A⁺_i A⁺_j` with `ε_q^{↑↓} = q^{1/2}`, `ε_q^{↓↑} = −q^{−1/2}`.
///
/// Equals `2 q^{1/2} q^{−n↓} a⁺_↑ a⁺_↓` as a matrix and reduces to twice
/// the classical epsilon contraction at q = 1.
pub fn q_epsilon_invariant(gs: &GeneratorSet, p: &QParam) -> Result<Operator> {
    if gs.kind() != GeneratorKind::Sl2Clifford {
        return Err(Error::SpaceShape {
            expected: "the fermionic sl(2) generator family".to_string(),
        });
    }
    let sq = p.q().sqrt();
    let plus = &(gs.creator(0) * gs.creator(1)) * sq;
    let minus = &(gs.creator(1) * gs.creator(0)) * (1.0 / sq);
    Ok(&plus - &minus)
}

/// One row of the spectral comparison table.
#[derive(Debug, Clone)]
pub struct SpectrumRow {
    pub eigenvalue_classical: f64,
    pub eigenvalue_deformed: f64,
    pub multiplicity: usize,
}

/// Spectrum of the deformed quadratic invariant against the classical one,
/// grouped by total occupation. The deformed eigenvalues are the strictly
/// monotone reindexing `m ↦ (m)_base` of the classical ones, with the
/// classical multiplicities.
pub fn spectrum_rows(gs: &GeneratorSet, p: &QParam) -> Result<Vec<SpectrumRow>> {
    let base = match gs.kind() {
        GeneratorKind::OneDimWeyl => p.q(),
        kind => identity_base(kind, p)?,
    };
    let space = gs.space();
    let max_total = space.cutoff() as usize * space.modes();
    let mut multiplicity = vec![0usize; max_total + 1];
    for i in 0..space.dim() {
        multiplicity[space.total_occupation(i) as usize] += 1;
    }
    Ok((0..=max_total)
        .map(|m| SpectrumRow {
            eigenvalue_classical: m as f64,
            eigenvalue_deformed: basic_qnumber(m as f64, base),
            multiplicity: multiplicity[m],
        })
        .collect())
}
