//! Explicit deforming maps: deformed generators `A^i, A⁺_j` built as
//! elements of the undeformed operator algebra, plus the inner-automorphism
//! family `A ↦ α A α⁻¹`.
//!
//! All diagonal prefactors of the form `√((n)_b / n)` are constructed
//! through the shift identity `a·f(n) = f(n+1)·a`, i.e. as
//! `√((n+1)_b/(n+1))` applied on the annihilated side. This removes the 0/0
//! at `n = 0` without ever assigning an arbitrary value there, and the
//! resulting matrices agree with the closed-form generators on every basis
//! state.

use crate::error::{Error, Result};
use crate::fock::{self, FockSpace, Operator, Statistics};
use crate::qnum::{basic_qnumber, symmetric_qnumber, QParam};

/// Which deforming map produced a generator family.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GeneratorKind {
    Undeformed,
    OneDimWeyl,
    Sl2Weyl,
    Sl2Clifford,
    SymmetricMode,
    Conjugated,
}

/// A labelled family `{A^i, A⁺_i}` of deformed (or undeformed) generators.
///
/// Creation-type generators are stored alongside their annihilation-type
/// partners; for every built-in map `a_dag[i]` is constructed as the exact
/// conjugate transpose of `a[i]`.
#[derive(Debug, Clone)]
pub struct GeneratorSet {
    space: FockSpace,
    kind: GeneratorKind,
    p: QParam,
    a: Vec<Operator>,
    a_dag: Vec<Operator>,
}

impl GeneratorSet {
    pub fn space(&self) -> FockSpace {
        self.space
    }

    pub fn kind(&self) -> GeneratorKind {
        self.kind
    }

    pub fn p(&self) -> QParam {
        self.p
    }

    pub fn modes(&self) -> usize {
        self.space.modes()
    }

    /// Annihilation-type generator `A^mode`.
    pub fn annihilator(&self, mode: usize) -> &Operator {
        &self.a[mode]
    }

    /// Creation-type generator `A⁺_mode`.
    pub fn creator(&self, mode: usize) -> &Operator {
        &self.a_dag[mode]
    }

    pub fn annihilators(&self) -> &[Operator] {
        &self.a
    }

    pub fn creators(&self) -> &[Operator] {
        &self.a_dag
    }

    /// Max entry of `A⁺_i − (A^i)†` over all modes.
    pub fn star_residual(&self) -> f64 {
        (0..self.modes())
            .map(|i| self.a_dag[i].distance(&self.a[i].dagger()))
            .fold(0.0, f64::max)
    }

    /// Max entrywise distance of all generators to the undeformed family.
    pub fn distance_to_undeformed(&self) -> f64 {
        let plain = GeneratorSet::undeformed(self.space, self.p);
        (0..self.modes())
            .map(|i| {
                self.a[i]
                    .distance(&plain.a[i])
                    .max(self.a_dag[i].distance(&plain.a_dag[i]))
            })
            .fold(0.0, f64::max)
    }

    /// The plain ladder operators, tagged as a generator family.
    pub fn undeformed(space: FockSpace, p: QParam) -> GeneratorSet {
        let a: Vec<Operator> = (0..space.modes())
            .map(|m| fock::annihilation(space, m).expect("mode in range"))
            .collect();
        let a_dag = a.iter().map(Operator::dagger).collect();
        GeneratorSet { space, kind: GeneratorKind::Undeformed, p, a, a_dag }
    }
}

/// Diagonal factor `√((n_mode + 1)_base / (n_mode + 1))`, optionally times
/// `scale^{n_other}`; everywhere finite, nonnegative for any positive base.
fn shift_root_factor(
    space: FockSpace,
    mode: usize,
    base: f64,
    extra: impl Fn(&[u32]) -> f64,
) -> Result<Operator> {
    fock::diag_fn(space, move |occ| {
        let m = occ[mode] as f64 + 1.0;
        let ratio = basic_qnumber(m, base) / m;
        assert!(ratio >= 0.0, "deforming-map diagonal must be nonnegative");
        ratio.sqrt() * extra(occ)
    })
}

fn expect_space(space: FockSpace, statistics: Statistics, modes: usize, what: &str) -> Result<()> {
    if space.statistics() != statistics || space.modes() != modes {
        return Err(Error::SpaceShape { expected: what.to_string() });
    }
    Ok(())
}

/// One-mode deforming map: `A = a·√((n)_q/n)`, `A⁺ = √((n)_q/n)·a⁺`.
///
/// The pair satisfies `A A⁺ = 1 + q A⁺A` away from the cutoff shell and
/// `A⁺A = (n)_q` on the diagonal.
pub fn one_dim_weyl_map(space: FockSpace, p: QParam) -> Result<GeneratorSet> {
    expect_space(space, Statistics::Bose, 1, "a single-mode bosonic space")?;
    let g = shift_root_factor(space, 0, p.q(), |_| 1.0)?;
    let a = &g * &fock::annihilation(space, 0)?;
    let a_dag = a.dagger();
    Ok(GeneratorSet {
        space,
        kind: GeneratorKind::OneDimWeyl,
        p,
        a: vec![a],
        a_dag: vec![a_dag],
    })
}

/// Two-mode bosonic deforming map (modes ↑ = 0, ↓ = 1):
///
/// `A⁺_↑ = √((n↑)_{q²}/n↑)·q^{n↓}·a⁺_↑`, `A⁺_↓ = √((n↓)_{q²}/n↓)·a⁺_↓`,
/// with the annihilators as conjugate transposes. The q-number base is q².
pub fn sl2_weyl_map(space: FockSpace, p: QParam) -> Result<GeneratorSet> {
    expect_space(space, Statistics::Bose, 2, "a two-mode bosonic space")?;
    let q = p.q();
    let base = p.q_squared();
    let g_up = shift_root_factor(space, 0, base, move |occ| q.powi(occ[1] as i32))?;
    let g_down = shift_root_factor(space, 1, base, |_| 1.0)?;
    let a_up = &g_up * &fock::annihilation(space, 0)?;
    let a_down = &g_down * &fock::annihilation(space, 1)?;
    Ok(GeneratorSet {
        space,
        kind: GeneratorKind::Sl2Weyl,
        p,
        a_dag: vec![a_up.dagger(), a_down.dagger()],
        a: vec![a_up, a_down],
    })
}

/// Two-mode fermionic deforming map (modes ↑ = 0, ↓ = 1):
///
/// `A⁺_↑ = q^{−n↓}·a⁺_↑`, `A⁺_↓ = a⁺_↓`, annihilators by conjugation.
pub fn sl2_clifford_map(space: FockSpace, p: QParam) -> Result<GeneratorSet> {
    expect_space(space, Statistics::Fermi, 2, "a two-mode fermionic space")?;
    let q = p.q();
    let damp = fock::diag_fn(space, move |occ| q.powi(-(occ[1] as i32)))?;
    let adag_up = &damp * &fock::creation(space, 0)?;
    let adag_down = fock::creation(space, 1)?;
    Ok(GeneratorSet {
        space,
        kind: GeneratorKind::Sl2Clifford,
        p,
        a: vec![adag_up.dagger(), adag_down.dagger()],
        a_dag: vec![adag_up, adag_down],
    })
}

/// One-sided symmetric q-oscillator for a single mode of a bosonic space:
/// `α = a·√([n]_q/n)` with the symmetric q-number, so that `α⁺α = [n]_q`
/// and `αα⁺ − q·α⁺α = q^{−n}` on the guarded subspace.
pub fn symmetric_mode_map(
    space: FockSpace,
    mode: usize,
    p: QParam,
) -> Result<(Operator, Operator)> {
    if space.statistics() != Statistics::Bose {
        return Err(Error::SpaceShape { expected: "a bosonic space".to_string() });
    }
    space.check_mode(mode)?;
    sym_oscillator(space, mode, p)
}

/// Shared q-oscillator builder; on fermionic spaces the symmetric factor is
/// identically 1 on the reachable states, so the pair degenerates to the
/// plain ladder operators.
pub(crate) fn sym_oscillator(
    space: FockSpace,
    mode: usize,
    p: QParam,
) -> Result<(Operator, Operator)> {
    let q = p.q();
    let g = fock::diag_fn(space, move |occ| {
        let m = occ[mode] as f64 + 1.0;
        let ratio = symmetric_qnumber(m, q) / m;
        assert!(ratio >= 0.0, "symmetric oscillator diagonal must be nonnegative");
        ratio.sqrt()
    })?;
    let alpha = &g * &fock::annihilation(space, mode)?;
    let alpha_dag = alpha.dagger();
    Ok((alpha, alpha_dag))
}

/// A full symmetric-oscillator family (one pair per mode).
pub fn symmetric_mode_set(space: FockSpace, p: QParam) -> Result<GeneratorSet> {
    if space.statistics() != Statistics::Bose {
        return Err(Error::SpaceShape { expected: "a bosonic space".to_string() });
    }
    let mut a = Vec::with_capacity(space.modes());
    let mut a_dag = Vec::with_capacity(space.modes());
    for mode in 0..space.modes() {
        let (alpha, alpha_dag) = sym_oscillator(space, mode, p)?;
        a.push(alpha);
        a_dag.push(alpha_dag);
    }
    Ok(GeneratorSet { space, kind: GeneratorKind::SymmetricMode, p, a, a_dag })
}

const CONDITION_LIMIT: f64 = 1e12;

/// Inner automorphism `X ↦ α X α⁻¹` applied to every generator.
///
/// Returns the conjugated family together with the 2-norm condition number
/// of `α`. Fails if `α` is numerically singular (condition number above
/// 1e12), and, at h = 0, if `α` does not reduce to the identity.
pub fn conjugate_by(gs: &GeneratorSet, alpha: &Operator) -> Result<(GeneratorSet, f64)> {
    if alpha.space() != gs.space {
        return Err(Error::SpaceMismatch);
    }
    if gs.p.is_classical() {
        let dev = alpha.distance(&Operator::identity(gs.space));
        if dev > 1e-10 {
            return Err(Error::NotIdentityAtZero { dev });
        }
    }
    let cond = alpha.condition_number();
    if !cond.is_finite() || cond > CONDITION_LIMIT {
        return Err(Error::IllConditioned { cond, limit: CONDITION_LIMIT });
    }
    let alpha_inv = alpha
        .try_inverse()
        .ok_or(Error::IllConditioned { cond: f64::INFINITY, limit: CONDITION_LIMIT })?;
    let conj = |x: &Operator| &(alpha * x) * &alpha_inv;
    Ok((
        GeneratorSet {
            space: gs.space,
            kind: GeneratorKind::Conjugated,
            p: gs.p,
            a: gs.a.iter().map(&conj).collect(),
            a_dag: gs.a_dag.iter().map(&conj).collect(),
        },
        cond,
    ))
}

/// Default conjugator for the inner-automorphism demos:
/// `exp(h·(total number)²)`, a diagonal positive operator that is invariant
/// under the two-mode Lie-algebra action and reduces to 1 at h = 0.
pub fn default_conjugator(space: FockSpace, p: QParam) -> Operator {
    let h = p.h();
    fock::diag_fn(space, move |occ| {
        let total: u32 = occ.iter().sum();
        (h * (total as f64).powi(2)).exp()
    })
    .expect("exponential of a finite diagonal")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fock::{guarded_residual, GuardSpec};
    use approx::assert_relative_eq;

    fn p(q: f64) -> QParam {
        QParam::from_q(q).unwrap()
    }

    #[test]
    fn one_dim_reduces_to_ladder_at_q1() {
        let space = FockSpace::bose(1, 8).unwrap();
        let gs = one_dim_weyl_map(space, QParam::classical()).unwrap();
        let a = fock::annihilation(space, 0).unwrap();
        assert_eq!(gs.annihilator(0).distance(&a), 0.0);
        assert_eq!(gs.creator(0).distance(&a.dagger()), 0.0);
    }

    #[test]
    fn one_dim_number_diagonal_is_basic_qnumber() {
        let space = FockSpace::bose(1, 12).unwrap();
        for q in [0.8, 1.35] {
            let gs = one_dim_weyl_map(space, p(q)).unwrap();
            let prod = &gs.creator(0).clone() * gs.annihilator(0);
            for n in 0..=12usize {
                assert_relative_eq!(
                    prod.matrix()[(n, n)].re,
                    basic_qnumber(n as f64, q),
                    epsilon = 1e-13,
                    max_relative = 1e-13
                );
            }
        }
    }

    #[test]
    fn one_dim_deformed_exchange_relation() {
        let space = FockSpace::bose(1, 12).unwrap();
        for q in [0.8, 1.35] {
            let gs = one_dim_weyl_map(space, p(q)).unwrap();
            let a = gs.annihilator(0);
            let adag = gs.creator(0);
            let lhs = a * adag;
            let rhs = &Operator::identity(space) + &(&(adag * a) * q);
            let r = guarded_residual(&lhs, &rhs, GuardSpec::new(1)).unwrap();
            assert!(r < 1e-12, "exchange residual {r:.3e} at q = {q}");
        }
    }

    #[test]
    fn one_dim_rejects_wrong_spaces() {
        let two = FockSpace::bose(2, 4).unwrap();
        assert!(one_dim_weyl_map(two, p(1.2)).is_err());
        let fermi = FockSpace::fermi(1).unwrap();
        assert!(one_dim_weyl_map(fermi, p(1.2)).is_err());
    }

    #[test]
    fn sl2_weyl_reduces_at_q1_and_has_q2_diagonals() {
        let space = FockSpace::bose(2, 12).unwrap();
        let gs = sl2_weyl_map(space, QParam::classical()).unwrap();
        assert_eq!(gs.distance_to_undeformed(), 0.0);

        let q: f64 = 1.3;
        let gs = sl2_weyl_map(space, p(q)).unwrap();
        let b = q * q;
        // A⁺_↓ A^↓ is diagonal (n↓)_{q²}.
        let prod = &gs.creator(1).clone() * gs.annihilator(1);
        for i in 0..space.dim() {
            let occ = space.occupation(i);
            assert_relative_eq!(
                prod.matrix()[(i, i)].re,
                basic_qnumber(occ[1] as f64, b),
                epsilon = 1e-12,
                max_relative = 1e-12
            );
        }
        // Σ_i A⁺_i A^i is diagonal (n↑+n↓)_{q²}.
        let sum = &(&gs.creator(0).clone() * gs.annihilator(0))
            + &(&gs.creator(1).clone() * gs.annihilator(1));
        for i in 0..space.dim() {
            let total = space.total_occupation(i) as f64;
            assert_relative_eq!(
                sum.matrix()[(i, i)].re,
                basic_qnumber(total, b),
                epsilon = 1e-11,
                max_relative = 1e-11
            );
        }
    }

    #[test]
    fn sl2_clifford_nilpotency_and_q_antisymmetry() {
        let space = FockSpace::fermi(2).unwrap();
        for q in [0.8, 1.2] {
            let gs = sl2_clifford_map(space, p(q)).unwrap();
            let up = gs.creator(0);
            let down = gs.creator(1);
            assert_eq!((up * up).max_abs(), 0.0, "creators stay nilpotent");
            let twisted = &(up * down) + &(&(down * up) * (1.0 / q));
            assert!(twisted.max_abs() < 1e-15, "A⁺_↑A⁺_↓ + q⁻¹A⁺_↓A⁺_↑ ≠ 0");
        }
        let gs = sl2_clifford_map(space, QParam::classical()).unwrap();
        assert_eq!(gs.distance_to_undeformed(), 0.0);
    }

    #[test]
    fn symmetric_mode_oscillator_relations() {
        let space = FockSpace::bose(1, 10).unwrap();
        let (alpha, alpha_dag) = symmetric_mode_map(space, 0, QParam::classical()).unwrap();
        assert_eq!(alpha.distance(&fock::annihilation(space, 0).unwrap()), 0.0);
        assert_eq!(alpha_dag.distance(&fock::creation(space, 0).unwrap()), 0.0);

        for q in [0.7, 1.25] {
            let (alpha, alpha_dag) = symmetric_mode_map(space, 0, p(q)).unwrap();
            let nd = &alpha_dag * &alpha;
            for n in 0..=10usize {
                assert_relative_eq!(
                    nd.matrix()[(n, n)].re,
                    symmetric_qnumber(n as f64, q),
                    epsilon = 1e-12,
                    max_relative = 1e-12
                );
            }
            let lhs = &(&alpha * &alpha_dag) - &(&nd * q);
            let rhs = fock::diag_fn(space, |occ| q.powi(-(occ[0] as i32))).unwrap();
            let r = guarded_residual(&lhs, &rhs, GuardSpec::new(1)).unwrap();
            assert!(r < 1e-12, "αα⁺ − qα⁺α = q^{{−n}} residual {r:.3e}");
        }
        assert!(symmetric_mode_map(FockSpace::fermi(2).unwrap(), 0, p(1.2)).is_err());
    }

    #[test]
    fn star_compatibility_and_vacuum_coincidence() {
        let bose1 = FockSpace::bose(1, 8).unwrap();
        let bose2 = FockSpace::bose(2, 8).unwrap();
        let fermi2 = FockSpace::fermi(2).unwrap();
        let param = p(1.2);
        let sets = vec![
            GeneratorSet::undeformed(bose2, param),
            one_dim_weyl_map(bose1, param).unwrap(),
            sl2_weyl_map(bose2, param).unwrap(),
            sl2_clifford_map(fermi2, param).unwrap(),
            symmetric_mode_set(bose2, param).unwrap(),
        ];
        for gs in &sets {
            assert!(gs.star_residual() < 1e-14, "{:?}", gs.kind());
            let space = gs.space();
            let vac = space.vacuum();
            for mode in 0..gs.modes() {
                let killed = gs.annihilator(mode).apply(&vac);
                assert_eq!(killed.iter().map(|x| x.norm()).sum::<f64>(), 0.0);
                let first = gs.creator(mode).apply(&vac);
                let plain = fock::creation(space, mode).unwrap().apply(&vac);
                let diff: f64 = (0..space.dim()).map(|k| (first[k] - plain[k]).norm()).sum();
                assert!(diff < 1e-14, "{:?} mode {mode}", gs.kind());
            }
        }
    }

    #[test]
    fn deforming_maps_are_first_order_in_h() {
        // Deviation from the undeformed family halves with h for the maps
        // whose diagonals carry odd powers of h.
        let bose1 = FockSpace::bose(1, 2).unwrap();
        let bose2 = FockSpace::bose(2, 2).unwrap();
        let fermi2 = FockSpace::fermi(2).unwrap();
        let dist = |kind: GeneratorKind, h: f64| -> f64 {
            let param = QParam::from_h(h).unwrap();
            let gs = match kind {
                GeneratorKind::OneDimWeyl => one_dim_weyl_map(bose1, param).unwrap(),
                GeneratorKind::Sl2Weyl => sl2_weyl_map(bose2, param).unwrap(),
                GeneratorKind::Sl2Clifford => sl2_clifford_map(fermi2, param).unwrap(),
                GeneratorKind::Conjugated => {
                    // exp(h·N) keeps the conjugator's own curvature small at
                    // the probed h values; exp(h·N²) is still first order but
                    // needs smaller h for the halving ratio to settle.
                    let base = sl2_weyl_map(bose2, param).unwrap();
                    let alpha = fock::diag_fn(bose2, |occ| {
                        (h * occ.iter().sum::<u32>() as f64).exp()
                    })
                    .unwrap();
                    conjugate_by(&base, &alpha).unwrap().0
                }
                _ => unreachable!(),
            };
            gs.distance_to_undeformed()
        };
        for kind in [
            GeneratorKind::OneDimWeyl,
            GeneratorKind::Sl2Weyl,
            GeneratorKind::Sl2Clifford,
            GeneratorKind::Conjugated,
        ] {
            let ratio = dist(kind, 0.05) / dist(kind, 0.025);
            assert!(
                (ratio - 2.0).abs() < 0.15,
                "{kind:?}: halving ratio {ratio:.4} outside 2 ± 0.15"
            );
        }
    }

    #[test]
    fn symmetric_mode_deviation_is_second_order() {
        // The symmetric q-number is even in h, so this family sits O(h²)
        // from the undeformed one; the halving ratio is 4, and the linear
        // bound dev ≤ C·|h| holds with room to spare.
        let space = FockSpace::bose(2, 2).unwrap();
        let dist = |h: f64| {
            symmetric_mode_set(space, QParam::from_h(h).unwrap())
                .unwrap()
                .distance_to_undeformed()
        };
        let (d1, d2) = (dist(0.05), dist(0.025));
        assert!(d1 <= 0.05, "dev {d1} exceeds C·|h| with C = 1");
        let ratio = d1 / d2;
        assert!((ratio - 4.0).abs() < 0.3, "halving ratio {ratio:.4}, expected ≈ 4");
    }

    #[test]
    fn conjugation_by_identity_is_identity() {
        let space = FockSpace::bose(1, 6).unwrap();
        let gs = one_dim_weyl_map(space, p(1.2)).unwrap();
        let (conj, cond) = conjugate_by(&gs, &Operator::identity(space)).unwrap();
        assert_relative_eq!(cond, 1.0, max_relative = 1e-12);
        assert!(conj.annihilator(0).distance(gs.annihilator(0)) < 1e-14);
        assert_eq!(conj.kind(), GeneratorKind::Conjugated);
    }

    #[test]
    fn conjugation_preserves_the_exchange_relation() {
        let space = FockSpace::bose(1, 10).unwrap();
        let param = QParam::from_h(0.05).unwrap();
        let gs = one_dim_weyl_map(space, param).unwrap();
        let alpha = default_conjugator(space, param);
        let (conj, _) = conjugate_by(&gs, &alpha).unwrap();
        let q = param.q();
        let lhs = &conj.annihilator(0).clone() * conj.creator(0);
        let rhs = &Operator::identity(space)
            + &(&(&conj.creator(0).clone() * conj.annihilator(0)) * q);
        let r = guarded_residual(&lhs, &rhs, GuardSpec::new(1)).unwrap();
        assert!(r < 1e-10, "conjugated exchange residual {r:.3e}");
    }

    #[test]
    fn conjugation_roundtrip_restores_the_set() {
        let space = FockSpace::bose(1, 10).unwrap();
        let param = QParam::from_h(0.05).unwrap();
        let gs = one_dim_weyl_map(space, param).unwrap();
        let alpha = default_conjugator(space, param);
        let (conj, _) = conjugate_by(&gs, &alpha).unwrap();
        let alpha_inv = alpha.try_inverse().unwrap();
        let (back, _) = conjugate_by(&conj, &alpha_inv).unwrap();
        assert!(back.annihilator(0).distance(gs.annihilator(0)) < 1e-12);
        assert!(back.creator(0).distance(gs.creator(0)) < 1e-12);
    }

    #[test]
    fn conjugation_rejects_singular_and_non_identity_at_h0() {
        let space = FockSpace::bose(1, 6).unwrap();
        let gs = one_dim_weyl_map(space, p(1.2)).unwrap();
        // Numerically singular alpha: a diagonal with a 1e-14 entry.
        let bad = fock::diag_fn(space, |occ| if occ[0] == 0 { 1e-14 } else { 1.0 }).unwrap();
        assert!(matches!(
            conjugate_by(&gs, &bad),
            Err(Error::IllConditioned { .. })
        ));
        let classical = one_dim_weyl_map(space, QParam::classical()).unwrap();
        let not_one = fock::diag_fn(space, |occ| 1.0 + occ[0] as f64).unwrap();
        assert!(matches!(
            conjugate_by(&classical, &not_one),
            Err(Error::NotIdentityAtZero { .. })
        ));
    }

    #[test]
    fn conjugated_vacuum_is_the_deformed_ground_state() {
        // With a non-diagonal α the deformed ground state moves to α|0⟩:
        // the conjugated annihilators kill α|0⟩ but not |0⟩ itself.
        let space = FockSpace::bose(1, 10).unwrap();
        let param = QParam::from_h(0.05).unwrap();
        let gs = one_dim_weyl_map(space, param).unwrap();
        let x = &fock::annihilation(space, 0).unwrap()
            + &fock::creation(space, 0).unwrap();
        let alpha = x.scale(num_complex::Complex64::new(param.h(), 0.0)).expm();
        let (conj, _) = conjugate_by(&gs, &alpha).unwrap();

        let vac = space.vacuum();
        let moved = alpha.apply(&vac);
        let norm = |v: &crate::fock::State| v.iter().map(|c| c.norm_sqr()).sum::<f64>().sqrt();
        assert!(norm(&(&moved - &vac)) > 1e-3, "alpha should move the vacuum");
        assert!(
            norm(&conj.annihilator(0).apply(&moved)) < 1e-12,
            "A^α must annihilate α|0⟩"
        );
        assert!(
            norm(&conj.annihilator(0).apply(&vac)) > 1e-4,
            "A^α should not annihilate the undeformed vacuum"
        );
    }

    #[test]
    fn every_kind_degenerates_at_h0() {
        let bose1 = FockSpace::bose(1, 5).unwrap();
        let bose2 = FockSpace::bose(2, 5).unwrap();
        let fermi2 = FockSpace::fermi(2).unwrap();
        let p0 = QParam::classical();
        assert_eq!(one_dim_weyl_map(bose1, p0).unwrap().distance_to_undeformed(), 0.0);
        assert_eq!(sl2_weyl_map(bose2, p0).unwrap().distance_to_undeformed(), 0.0);
        assert_eq!(sl2_clifford_map(fermi2, p0).unwrap().distance_to_undeformed(), 0.0);
        assert_eq!(symmetric_mode_set(bose2, p0).unwrap().distance_to_undeformed(), 0.0);
        let base = sl2_weyl_map(bose2, p0).unwrap();
        let (conj, _) = conjugate_by(&base, &default_conjugator(bose2, p0)).unwrap();
        assert!(conj.distance_to_undeformed() < 1e-13);
    }
}
