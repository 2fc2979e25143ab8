//! Classical Jordan–Schwinger realization of su(2) on two oscillator modes,
//! and the commutator action it induces.

use crate::error::{Error, Result};
use crate::fock::{commutator, FockSpace, Operator};

/// The su(2) triple `j₊ = a⁺_↑a^↓`, `j₋ = a⁺_↓a^↑`,
/// `j₀ = ½(a⁺_↑a^↑ − a⁺_↓a^↓)`.
#[derive(Debug, Clone)]
pub struct JsTriple {
    pub jplus: Operator,
    pub jminus: Operator,
    pub jzero: Operator,
}

impl JsTriple {
    pub fn space(&self) -> FockSpace {
        self.jplus.space()
    }

    pub fn generators(&self) -> [&Operator; 3] {
        [&self.jplus, &self.jminus, &self.jzero]
    }
}

/// Builds the bilinear su(2) generators on any two-mode space.
pub fn classical_js(space: FockSpace) -> Result<JsTriple> {
    if space.modes() != 2 {
        return Err(Error::SpaceShape { expected: "a two-mode space".to_string() });
    }
    let a_up = crate::fock::annihilation(space, 0)?;
    let a_down = crate::fock::annihilation(space, 1)?;
    let c_up = a_up.dagger();
    let c_down = a_down.dagger();
    let jplus = &c_up * &a_down;
    let jminus = &c_down * &a_up;
    let jzero = (&(&c_up * &a_up) - &(&c_down * &a_down)).scale(0.5.into());
    Ok(JsTriple { jplus, jminus, jzero })
}

/// Commutator action `x ▷ a = [σ(x), a]` of a Lie-algebra generator on an
/// algebra element.
pub fn classical_action(x: &Operator, a: &Operator) -> Operator {
    commutator(x, a)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fock::{creation, guarded_residual, GuardSpec, Statistics};

    fn spaces() -> Vec<FockSpace> {
        vec![FockSpace::bose(2, 10).unwrap(), FockSpace::fermi(2).unwrap()]
    }

    #[test]
    fn su2_commutation_relations() {
        for space in spaces() {
            let js = classical_js(space).unwrap();
            let guard = match space.statistics() {
                Statistics::Bose => GuardSpec::new(2),
                Statistics::Fermi => GuardSpec::new(0),
            };
            let r = guarded_residual(&commutator(&js.jzero, &js.jplus), &js.jplus, guard).unwrap();
            assert!(r < 1e-13, "[j0, j+] = +j+");
            let r = guarded_residual(
                &commutator(&js.jzero, &js.jminus),
                &(-&js.jminus),
                guard,
            )
            .unwrap();
            assert!(r < 1e-13, "[j0, j−] = −j−");
            let r = guarded_residual(
                &commutator(&js.jplus, &js.jminus),
                &(&js.jzero * 2.0),
                guard,
            )
            .unwrap();
            assert!(r < 1e-13, "[j+, j−] = 2 j0");
        }
    }

    #[test]
    fn vacuum_is_invariant() {
        for space in spaces() {
            let js = classical_js(space).unwrap();
            for g in js.generators() {
                let v = g.apply(&space.vacuum());
                assert_eq!(v.iter().map(|c| c.norm()).sum::<f64>(), 0.0);
            }
        }
    }

    #[test]
    fn fundamental_doublet_law() {
        let space = FockSpace::bose(2, 8).unwrap();
        let js = classical_js(space).unwrap();
        let up = creation(space, 0).unwrap();
        let down = creation(space, 1).unwrap();
        // j+ ▷ a⁺_↓ = a⁺_↑ and j0 ▷ a⁺_↑ = ½ a⁺_↑.
        let r = guarded_residual(&classical_action(&js.jplus, &down), &up, GuardSpec::new(2))
            .unwrap();
        assert!(r < 1e-13);
        let r = guarded_residual(
            &classical_action(&js.jzero, &up),
            &(&up * 0.5),
            GuardSpec::new(2),
        )
        .unwrap();
        assert!(r < 1e-13);
    }

    #[test]
    fn quadratic_invariant_is_annihilated() {
        let space = FockSpace::bose(2, 8).unwrap();
        let js = classical_js(space).unwrap();
        let total = crate::fock::total_number(space);
        for g in js.generators() {
            let r = guarded_residual(
                &classical_action(g, &total),
                &Operator::zero(space),
                GuardSpec::new(2),
            )
            .unwrap();
            assert!(r < 1e-13, "x ▷ I¹ = 0");
        }
    }

    #[test]
    fn leibniz_rule() {
        let space = FockSpace::bose(2, 8).unwrap();
        let js = classical_js(space).unwrap();
        // Deterministic pseudo-random dense operators.
        let mut seed = 0x9e3779b97f4a7c15u64;
        let mut next = move || {
            seed ^= seed << 13;
            seed ^= seed >> 7;
            seed ^= seed << 17;
            (seed >> 11) as f64 / (1u64 << 53) as f64 - 0.5
        };
        let dim = space.dim();
        let mut make = |_: ()| {
            let m = nalgebra::DMatrix::from_fn(dim, dim, |_, _| {
                num_complex::Complex64::new(next(), next())
            });
            Operator::from_matrix(space, m).unwrap()
        };
        let a = make(());
        let b = make(());
        for g in js.generators() {
            let lhs = classical_action(g, &(&a * &b));
            let rhs = &(&classical_action(g, &a) * &b) + &(&a * &classical_action(g, &b));
            let r = guarded_residual(&lhs, &rhs, GuardSpec::new(0)).unwrap();
            assert!(r < 1e-13, "Leibniz residual {r:.3e}");
        }
    }

    #[test]
    fn requires_two_modes() {
        assert!(classical_js(FockSpace::bose(1, 4).unwrap()).is_err());
        assert!(classical_js(FockSpace::bose(3, 3).unwrap()).is_err());
    }
}
