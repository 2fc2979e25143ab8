//! Truncated multimode Fock spaces and dense operators in the occupation
//! basis.
//!
//! The basis of an `N`-mode space with per-mode cutoff `D` is the full
//! occupation lattice `{0..D}^N` (`{0,1}^N` for fermions), ordered
//! lexicographically with mode 0 slowest. Bosonic ladder operators truncate
//! above the cutoff; fermionic ones carry Jordan–Wigner sign strings and are
//! exact. Identities that raise occupations are tested on a guarded
//! subspace (total occupation bounded away from the cutoff shell) so that
//! truncation artifacts never masquerade as algebra violations.

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;
use serde::Serialize;

use crate::error::{Error, Result};

pub type State = DVector<Complex64>;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Statistics {
    Bose,
    Fermi,
}

/// A truncated occupation-number space.
///
/// The basis ordering is fixed for the lifetime of the process: basis index
/// `i` decomposes into occupations as digits of `i` in base `cutoff + 1`,
/// most significant digit = mode 0.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FockSpace {
    modes: usize,
    statistics: Statistics,
    cutoff: u32,
}

impl FockSpace {
    /// New space with `modes` oscillator modes and per-mode occupation
    /// cutoff `cutoff`. The cutoff is forced to 1 for fermions.
    pub fn new(modes: usize, statistics: Statistics, cutoff: u32) -> Result<Self> {
        if modes == 0 {
            return Err(Error::Construction("a space needs at least one mode".into()));
        }
        if cutoff == 0 {
            return Err(Error::Construction("cutoff must be at least 1".into()));
        }
        let cutoff = match statistics {
            Statistics::Bose => cutoff,
            Statistics::Fermi => 1,
        };
        let space = FockSpace { modes, statistics, cutoff };
        if space.checked_dim().is_none() {
            return Err(Error::Construction(format!(
                "space dimension ({} + 1)^{} is too large",
                cutoff, modes
            )));
        }
        Ok(space)
    }

    pub fn bose(modes: usize, cutoff: u32) -> Result<Self> {
        Self::new(modes, Statistics::Bose, cutoff)
    }

    pub fn fermi(modes: usize) -> Result<Self> {
        Self::new(modes, Statistics::Fermi, 1)
    }

    pub fn modes(&self) -> usize {
        self.modes
    }

    pub fn statistics(&self) -> Statistics {
        self.statistics
    }

    pub fn cutoff(&self) -> u32 {
        self.cutoff
    }

    fn checked_dim(&self) -> Option<usize> {
        let radix = self.cutoff as usize + 1;
        let mut dim = 1usize;
        for _ in 0..self.modes {
            dim = dim.checked_mul(radix)?;
            if dim > (1 << 22) {
                return None;
            }
        }
        Some(dim)
    }

    pub fn dim(&self) -> usize {
        self.checked_dim().expect("dimension bounded at construction")
    }

    pub fn check_mode(&self, mode: usize) -> Result<()> {
        if mode < self.modes {
            Ok(())
        } else {
            Err(Error::ModeOutOfRange { mode, modes: self.modes })
        }
    }

    /// Occupation tuple of a basis index.
    pub fn occupation(&self, index: usize) -> Vec<u32> {
        let radix = self.cutoff as usize + 1;
        let mut occ = vec![0u32; self.modes];
        let mut rest = index;
        for m in (0..self.modes).rev() {
            occ[m] = (rest % radix) as u32;
            rest /= radix;
        }
        occ
    }

    /// Basis index of an occupation tuple.
    pub fn index_of(&self, occ: &[u32]) -> usize {
        debug_assert_eq!(occ.len(), self.modes);
        let radix = self.cutoff as usize + 1;
        occ.iter().fold(0usize, |acc, &n| {
            debug_assert!(n <= self.cutoff);
            acc * radix + n as usize
        })
    }

    pub fn total_occupation(&self, index: usize) -> u32 {
        self.occupation(index).iter().sum()
    }

    /// The all-zeros occupation state (basis index 0).
    pub fn vacuum(&self) -> State {
        let mut v = State::zeros(self.dim());
        v[0] = Complex64::new(1.0, 0.0);
        v
    }

    /// Basis state with the given occupation tuple.
    pub fn basis_state(&self, occ: &[u32]) -> Result<State> {
        if occ.len() != self.modes || occ.iter().any(|&n| n > self.cutoff) {
            return Err(Error::Construction(format!(
                "occupation {occ:?} is not a basis label of this space"
            )));
        }
        let mut v = State::zeros(self.dim());
        v[self.index_of(occ)] = Complex64::new(1.0, 0.0);
        Ok(v)
    }
}

/// Net raising degree of an operator identity; the guarded subspace drops
/// all basis states within `degree` total quanta of the cutoff shell.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GuardSpec {
    pub degree: u32,
}

impl GuardSpec {
    pub fn new(degree: u32) -> Self {
        GuardSpec { degree }
    }
}

/// A dense complex matrix over the occupation basis, tagged with its space.
///
/// Operators on different spaces never combine; the arithmetic
/// implementations panic on a space mismatch.
#[derive(Debug, Clone, PartialEq)]
pub struct Operator {
    space: FockSpace,
    matrix: DMatrix<Complex64>,
}

impl Operator {
    pub fn from_matrix(space: FockSpace, matrix: DMatrix<Complex64>) -> Result<Self> {
        if matrix.nrows() != space.dim() || matrix.ncols() != space.dim() {
            return Err(Error::DimensionMismatch {
                got: matrix.nrows(),
                expected: space.dim(),
            });
        }
        Ok(Operator { space, matrix })
    }

    pub fn zero(space: FockSpace) -> Self {
        Operator { space, matrix: DMatrix::zeros(space.dim(), space.dim()) }
    }

    pub fn identity(space: FockSpace) -> Self {
        Operator { space, matrix: DMatrix::identity(space.dim(), space.dim()) }
    }

    pub fn space(&self) -> FockSpace {
        self.space
    }

    pub fn matrix(&self) -> &DMatrix<Complex64> {
        &self.matrix
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    /// Conjugate transpose.
    pub fn dagger(&self) -> Operator {
        Operator { space: self.space, matrix: self.matrix.adjoint() }
    }

    pub fn apply(&self, state: &State) -> State {
        &self.matrix * state
    }

    pub fn max_abs(&self) -> f64 {
        self.matrix.iter().map(|c| c.norm()).fold(0.0, f64::max)
    }

    /// Max entry magnitude of `self − other`.
    pub fn distance(&self, other: &Operator) -> f64 {
        assert_eq!(self.space, other.space, "operators live on different spaces");
        (&self.matrix - &other.matrix)
            .iter()
            .map(|c| c.norm())
            .fold(0.0, f64::max)
    }

    pub fn scale(&self, factor: Complex64) -> Operator {
        Operator { space: self.space, matrix: &self.matrix * factor }
    }

    /// Matrix inverse; `None` if the LU factorization fails.
    pub fn try_inverse(&self) -> Option<Operator> {
        self.matrix
            .clone()
            .try_inverse()
            .map(|matrix| Operator { space: self.space, matrix })
    }

    /// 2-norm condition number, via singular values.
    pub fn condition_number(&self) -> f64 {
        let sv = self.matrix.clone().svd(false, false).singular_values;
        let max = sv.iter().cloned().fold(0.0, f64::max);
        let min = sv.iter().cloned().fold(f64::INFINITY, f64::min);
        if min <= 0.0 {
            f64::INFINITY
        } else {
            max / min
        }
    }

    /// Matrix exponential by scaling-and-squaring with a Taylor kernel.
    pub fn expm(&self) -> Operator {
        let dim = self.dim();
        // Crude 1-norm bound for the scaling step.
        let norm: f64 = (0..dim)
            .map(|j| self.matrix.column(j).iter().map(|c| c.norm()).sum::<f64>())
            .fold(0.0, f64::max);
        let squarings = if norm > 0.5 { (norm / 0.5).log2().ceil() as u32 } else { 0 };
        let scaled = &self.matrix / Complex64::new(2f64.powi(squarings as i32), 0.0);
        let mut result = DMatrix::identity(dim, dim);
        let mut term = DMatrix::identity(dim, dim);
        for k in 1..=24u32 {
            term = matmul(&term, &scaled) / Complex64::new(k as f64, 0.0);
            result += &term;
        }
        for _ in 0..squarings {
            result = matmul(&result, &result);
        }
        Operator { space: self.space, matrix: result }
    }

    /// Row-major JSON-ready dump with `[re, im]` entry pairs.
    pub fn to_dump(&self) -> MatrixDump {
        let dim = self.dim();
        let matrix = (0..dim)
            .map(|r| (0..dim).map(|c| [self.matrix[(r, c)].re, self.matrix[(r, c)].im]).collect())
            .collect();
        MatrixDump {
            modes: self.space.modes,
            statistics: match self.space.statistics {
                Statistics::Bose => "bose".into(),
                Statistics::Fermi => "fermi".into(),
            },
            cutoff: self.space.cutoff,
            dim,
            matrix,
        }
    }
}

/// Serializable row-major matrix dump for oracle cross-checks.
#[derive(Debug, Clone, Serialize)]
pub struct MatrixDump {
    pub modes: usize,
    pub statistics: String,
    pub cutoff: u32,
    pub dim: usize,
    pub matrix: Vec<Vec<[f64; 2]>>,
}

macro_rules! impl_binop {
    ($trait:ident, $method:ident, $op:tt) => {
        impl std::ops::$trait<&Operator> for &Operator {
            type Output = Operator;
            fn $method(self, rhs: &Operator) -> Operator {
                assert_eq!(self.space, rhs.space, "operators live on different spaces");
                Operator { space: self.space, matrix: &self.matrix $op &rhs.matrix }
            }
        }
    };
}

impl_binop!(Add, add, +);
impl_binop!(Sub, sub, -);

impl std::ops::Mul<&Operator> for &Operator {
    type Output = Operator;
    fn mul(self, rhs: &Operator) -> Operator {
        assert_eq!(self.space, rhs.space, "operators live on different spaces");
        Operator { space: self.space, matrix: matmul(&self.matrix, &rhs.matrix) }
    }
}

/// Complex matrix product through the packed zgemm kernel; nalgebra's own
/// `Complex64` path is a naive triple loop, which dominates the whole
/// verification runtime at cutoff 12.
fn matmul(a: &DMatrix<Complex64>, b: &DMatrix<Complex64>) -> DMatrix<Complex64> {
    let (m, k) = a.shape();
    let n = b.ncols();
    debug_assert_eq!(k, b.nrows());
    let mut c = DMatrix::<Complex64>::zeros(m, n);
    // SAFETY: Complex64 is repr(C) { re: f64, im: f64 }, layout-identical to
    // [f64; 2]; the three matrices are dense column-major (row stride 1,
    // column stride = number of rows) and c is freshly allocated.
    unsafe {
        matrixmultiply::zgemm(
            matrixmultiply::CGemmOption::Standard,
            matrixmultiply::CGemmOption::Standard,
            m,
            k,
            n,
            [1.0, 0.0],
            a.as_ptr() as *const [f64; 2],
            1,
            m as isize,
            b.as_ptr() as *const [f64; 2],
            1,
            k as isize,
            [0.0, 0.0],
            c.as_mut_ptr() as *mut [f64; 2],
            1,
            m as isize,
        );
    }
    c
}

impl std::ops::Mul<f64> for &Operator {
    type Output = Operator;
    fn mul(self, rhs: f64) -> Operator {
        self.scale(Complex64::new(rhs, 0.0))
    }
}

impl std::ops::Neg for &Operator {
    type Output = Operator;
    fn neg(self) -> Operator {
        self.scale(Complex64::new(-1.0, 0.0))
    }
}

pub fn commutator(a: &Operator, b: &Operator) -> Operator {
    &(a * b) - &(b * a)
}

pub fn anticommutator(a: &Operator, b: &Operator) -> Operator {
    &(a * b) + &(b * a)
}

/// Creation operator for one mode.
///
/// Bose: `⟨…,n+1,…|a⁺|…,n,…⟩ = √(n+1)`, truncated to zero above the cutoff.
/// Fermi: flips the occupation 0 → 1 with the Jordan–Wigner sign
/// `(−1)^{Σ_{j<mode} n_j}`, which makes the CAR exact.
pub fn creation(space: FockSpace, mode: usize) -> Result<Operator> {
    space.check_mode(mode)?;
    let dim = space.dim();
    let mut matrix = DMatrix::zeros(dim, dim);
    for col in 0..dim {
        let mut occ = space.occupation(col);
        match space.statistics() {
            Statistics::Bose => {
                if occ[mode] < space.cutoff() {
                    occ[mode] += 1;
                    let row = space.index_of(&occ);
                    matrix[(row, col)] = Complex64::new((occ[mode] as f64).sqrt(), 0.0);
                }
            }
            Statistics::Fermi => {
                if occ[mode] == 0 {
                    let parity: u32 = occ[..mode].iter().sum();
                    let sign = if parity % 2 == 0 { 1.0 } else { -1.0 };
                    occ[mode] = 1;
                    let row = space.index_of(&occ);
                    matrix[(row, col)] = Complex64::new(sign, 0.0);
                }
            }
        }
    }
    Ok(Operator { space, matrix })
}

/// Annihilation operator: the conjugate transpose of [`creation`].
pub fn annihilation(space: FockSpace, mode: usize) -> Result<Operator> {
    Ok(creation(space, mode)?.dagger())
}

/// Occupation-number operator `a⁺_mode a_mode` (diagonal).
pub fn number_op(space: FockSpace, mode: usize) -> Result<Operator> {
    space.check_mode(mode)?;
    diag_fn(space, |occ| occ[mode] as f64)
}

/// Total number operator `Σ_i a⁺_i a_i`.
pub fn total_number(space: FockSpace) -> Operator {
    diag_fn(space, |occ| occ.iter().sum::<u32>() as f64)
        .expect("total occupation is finite")
}

/// Diagonal operator with entries `f(n_0, …, n_{N−1})`.
pub fn diag_fn<F>(space: FockSpace, f: F) -> Result<Operator>
where
    F: Fn(&[u32]) -> f64,
{
    let dim = space.dim();
    let mut matrix = DMatrix::zeros(dim, dim);
    for i in 0..dim {
        let occ = space.occupation(i);
        let value = f(&occ);
        if !value.is_finite() {
            return Err(Error::NonFiniteDiagonal { state: occ, value });
        }
        matrix[(i, i)] = Complex64::new(value, 0.0);
    }
    Ok(Operator { space, matrix })
}

/// Max-entry residual of `lhs − rhs` over columns in the guarded subspace
/// (total occupation ≤ cutoff − degree), normalized by one plus the largest
/// `rhs` magnitude on that block.
pub fn guarded_residual(lhs: &Operator, rhs: &Operator, guard: GuardSpec) -> Result<f64> {
    if lhs.space != rhs.space {
        return Err(Error::SpaceMismatch);
    }
    let space = lhs.space;
    if guard.degree > space.cutoff() {
        return Err(Error::EmptyGuard { degree: guard.degree, cutoff: space.cutoff() });
    }
    let limit = space.cutoff() - guard.degree;
    let dim = space.dim();
    let mut num = 0.0f64;
    let mut den = 0.0f64;
    for col in 0..dim {
        if space.total_occupation(col) > limit {
            continue;
        }
        for row in 0..dim {
            let d = (lhs.matrix[(row, col)] - rhs.matrix[(row, col)]).norm();
            num = num.max(d);
            den = den.max(rhs.matrix[(row, col)].norm());
        }
    }
    Ok(num / (1.0 + den))
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;
    use proptest::prelude::*;

    fn c(re: f64) -> Complex64 {
        Complex64::new(re, 0.0)
    }

    #[test]
    fn basis_ordering_is_lexicographic_mode0_slowest() {
        let space = FockSpace::bose(2, 2).unwrap();
        assert_eq!(space.dim(), 9);
        assert_eq!(space.occupation(0), vec![0, 0]);
        assert_eq!(space.occupation(1), vec![0, 1]);
        assert_eq!(space.occupation(3), vec![1, 0]);
        assert_eq!(space.index_of(&[2, 1]), 7);
        for i in 0..space.dim() {
            assert_eq!(space.index_of(&space.occupation(i)), i);
        }
    }

    #[test]
    fn fermi_cutoff_forced_to_one() {
        let space = FockSpace::new(3, Statistics::Fermi, 9).unwrap();
        assert_eq!(space.cutoff(), 1);
        assert_eq!(space.dim(), 8);
    }

    #[test]
    fn bose_ladder_matrix_entries() {
        let space = FockSpace::bose(1, 2).unwrap();
        let adag = creation(space, 0).unwrap();
        assert_eq!(adag.matrix()[(1, 0)], c(1.0));
        assert_eq!(adag.matrix()[(2, 1)], c(2f64.sqrt()));
        // The |D⟩ column truncates to zero.
        for row in 0..space.dim() {
            assert_eq!(adag.matrix()[(row, 2)], c(0.0));
        }
        // ⟨D|a⁺|D−1⟩ = √D at a larger cutoff.
        let space = FockSpace::bose(1, 9).unwrap();
        let adag = creation(space, 0).unwrap();
        assert_relative_eq!(adag.matrix()[(9, 8)].re, 3.0, max_relative = 1e-15);
    }

    #[test]
    fn annihilation_kills_vacuum_and_is_adjoint() {
        let space = FockSpace::bose(2, 4).unwrap();
        for mode in 0..2 {
            let a = annihilation(space, mode).unwrap();
            let on_vacuum = a.apply(&space.vacuum());
            assert_eq!(on_vacuum.iter().map(|x| x.norm()).sum::<f64>(), 0.0);
            assert_eq!(a.distance(&creation(space, mode).unwrap().dagger()), 0.0);
        }
    }

    #[test]
    fn ccr_holds_on_guarded_subspace() {
        for cutoff in [4, 8, 14] {
            let space = FockSpace::bose(2, cutoff).unwrap();
            let id = Operator::identity(space);
            for i in 0..2 {
                for j in 0..2 {
                    let ai = annihilation(space, i).unwrap();
                    let aj = annihilation(space, j).unwrap();
                    let adj = creation(space, j).unwrap();
                    let comm_aa = commutator(&ai, &aj);
                    let r = guarded_residual(&comm_aa, &Operator::zero(space), GuardSpec::new(0))
                        .unwrap();
                    assert_eq!(r, 0.0, "[a^{i}, a^{j}] must vanish exactly");
                    let comm = commutator(&ai, &adj);
                    let rhs = if i == j { id.clone() } else { Operator::zero(space) };
                    let r = guarded_residual(&comm, &rhs, GuardSpec::new(1)).unwrap();
                    assert!(r < 1e-13, "CCR residual {r:.3e} at ({i},{j}), D={cutoff}");
                }
            }
        }
    }

    #[test]
    fn ccr_violation_is_visible_without_guard() {
        let space = FockSpace::bose(1, 8).unwrap();
        let a = annihilation(space, 0).unwrap();
        let adag = creation(space, 0).unwrap();
        let comm = commutator(&a, &adag);
        let r = guarded_residual(&comm, &Operator::identity(space), GuardSpec::new(0)).unwrap();
        // The |D⟩ column violates the CCR by construction: residual is O(D).
        assert!(r > 1.0, "expected an O(D) discrepancy, got {r}");
    }

    #[test]
    fn car_is_exact() {
        for modes in [2, 3] {
            let space = FockSpace::fermi(modes).unwrap();
            for i in 0..modes {
                for j in 0..modes {
                    let ai = annihilation(space, i).unwrap();
                    let aj = annihilation(space, j).unwrap();
                    let ci = creation(space, i).unwrap();
                    let cj = creation(space, j).unwrap();
                    let zero = Operator::zero(space);
                    assert!(anticommutator(&ai, &aj).distance(&zero) < 1e-15);
                    assert!(anticommutator(&ci, &cj).distance(&zero) < 1e-15);
                    let rhs = if i == j {
                        Operator::identity(space)
                    } else {
                        zero.clone()
                    };
                    assert!(anticommutator(&ai, &cj).distance(&rhs) < 1e-15);
                }
            }
        }
    }

    #[test]
    fn fermi_creators_anticommute() {
        let space = FockSpace::fermi(2).unwrap();
        let up = creation(space, 0).unwrap();
        let down = creation(space, 1).unwrap();
        let vac = space.vacuum();
        let lhs = down.apply(&up.apply(&vac));
        let rhs = up.apply(&down.apply(&vac));
        let sum: f64 = (0..4).map(|k| (lhs[k] + rhs[k]).norm()).sum();
        assert!(sum < 1e-15, "a⁺_↓a⁺_↑|0⟩ must equal −a⁺_↑a⁺_↓|0⟩");
    }

    #[test]
    fn number_operators_are_diagonal_occupations() {
        let space = FockSpace::bose(1, 3).unwrap();
        let n = number_op(space, 0).unwrap();
        for i in 0..4 {
            assert_eq!(n.matrix()[(i, i)], c(i as f64));
        }
        let space = FockSpace::fermi(2).unwrap();
        let total = total_number(space);
        let diag: Vec<f64> = (0..4).map(|i| total.matrix()[(i, i)].re).collect();
        assert_eq!(diag, vec![0.0, 1.0, 1.0, 2.0]);
        assert_eq!(total.apply(&space.vacuum())[0], c(0.0));
    }

    #[test]
    fn diag_fn_identity_powers_and_errors() {
        let space = FockSpace::bose(2, 3).unwrap();
        let one = diag_fn(space, |_| 1.0).unwrap();
        assert_eq!(one.distance(&Operator::identity(space)), 0.0);

        let q: f64 = 1.3;
        let powers = diag_fn(space, |occ| q.powi(occ[1] as i32)).unwrap();
        assert_relative_eq!(
            powers.matrix()[(space.index_of(&[2, 3]), space.index_of(&[2, 3]))].re,
            q.powi(3),
            max_relative = 1e-15
        );

        let err = diag_fn(space, |occ| 1.0 / occ[0] as f64).unwrap_err();
        match err {
            Error::NonFiniteDiagonal { state, .. } => assert_eq!(state, vec![0, 0]),
            other => panic!("unexpected error {other:?}"),
        }
    }

    #[test]
    fn creation_applied_to_vacuum_gives_one_particle_states() {
        let space = FockSpace::bose(2, 3).unwrap();
        for mode in 0..2 {
            let adag = creation(space, mode).unwrap();
            let state = adag.apply(&space.vacuum());
            let mut occ = vec![0, 0];
            occ[mode] = 1;
            let expected = space.basis_state(&occ).unwrap();
            let diff: f64 = (0..space.dim()).map(|k| (state[k] - expected[k]).norm()).sum();
            assert!(diff < 1e-15);
        }
    }

    #[test]
    fn guarded_residual_edge_cases() {
        let space = FockSpace::bose(1, 3).unwrap();
        let a = annihilation(space, 0).unwrap();
        assert_eq!(guarded_residual(&a, &a, GuardSpec::new(1)).unwrap(), 0.0);
        assert!(matches!(
            guarded_residual(&a, &a, GuardSpec::new(4)),
            Err(Error::EmptyGuard { .. })
        ));
        let other = FockSpace::bose(1, 4).unwrap();
        let b = annihilation(other, 0).unwrap();
        assert!(matches!(
            guarded_residual(&a, &b, GuardSpec::new(0)),
            Err(Error::SpaceMismatch)
        ));
    }

    #[test]
    fn mode_out_of_range_is_reported() {
        let space = FockSpace::bose(2, 3).unwrap();
        assert!(matches!(
            creation(space, 2),
            Err(Error::ModeOutOfRange { mode: 2, modes: 2 })
        ));
    }

    #[test]
    fn matrix_dump_is_row_major_re_im() {
        let space = FockSpace::bose(1, 1).unwrap();
        let adag = creation(space, 0).unwrap();
        let json = serde_json::to_value(adag.to_dump()).unwrap();
        assert_eq!(json["dim"], 2);
        assert_eq!(json["statistics"], "bose");
        assert_eq!(json["matrix"][1][0][0], 1.0);
        assert_eq!(json["matrix"][0][1][0], 0.0);
        assert_eq!(json["matrix"][1][0][1], 0.0);
    }

    #[test]
    fn expm_of_zero_and_diagonal() {
        let space = FockSpace::bose(1, 5).unwrap();
        let zero = Operator::zero(space);
        assert!(zero.expm().distance(&Operator::identity(space)) < 1e-15);
        let n = number_op(space, 0).unwrap();
        let exp_n = n.scale(c(0.3)).expm();
        for k in 0..=5usize {
            assert_relative_eq!(
                exp_n.matrix()[(k, k)].re,
                (0.3 * k as f64).exp(),
                max_relative = 1e-13
            );
        }
    }

    proptest! {
        /// Shift identity: f(n)·a⁺_i = a⁺_i·f(n + e_i) on the guarded subspace.
        #[test]
        fn prop_diag_shift_identity(
            c0 in -2.0..2.0f64,
            c1 in -2.0..2.0f64,
            c2 in -1.0..1.0f64,
            mode in 0usize..2,
        ) {
            let space = FockSpace::bose(2, 5).unwrap();
            let f = move |occ: &[u32]| {
                c0 + c1 * occ[0] as f64 + c2 * (occ[1] as f64).powi(2)
            };
            let shifted = move |occ: &[u32]| {
                let mut occ = occ.to_vec();
                occ[mode] += 1;
                f(&occ)
            };
            let adag = creation(space, mode).unwrap();
            let lhs = &diag_fn(space, f).unwrap() * &adag;
            let rhs = &adag * &diag_fn(space, shifted).unwrap();
            let r = guarded_residual(&lhs, &rhs, GuardSpec::new(1)).unwrap();
            prop_assert!(r < 1e-13);
        }
    }
}
