//! sl(N) braid matrices and the Hecke projector pair.

use nalgebra::DMatrix;

use crate::error::{Error, Result};
use crate::qnum::QParam;

/// Which ordered index pair of the braid matrix carries the `(q − q⁻¹)`
/// coupling term. `UpperCoupled` puts it on column pairs `(k, l)` with
/// `k < l`; `LowerCoupled` on `k > l`. Both choices satisfy the Hecke
/// relation and reduce to the flip at q = 1; only one of them is consistent
/// with a given orientation of the deformed exchange relations.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ROrientation {
    UpperCoupled,
    LowerCoupled,
}

impl ROrientation {
    pub const ALL: [ROrientation; 2] = [ROrientation::UpperCoupled, ROrientation::LowerCoupled];

    pub fn label(&self) -> &'static str {
        match self {
            ROrientation::UpperCoupled => "R-upper",
            ROrientation::LowerCoupled => "R-lower",
        }
    }
}

/// Braid matrix `R̂` of the fundamental sl(N) representation, as an
/// `N² × N²` real matrix over composite indices `(i, h) ↦ i·N + h`.
///
/// Action on product basis vectors:
///
/// - `R̂ (e_k ⊗ e_k) = q · e_k ⊗ e_k`
/// - `R̂ (e_k ⊗ e_l) = e_l ⊗ e_k` on the uncoupled ordered pairs
/// - `R̂ (e_k ⊗ e_l) = e_l ⊗ e_k + (q − q⁻¹) e_k ⊗ e_l` on the coupled ones
///
/// Satisfies the Hecke relation `R̂² = (q − q⁻¹) R̂ + 1`, equivalently
/// `(R̂ − q)(R̂ + q⁻¹) = 0`.
#[derive(Debug, Clone)]
pub struct RMatrix {
    n: usize,
    p: QParam,
    orientation: ROrientation,
    matrix: DMatrix<f64>,
}

impl RMatrix {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn p(&self) -> QParam {
        self.p
    }

    pub fn orientation(&self) -> ROrientation {
        self.orientation
    }

    pub fn matrix(&self) -> &DMatrix<f64> {
        &self.matrix
    }

    /// Entry `R̂^{ih}_{jk}`: coefficient of `e_i ⊗ e_h` in `R̂(e_j ⊗ e_k)`.
    pub fn entry(&self, i: usize, h: usize, j: usize, k: usize) -> f64 {
        self.matrix[(i * self.n + h, j * self.n + k)]
    }

    /// Max-entry residual of `R̂² − (q − q⁻¹)R̂ − 1`.
    pub fn hecke_residual(&self) -> f64 {
        let q = self.p.q();
        let dim = self.n * self.n;
        let residual = &self.matrix * &self.matrix
            - &self.matrix * (q - 1.0 / q)
            - DMatrix::<f64>::identity(dim, dim);
        residual.iter().map(|x| x.abs()).fold(0.0, f64::max)
    }
}

/// Builds the standard sl(N) braid matrix.
pub fn r_matrix_sl(n: usize, p: QParam, orientation: ROrientation) -> Result<RMatrix> {
    if n < 2 {
        return Err(Error::Construction(format!(
            "the fundamental dimension must be at least 2, got {n}"
        )));
    }
    let q = p.q();
    let coupling = q - 1.0 / q;
    let dim = n * n;
    let mut matrix = DMatrix::zeros(dim, dim);
    for j in 0..n {
        for k in 0..n {
            let col = j * n + k;
            if j == k {
                matrix[(col, col)] = q;
            } else {
                matrix[(k * n + j, col)] = 1.0;
                let coupled = match orientation {
                    ROrientation::UpperCoupled => j < k,
                    ROrientation::LowerCoupled => j > k,
                };
                if coupled {
                    matrix[(col, col)] += coupling;
                }
            }
        }
    }
    Ok(RMatrix { n, p, orientation, matrix })
}

/// Deformed antisymmetric/symmetric projector pair
/// `P_∓ = (q + q⁻¹)⁻¹ (q^{±1}·1 ∓ R̂)`.
///
/// Each projector is idempotent, the pair is complete, and their mutual
/// products vanish.
#[derive(Debug, Clone)]
pub struct ProjectorPair {
    pub p_minus: DMatrix<f64>,
    pub p_plus: DMatrix<f64>,
}

impl ProjectorPair {
    pub fn idempotency_residual(&self) -> f64 {
        let r_minus = &self.p_minus * &self.p_minus - &self.p_minus;
        let r_plus = &self.p_plus * &self.p_plus - &self.p_plus;
        r_minus
            .iter()
            .chain(r_plus.iter())
            .map(|x| x.abs())
            .fold(0.0, f64::max)
    }

    pub fn completeness_residual(&self) -> f64 {
        let dim = self.p_minus.nrows();
        let r = &self.p_minus + &self.p_plus - DMatrix::<f64>::identity(dim, dim);
        r.iter().map(|x| x.abs()).fold(0.0, f64::max)
    }

    pub fn orthogonality_residual(&self) -> f64 {
        let r1 = &self.p_minus * &self.p_plus;
        let r2 = &self.p_plus * &self.p_minus;
        r1.iter().chain(r2.iter()).map(|x| x.abs()).fold(0.0, f64::max)
    }
}

/// Builds the projector pair from a Hecke-valid braid matrix.
pub fn projectors_sl(r: &RMatrix) -> Result<ProjectorPair> {
    let hecke = r.hecke_residual();
    if hecke > 1e-10 {
        return Err(Error::Construction(format!(
            "braid matrix violates the Hecke relation (residual {hecke:.3e})"
        )));
    }
    let q = r.p().q();
    let dim = r.n() * r.n();
    let norm = 1.0 / (q + 1.0 / q);
    let id = DMatrix::<f64>::identity(dim, dim);
    let p_minus = (&id * q - r.matrix()) * norm;
    let p_plus = (&id * (1.0 / q) + r.matrix()) * norm;
    Ok(ProjectorPair { p_minus, p_plus })
}
