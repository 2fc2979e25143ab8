//! q-number arithmetic and q-special functions.
//!
//! The deformation parameter is `h` with `q = e^h`. Two q-number
//! conventions appear throughout:
//!
//! - basic:     `(x)_b = (b^x − 1)/(b − 1)`
//! - symmetric: `[x]_q = (q^x − q^{−x})/(q − q^{−1})`
//!
//! Functions that are generic in the base (q versus q²) take the base as a
//! plain `f64`; [`QParam`] carries the deformation parameter itself and is
//! the argument of the u·v⁻¹ scalar formulas, which are hardwired to base q².
//!
//! `b = 1` is handled everywhere by exact classical branches, never by
//! limits of the q-formulas.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Relative tolerance at which the q-Gamma infinite product is truncated.
const QGAMMA_PRODUCT_TOL: f64 = 1e-14;
/// Hard cap on the number of product factors.
const QGAMMA_PRODUCT_CAP: usize = 1_000_000;

/// Deformation parameter pair `(h, q = e^h)`.
///
/// `h` is the single source of truth; `q` is always recomputed from it, so
/// `q > 0` holds by construction and `q = 1` exactly when `h = 0`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct QParam {
    h: f64,
}

impl QParam {
    /// Classical point: h = 0, q = 1.
    pub fn classical() -> Self {
        QParam { h: 0.0 }
    }

    pub fn from_h(h: f64) -> Result<Self> {
        if !h.is_finite() {
            return Err(Error::InvalidH(h));
        }
        Ok(QParam { h })
    }

    /// Builds the parameter from `q`, storing `h = ln q`.
    pub fn from_q(q: f64) -> Result<Self> {
        if !(q > 0.0) || !q.is_finite() {
            return Err(Error::InvalidQ(q));
        }
        Ok(QParam { h: q.ln() })
    }

    pub fn h(&self) -> f64 {
        self.h
    }

    pub fn q(&self) -> f64 {
        self.h.exp()
    }

    pub fn q_squared(&self) -> f64 {
        let q = self.q();
        q * q
    }

    /// True exactly at the undeformed point q = 1.
    pub fn is_classical(&self) -> bool {
        self.h == 0.0
    }

    /// The parameter with h ↦ −h (q ↦ q⁻¹).
    pub fn inverted(&self) -> Self {
        QParam { h: -self.h }
    }
}

/// Basic q-number `(x)_b = (b^x − 1)/(b − 1)`, with the continuous value `x`
/// at `b = 1`.
pub fn basic_qnumber(x: f64, base: f64) -> f64 {
    if base == 1.0 {
        x
    } else {
        (base.powf(x) - 1.0) / (base - 1.0)
    }
}

/// Symmetric q-number `[x]_q = (q^x − q^{−x})/(q − q^{−1})`; `x` at `q = 1`.
pub fn symmetric_qnumber(x: f64, q: f64) -> f64 {
    if q == 1.0 {
        x
    } else {
        (q.powf(x) - q.powf(-x)) / (q - 1.0 / q)
    }
}

/// q-factorial `(n)_b! = ∏_{k=1..n} (k)_b`; the empty product is 1.
pub fn qfactorial(n: u32, base: f64) -> f64 {
    (1..=n).map(|k| basic_qnumber(k as f64, base)).product()
}

/// q-Gamma function with base `b`, normalized by `Γ_b(1) = 1` and satisfying
/// `Γ_b(x+1) = (x)_b Γ_b(x)`.
///
/// Integer arguments reduce exactly to the q-factorial. Non-integer
/// arguments use the infinite-product form for `b < 1`
///
/// `Γ_b(x) = (1−b)^{1−x} ∏_{k≥0} (1−b^{k+1})/(1−b^{k+x})`
///
/// and the reflection `Γ_b(x) = b^{(x−1)(x−2)/2} Γ_{1/b}(x)` for `b > 1`.
/// At `b = 1` this is the Euler Gamma function.
pub fn qgamma(x: f64, base: f64) -> Result<f64> {
    if !(x > 0.0) || !x.is_finite() {
        return Err(Error::Domain(format!(
            "qgamma requires x > 0, got x = {x}"
        )));
    }
    if !(base > 0.0) || !base.is_finite() {
        return Err(Error::Domain(format!(
            "qgamma requires a positive base, got {base}"
        )));
    }
    if base == 1.0 {
        return Ok(statrs::function::gamma::gamma(x));
    }
    if x.fract() == 0.0 && x < u32::MAX as f64 {
        return Ok(qfactorial(x as u32 - 1, base));
    }
    if base < 1.0 {
        Ok(qgamma_product(x, base))
    } else {
        let prefactor = base.powf((x - 1.0) * (x - 2.0) / 2.0);
        Ok(prefactor * qgamma_product(x, 1.0 / base))
    }
}

/// Infinite-product q-Gamma for base strictly inside (0, 1). Truncated when
/// the multiplicative update is within `QGAMMA_PRODUCT_TOL` of 1.
fn qgamma_product(x: f64, base: f64) -> f64 {
    debug_assert!(base > 0.0 && base < 1.0);
    let mut acc = (1.0 - base).powf(1.0 - x);
    for k in 0..QGAMMA_PRODUCT_CAP {
        let kk = k as f64;
        let factor = (1.0 - base.powf(kk + 1.0)) / (1.0 - base.powf(kk + x));
        acc *= factor;
        if (factor - 1.0).abs() < QGAMMA_PRODUCT_TOL {
            break;
        }
    }
    acc
}

/// Scalar `u·v⁻¹` for the sl(N)-covariant deformation:
/// `Γ(n+1) / Γ_{q²}(n+1)`.
///
/// At q = 1 this is exactly 1; at integer `n` it is `n! / (n)_{q²}!`.
pub fn uv_ratio_sl(n: f64, p: &QParam) -> Result<f64> {
    if !(n >= 0.0) {
        return Err(Error::Domain(format!(
            "uv_ratio_sl requires n >= 0, got {n}"
        )));
    }
    if p.is_classical() {
        return Ok(1.0);
    }
    let base = p.q_squared();
    if n.fract() == 0.0 && n < 171.0 {
        let classical: f64 = (1..=(n as u32)).map(|k| k as f64).product();
        return Ok(classical / qfactorial(n as u32, base));
    }
    Ok(statrs::function::gamma::gamma(n + 1.0) / qgamma(n + 1.0, base)?)
}

/// Scalar `u·v⁻¹` for the so(N)-covariant deformation:
///
/// `((1+q^{N−2})/2)^{−n} · ∏_{±} Γ(x_±)/Γ_{q²}(x_±)` with
/// `x_∓ = (n + N/2 + 1 ∓ l)/2` and `l` the square root of the quadratic
/// Casimir eigenvalue.
pub fn uv_ratio_so(n: f64, l: f64, dim_n: u32, p: &QParam) -> Result<f64> {
    if dim_n < 3 {
        return Err(Error::Domain(format!(
            "uv_ratio_so requires N >= 3, got {dim_n}"
        )));
    }
    let half_n = dim_n as f64 / 2.0;
    let x_minus = (n + half_n + 1.0 - l) / 2.0;
    let x_plus = (n + half_n + 1.0 + l) / 2.0;
    if !(x_minus > 0.0) || !(x_plus > 0.0) {
        return Err(Error::Domain(format!(
            "uv_ratio_so: Gamma arguments must be positive, got ({x_minus}, {x_plus}) \
             for n = {n}, l = {l}, N = {dim_n}"
        )));
    }
    if p.is_classical() {
        return Ok(1.0);
    }
    let q = p.q();
    let base = p.q_squared();
    let prefactor = ((1.0 + q.powi(dim_n as i32 - 2)) / 2.0).powf(-n);
    let ratio = |x: f64| -> Result<f64> {
        Ok(statrs::function::gamma::gamma(x) / qgamma(x, base)?)
    };
    Ok(prefactor * ratio(x_minus)? * ratio(x_plus)?)
}
