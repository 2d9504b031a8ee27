//! Scalar kernels consumed by every other module: exact Bernoulli numbers,
//! Hurwitz zeta with analytic continuation, log-gamma and polygamma,
//! breakpoint-aware adaptive quadrature, and alternating-block series
//! acceleration.
//!
//! All operations are pure functions of their arguments and safe to call
//! concurrently. Floating results are checked for finiteness before they are
//! returned; NaN or infinity is reported as an error, never propagated.

mod accel;
mod exact;
mod gamma;
mod hurwitz;
mod quad;

pub use accel::aitken_accelerate;
pub use exact::{bernoulli_number, binomial};
pub use gamma::{log_gamma, polygamma};
pub use hurwitz::hurwitz_zeta;
pub use quad::{
    integrate_piecewise, integrate_piecewise_complex, integrate_piecewise_complex_with_estimate,
    integrate_piecewise_with_estimate, QuadratureSpec,
};

use crate::error::{Error, Result};
use num_complex::Complex64;

pub(crate) fn ensure_finite(z: Complex64, what: &str) -> Result<Complex64> {
    if z.re.is_finite() && z.im.is_finite() {
        Ok(z)
    } else {
        Err(Error::NonFinite(what.to_string()))
    }
}

pub(crate) fn ensure_finite_real(x: f64, what: &str) -> Result<f64> {
    if x.is_finite() {
        Ok(x)
    } else {
        Err(Error::NonFinite(what.to_string()))
    }
}
