//! Log-gamma and polygamma by upward recurrence into the Stirling regime.

use super::exact::bernoulli_number;
use super::ensure_finite_real;
use crate::error::{Error, Result};
use crate::value::rational_to_f64;
use std::sync::OnceLock;

const STIRLING_TERMS: usize = 10;

fn bern_f64(n: usize) -> f64 {
    static TABLE: OnceLock<Vec<f64>> = OnceLock::new();
    TABLE.get_or_init(|| (0..=2 * STIRLING_TERMS + 4).map(|i| rational_to_f64(&bernoulli_number(i))).collect())[n]
}

/// Natural log of Gamma(x) for x > 0, relative error within 1e-13.
pub fn log_gamma(x: f64) -> Result<f64> {
    if !(x > 0.0) {
        return Err(Error::Domain(format!("log_gamma requires x > 0, got {x}")));
    }
    let mut shift = 0.0;
    let mut z = x;
    while z < 10.0 {
        shift += z.ln();
        z += 1.0;
    }
    let mut series = 0.0;
    for r in 1..=STIRLING_TERMS {
        series += bern_f64(2 * r) / ((2 * r * (2 * r - 1)) as f64 * z.powi(2 * r as i32 - 1));
    }
    let half_log_2pi = 0.5 * (2.0 * std::f64::consts::PI).ln();
    ensure_finite_real((z - 0.5) * z.ln() - z + half_log_2pi + series - shift, "log_gamma")
}

/// m-th derivative of digamma at x > 0 (m = 0 is digamma itself),
/// relative error within 1e-12 for moderate m.
pub fn polygamma(m: usize, x: f64) -> Result<f64> {
    if !(x > 0.0) {
        return Err(Error::Domain(format!("polygamma requires x > 0, got {x}")));
    }
    let threshold = 10.0 + 2.0 * m as f64;
    let mut z = x;
    let mut shift = 0.0;
    // psi^(m)(z) = psi^(m)(z+1) - (-1)^m m! z^(-m-1)
    let sign = if m % 2 == 0 { 1.0 } else { -1.0 };
    let m_fact = factorial(m);
    while z < threshold {
        shift -= sign * m_fact * z.powi(-(m as i32) - 1);
        z += 1.0;
    }
    let asymptotic = if m == 0 {
        let mut s = z.ln() - 0.5 / z;
        for r in 1..=STIRLING_TERMS {
            s -= bern_f64(2 * r) / (2.0 * r as f64 * z.powi(2 * r as i32));
        }
        s
    } else {
        let lead = if m % 2 == 0 { -1.0 } else { 1.0 };
        let mut s = factorial(m - 1) / z.powi(m as i32) + m_fact / (2.0 * z.powi(m as i32 + 1));
        for r in 1..=STIRLING_TERMS {
            s += bern_f64(2 * r) * factorial(2 * r + m - 1) / (factorial(2 * r) * z.powi((2 * r + m) as i32));
        }
        lead * s
    };
    ensure_finite_real(asymptotic + shift, "polygamma")
}

fn factorial(n: usize) -> f64 {
    (1..=n).fold(1.0, |acc, i| acc * i as f64)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gamma_of_small_integers() {
        assert!(log_gamma(1.0).unwrap().abs() < 1e-14);
        assert!((log_gamma(6.0).unwrap() - 120.0_f64.ln()).abs() < 1e-13);
    }

    #[test]
    fn gamma_half() {
        let expected = 0.5 * std::f64::consts::PI.ln();
        assert!((log_gamma(0.5).unwrap() - expected).abs() < 1e-13);
    }

    #[test]
    fn digamma_at_one_is_minus_euler_gamma() {
        let gamma = 0.577_215_664_901_532_9;
        assert!((polygamma(0, 1.0).unwrap() + gamma).abs() < 1e-13);
    }

    #[test]
    fn trigamma_at_one_is_zeta_two() {
        let zeta2 = std::f64::consts::PI.powi(2) / 6.0;
        assert!((polygamma(1, 1.0).unwrap() - zeta2).abs() < 1e-12);
    }

    #[test]
    fn domain_errors() {
        assert!(log_gamma(0.0).is_err());
        assert!(polygamma(2, -1.5).is_err());
    }
}
