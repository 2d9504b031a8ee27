//! Hurwitz zeta by Euler-MacLaurin continuation, valid for all complex s
//! away from the pole at s = 1.

use super::exact::bernoulli_number;
use super::ensure_finite;
use crate::error::{Error, Result};
use crate::value::rational_to_f64;
use num_complex::Complex64;

/// zeta(s, a) = sum_{n>=0} (n+a)^(-s), analytically continued; absolute
/// error within `tol`.
///
/// Strategy: shift the argument by N direct terms, then close with the tail
/// integral, the half term, and M Bernoulli corrections; N and M grow until
/// the first omitted correction falls below the tolerance.
pub fn hurwitz_zeta(s: Complex64, a: f64, tol: f64) -> Result<Complex64> {
    if !(a > 0.0) {
        return Err(Error::Domain(format!("hurwitz_zeta requires a > 0, got {a}")));
    }
    if !(tol > 0.0) {
        return Err(Error::Domain(format!("hurwitz_zeta requires tol > 0, got {tol}")));
    }
    if (s - Complex64::new(1.0, 0.0)).norm() < 1e-12 {
        return Err(Error::Pole("hurwitz_zeta has a pole at s = 1".into()));
    }

    let mut n_shift = 10usize.max(s.norm().ceil() as usize + 2);
    loop {
        for m_terms in [12usize, 18, 25] {
            if let Some(value) = attempt(s, a, tol, n_shift, m_terms)? {
                return ensure_finite(value, "hurwitz_zeta");
            }
        }
        n_shift *= 2;
        if n_shift > 1 << 22 {
            return Err(Error::NonConvergence(format!(
                "hurwitz_zeta did not reach tol={tol} at s={s}, a={a}"
            )));
        }
    }
}

fn attempt(s: Complex64, a: f64, tol: f64, n_shift: usize, m_terms: usize) -> Result<Option<Complex64>> {
    let q = a + n_shift as f64;
    // First omitted correction term bounds the truncation error.
    let omitted = correction_term(s, q, m_terms + 1).norm();
    if !omitted.is_finite() {
        return Ok(None);
    }
    if omitted > tol * 0.5 {
        return Ok(None);
    }
    let mut sum = Complex64::new(0.0, 0.0);
    for n in 0..n_shift {
        sum += powc(n as f64 + a, -s);
    }
    sum += powc(q, Complex64::new(1.0, 0.0) - s) / (s - Complex64::new(1.0, 0.0));
    sum += 0.5 * powc(q, -s);
    for r in 1..=m_terms {
        sum += correction_term(s, q, r);
    }
    Ok(Some(sum))
}

/// B_{2r}/(2r)! * s(s+1)...(s+2r-2) * q^(-s-2r+1)
fn correction_term(s: Complex64, q: f64, r: usize) -> Complex64 {
    let b = rational_to_f64(&bernoulli_number(2 * r));
    let mut rising = Complex64::new(1.0, 0.0);
    for i in 0..(2 * r - 1) {
        rising *= s + i as f64;
    }
    let fact: f64 = (1..=2 * r).fold(1.0, |acc, i| acc * i as f64);
    (b / fact) * rising * powc(q, -s - (2 * r - 1) as f64)
}

/// base^e for positive real base and complex exponent.
pub(crate) fn powc(base: f64, e: Complex64) -> Complex64 {
    (e * base.ln()).exp()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn re(x: f64) -> Complex64 {
        Complex64::new(x, 0.0)
    }

    #[test]
    fn zeta_two() {
        let z = hurwitz_zeta(re(2.0), 1.0, 1e-12).unwrap();
        assert!((z.re - std::f64::consts::PI.powi(2) / 6.0).abs() < 1e-12);
        assert!(z.im.abs() < 1e-14);
    }

    #[test]
    fn zeta_zero_is_half_minus_a() {
        let z = hurwitz_zeta(re(0.0), 0.25, 1e-12).unwrap();
        assert!((z.re - 0.25).abs() < 1e-12);
    }

    #[test]
    fn pole_and_domain() {
        assert!(hurwitz_zeta(re(1.0), 1.0, 1e-10).is_err());
        assert!(hurwitz_zeta(re(2.0), 0.0, 1e-10).is_err());
    }
}
