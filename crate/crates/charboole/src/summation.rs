//! Three summation-formula engines: classical Boole, character
//! Euler-MacLaurin, and character Boole. Each computes the literal left side,
//! the boundary and integral pieces of the right side, and reports the defect.

use crate::characters::DirichletCharacter;
use crate::error::{Error, Result};
use crate::eulerfun::{char_periodic_eval_f64, periodic_eval_f64, poly_coeffs, CharPeriodicSpec, Kind};
use crate::numeric::{integrate_piecewise_complex_with_estimate, integrate_piecewise_with_estimate, QuadratureSpec};
use crate::value::rational_to_f64;
use num_complex::Complex64;
use std::sync::Arc;

type RealFn = Arc<dyn Fn(f64) -> f64 + Send + Sync>;

/// A smooth function given by callbacks for itself and its derivatives.
/// Derivative consistency is spot-checked by central finite differences at
/// registration.
#[derive(Clone)]
pub struct SmoothFunction {
    derivatives: Vec<RealFn>,
}

impl SmoothFunction {
    /// Register callbacks d0 f .. dL f, verifying each consecutive pair by a
    /// central finite difference at the supplied sample points (tolerance
    /// 1e-5 relative to the derivative scale).
    pub fn new(derivatives: Vec<RealFn>, check_points: &[f64]) -> Result<Self> {
        if derivatives.is_empty() {
            return Err(Error::Range("a smooth function needs at least the order-0 callback".into()));
        }
        let f = SmoothFunction { derivatives };
        let h = 1e-6;
        for j in 1..f.derivatives.len() {
            for &x in check_points {
                let fd = (f.derivatives[j - 1](x + h) - f.derivatives[j - 1](x - h)) / (2.0 * h);
                let claimed = f.derivatives[j](x);
                let scale = claimed.abs().max(1.0);
                if !fd.is_finite() || (fd - claimed).abs() > 1e-5 * scale {
                    return Err(Error::Domain(format!(
                        "derivative {j} fails the finite-difference spot check at x={x}: fd={fd}, callback={claimed}"
                    )));
                }
            }
        }
        Ok(f)
    }

    pub fn new_unchecked(derivatives: Vec<RealFn>) -> Self {
        SmoothFunction { derivatives }
    }

    /// Highest available derivative order.
    pub fn max_order(&self) -> usize {
        self.derivatives.len() - 1
    }

    pub fn eval(&self, order: usize, x: f64) -> Result<f64> {
        self.derivatives
            .get(order)
            .map(|d| d(x))
            .ok_or(Error::Order { needed: order, available: self.max_order() })
    }

    fn require_order(&self, order: usize) -> Result<()> {
        if order > self.max_order() {
            Err(Error::Order { needed: order, available: self.max_order() })
        } else {
            Ok(())
        }
    }
}

/// Outcome of one summation-formula evaluation. Fields are complex to carry
/// non-real characters; real-character runs have vanishing imaginary parts.
#[derive(Debug, Clone)]
pub struct SummationReport {
    pub lhs: Complex64,
    pub rhs_boundary: Complex64,
    pub rhs_integral: Complex64,
    pub order: usize,
    pub quad_estimate: f64,
}

impl SummationReport {
    pub fn rhs(&self) -> Complex64 {
        self.rhs_boundary + self.rhs_integral
    }

    pub fn defect(&self) -> f64 {
        (self.lhs - self.rhs()).norm()
    }
}

const QUAD_REL: f64 = 1e-12;
const QUAD_ABS: f64 = 1e-13;

fn sign_of(n: i64) -> f64 {
    if n.rem_euclid(2) == 0 {
        1.0
    } else {
        -1.0
    }
}

/// Classical Boole summation: 2 sum_{n=alpha}^{beta-1} (-1)^n f(n) equals the
/// Euler-coefficient boundary sum plus the periodic-kernel remainder integral.
pub fn boole_sum(f: &SmoothFunction, alpha: i64, beta: i64, l: usize) -> Result<SummationReport> {
    if alpha >= beta {
        return Err(Error::Range(format!("boole_sum needs alpha < beta, got [{alpha}, {beta}]")));
    }
    if l < 1 {
        return Err(Error::Range("boole_sum needs order l >= 1".into()));
    }
    f.require_order(l)?;

    let mut lhs = 0.0;
    for n in alpha..beta {
        lhs += sign_of(n) * f.eval(0, n as f64)?;
    }
    lhs *= 2.0;

    let mut boundary = 0.0;
    let mut jfact = 1.0;
    for j in 0..l {
        if j > 0 {
            jfact *= j as f64;
        }
        let ej0 = rational_to_f64(&poly_coeffs(Kind::Euler, j).coeffs[0]);
        boundary += ej0 / jfact
            * (sign_of(beta - 1) * f.eval(j, beta as f64)? + sign_of(alpha) * f.eval(j, alpha as f64)?);
    }

    let lm1_fact: f64 = (1..l).fold(1.0, |acc, i| acc * i as f64);
    let spec = QuadratureSpec::with_integer_breakpoints(alpha as f64, beta as f64, QUAD_REL, QUAD_ABS)?;
    let fl = &f.derivatives[l];
    let (integral, est) =
        integrate_piecewise_with_estimate(|x| fl(x) * periodic_eval_f64(Kind::Euler, l - 1, -x), &spec)?;

    Ok(SummationReport {
        lhs: Complex64::new(lhs, 0.0),
        rhs_boundary: Complex64::new(boundary, 0.0),
        rhs_integral: Complex64::new(integral / lm1_fact, 0.0),
        order: l,
        quad_estimate: est,
    })
}

fn require_primitive(chi: &DirichletCharacter) -> Result<()> {
    if !chi.is_primitive() || chi.modulus() < 2 {
        return Err(Error::Hypothesis(format!(
            "character mod {} (conductor {}) is not primitive of modulus > 1",
            chi.modulus(),
            chi.conductor()
        )));
    }
    Ok(())
}

fn is_near_integer(x: f64) -> Option<i64> {
    let r = x.round();
    if (x - r).abs() < 1e-9 {
        Some(r as i64)
    } else {
        None
    }
}

/// Character Euler-MacLaurin summation with half-weighted integer endpoints.
pub fn char_euler_maclaurin(
    chi: &DirichletCharacter,
    f: &SmoothFunction,
    alpha: f64,
    beta: f64,
    l: usize,
) -> Result<SummationReport> {
    require_primitive(chi)?;
    if !(alpha < beta) {
        return Err(Error::Range(format!("need alpha < beta, got [{alpha}, {beta}]")));
    }
    f.require_order(l + 1)?;

    let bar = chi.conjugate();
    let sign_minus_one = chi.sign_at_minus_one() as f64;

    let mut lhs = Complex64::new(0.0, 0.0);
    let n_lo = alpha.ceil() as i64;
    let n_hi = beta.floor() as i64;
    for n in n_lo..=n_hi {
        let weight = if (n as f64 - alpha).abs() < 1e-12 || (n as f64 - beta).abs() < 1e-12 { 0.5 } else { 1.0 };
        lhs += chi.value(n).to_c64() * (weight * f.eval(0, n as f64)?);
    }

    let mut boundary = Complex64::new(0.0, 0.0);
    let mut fact = 1.0; // (j+1)! running
    for j in 0..=l {
        fact *= (j + 1) as f64;
        let spec = CharPeriodicSpec::new(Kind::Bernoulli, j + 1, bar.clone())?;
        let kb = char_periodic_eval_f64(&spec, beta);
        let ka = char_periodic_eval_f64(&spec, alpha);
        let s = if j % 2 == 0 { -1.0 } else { 1.0 }; // (-1)^(j+1)
        boundary += (s / fact) * (kb * f.eval(j, beta)? - ka * f.eval(j, alpha)?);
    }
    boundary *= sign_minus_one;

    let lp1_fact: f64 = (1..=l + 1).fold(1.0, |acc, i| acc * i as f64);
    let kernel_spec = CharPeriodicSpec::new(Kind::Bernoulli, l + 1, bar)?;
    let quad = QuadratureSpec::with_integer_breakpoints(alpha, beta, QUAD_REL, QUAD_ABS)?;
    let flp1 = &f.derivatives[l + 1];
    let (integral, est) = integrate_piecewise_complex_with_estimate(
        |u| char_periodic_eval_f64(&kernel_spec, u) * flp1(u),
        &quad,
    )?;
    let int_sign = if l % 2 == 0 { 1.0 } else { -1.0 };
    let rhs_integral = integral * (sign_minus_one * int_sign / lp1_fact);

    Ok(SummationReport { lhs, rhs_boundary: boundary, rhs_integral, order: l, quad_estimate: est })
}

/// Character Boole summation (odd primitive modulus): the alternating
/// character sum over the open interval against Euler-kernel boundary data.
pub fn char_boole_sum(
    chi: &DirichletCharacter,
    f: &SmoothFunction,
    alpha: f64,
    beta: f64,
    l: usize,
) -> Result<SummationReport> {
    require_primitive(chi)?;
    if chi.modulus() % 2 == 0 {
        return Err(Error::Hypothesis(format!(
            "character Boole summation needs an odd modulus, got {}",
            chi.modulus()
        )));
    }
    if !(alpha < beta) {
        return Err(Error::Range(format!("need alpha < beta, got [{alpha}, {beta}]")));
    }
    f.require_order(l + 1)?;

    let bar = chi.conjugate();
    let sign_minus_one = chi.sign_at_minus_one() as f64;

    // Strict interior sum.
    let n_lo = match is_near_integer(alpha) {
        Some(m) => m + 1,
        None => alpha.ceil() as i64,
    };
    let n_hi = match is_near_integer(beta) {
        Some(m) => m - 1,
        None => beta.floor() as i64,
    };
    let mut lhs = Complex64::new(0.0, 0.0);
    for n in n_lo..=n_hi {
        lhs += chi.value(n).to_c64() * (sign_of(n) * f.eval(0, n as f64)?);
    }
    lhs *= 2.0;

    let mut boundary = Complex64::new(0.0, 0.0);
    let mut fact = 1.0; // j! running
    for j in 0..=l {
        if j > 0 {
            fact *= j as f64;
        }
        let spec = CharPeriodicSpec::new(Kind::Euler, j, bar.clone())?;
        let kb = char_periodic_eval_f64(&spec, beta);
        let ka = char_periodic_eval_f64(&spec, alpha);
        let s = if j % 2 == 0 { 1.0 } else { -1.0 };
        boundary += (s / fact) * (kb * f.eval(j, beta)? - ka * f.eval(j, alpha)?);
    }
    boundary *= sign_minus_one;

    let l_fact: f64 = (1..=l).fold(1.0, |acc, i| acc * i as f64);
    let kernel_spec = CharPeriodicSpec::new(Kind::Euler, l, bar)?;
    let quad = QuadratureSpec::with_integer_breakpoints(alpha, beta, QUAD_REL, QUAD_ABS)?;
    let flp1 = &f.derivatives[l + 1];
    let (integral, est) = integrate_piecewise_complex_with_estimate(
        |t| char_periodic_eval_f64(&kernel_spec, t) * flp1(t),
        &quad,
    )?;
    let int_sign = if l % 2 == 0 { 1.0 } else { -1.0 };
    let rhs_integral = integral * (-sign_minus_one * int_sign / l_fact);

    Ok(SummationReport { lhs, rhs_boundary: boundary, rhs_integral, order: l, quad_estimate: est })
}

/// Ready-made caller families for tests and the CLI: value plus derivatives
/// of the named function, through `orders` derivatives.
pub fn named_function(name: &str, orders: usize) -> Result<SmoothFunction> {
    let derivs: Vec<RealFn> = match name {
        "exp10" => (0..=orders)
            .map(|j| {
                let scale = 0.1f64.powi(j as i32);
                Arc::new(move |x: f64| scale * (x / 10.0).exp()) as RealFn
            })
            .collect(),
        "pow28" | "pow4" | "pow2" | "linear" | "one" => {
            let degree = match name {
                "pow28" => 28,
                "pow4" => 4,
                "pow2" => 2,
                "linear" => 1,
                _ => 0,
            };
            (0..=orders)
                .map(|j| {
                    let coeff: f64 = if j > degree {
                        0.0
                    } else {
                        ((degree - j + 1)..=degree).fold(1.0, |acc, i| acc * i as f64)
                    };
                    let power = degree.saturating_sub(j) as i32;
                    Arc::new(move |x: f64| if j > degree { 0.0 } else { coeff * x.powi(power) }) as RealFn
                })
                .collect()
        }
        "inv1" | "inv2" => {
            let shift = if name == "inv1" { 1.0 } else { 2.0 };
            (0..=orders)
                .map(|j| {
                    let coeff = (1..=j).fold(1.0, |acc, i| acc * i as f64) * if j % 2 == 0 { 1.0 } else { -1.0 };
                    Arc::new(move |x: f64| coeff / (x + shift).powi(j as i32 + 1)) as RealFn
                })
                .collect()
        }
        "log1" => (0..=orders)
            .map(|j| {
                if j == 0 {
                    Arc::new(move |x: f64| (x + 1.0).ln()) as RealFn
                } else {
                    let coeff =
                        (1..j).fold(1.0, |acc, i| acc * i as f64) * if j % 2 == 1 { 1.0 } else { -1.0 };
                    Arc::new(move |x: f64| coeff / (x + 1.0).powi(j as i32)) as RealFn
                }
            })
            .collect(),
        other => return Err(Error::Config(format!("unknown function family '{other}'"))),
    };
    SmoothFunction::new(derivs, &[0.3, 1.6])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::characters::quadratic_character;

    #[test]
    fn smooth_function_rejects_wrong_derivative() {
        let good: Vec<RealFn> = vec![Arc::new(|x| x * x), Arc::new(|x| 2.0 * x)];
        assert!(SmoothFunction::new(good, &[0.5, 2.0]).is_ok());
        let bad: Vec<RealFn> = vec![Arc::new(|x| x * x), Arc::new(|x| 3.0 * x)];
        assert!(SmoothFunction::new(bad, &[0.5, 2.0]).is_err());
    }

    #[test]
    fn boole_linear() {
        let f = named_function("linear", 2).unwrap();
        let r = boole_sum(&f, 0, 4, 1).unwrap();
        assert!((r.lhs.re + 4.0).abs() < 1e-12);
        assert!(r.defect() < 1e-12, "defect {}", r.defect());
    }

    #[test]
    fn boole_constant_any_order() {
        let f = named_function("one", 3).unwrap();
        for l in 1..=3 {
            let r = boole_sum(&f, 0, 2, l).unwrap();
            assert!(r.lhs.norm() < 1e-14);
            assert!(r.defect() < 1e-13);
        }
    }

    #[test]
    fn boole_exponential() {
        let f = named_function("exp10", 5).unwrap();
        let r = boole_sum(&f, 0, 6, 4).unwrap();
        assert!(r.defect() < 1e-10, "defect {}", r.defect());
    }

    #[test]
    fn cem_constant_mod_three() {
        let chi3 = quadratic_character(3).unwrap();
        let f = named_function("one", 2).unwrap();
        let r = char_euler_maclaurin(&chi3, &f, 0.0, 3.0, 0).unwrap();
        assert!(r.lhs.norm() < 1e-12);
        assert!(r.defect() < 1e-12, "defect {}", r.defect());
    }

    #[test]
    fn cem_square_mod_three() {
        let chi3 = quadratic_character(3).unwrap();
        let f = named_function("pow2", 3).unwrap();
        let r = char_euler_maclaurin(&chi3, &f, 0.0, 3.0, 2).unwrap();
        assert!(r.defect() < 1e-12, "defect {}", r.defect());
    }

    #[test]
    fn char_boole_trivial_period() {
        let chi3 = quadratic_character(3).unwrap();
        let f = named_function("one", 1).unwrap();
        let r = char_boole_sum(&chi3, &f, 0.0, 6.0, 0).unwrap();
        assert!(r.lhs.norm() < 1e-14);
        assert!(r.rhs_boundary.norm() < 1e-12);
        assert!(r.defect() < 1e-12);
    }

    #[test]
    fn char_boole_exponential() {
        let chi3 = quadratic_character(3).unwrap();
        let f = named_function("exp10", 5).unwrap();
        let r = char_boole_sum(&chi3, &f, 0.0, 6.0, 3).unwrap();
        assert!(r.defect() < 1e-10, "defect {}", r.defect());
    }

    #[test]
    fn char_boole_rejects_even_modulus_and_order_overflow() {
        let chars = crate::characters::enumerate_characters(4).unwrap();
        let f = named_function("one", 1).unwrap();
        let primitive_even = chars.iter().find(|c| c.is_primitive()).unwrap();
        assert!(char_boole_sum(primitive_even, &f, 0.0, 4.0, 0).is_err());
        let chi3 = quadratic_character(3).unwrap();
        assert!(matches!(
            char_boole_sum(&chi3, &f, 0.0, 6.0, 3),
            Err(Error::Order { .. })
        ));
    }
}
