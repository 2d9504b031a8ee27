//! Breakpoint-aware adaptive quadrature: fixed 16-point Gauss-Legendre per
//! panel with bisection on disagreement; panels never straddle a breakpoint,
//! so piecewise-smooth integrands are integrated at spectral accuracy.

use crate::error::{Error, Result};
use num_complex::Complex64;
use std::sync::OnceLock;

#[derive(Debug, Clone)]
pub struct QuadratureSpec {
    pub lower: f64,
    pub upper: f64,
    pub breakpoints: Vec<f64>,
    pub rel_tol: f64,
    pub abs_tol: f64,
}

impl QuadratureSpec {
    pub fn new(lower: f64, upper: f64, breakpoints: &[f64], rel_tol: f64, abs_tol: f64) -> Result<Self> {
        if !(lower < upper) {
            return Err(Error::Domain(format!("quadrature bounds must satisfy lower < upper, got [{lower}, {upper}]")));
        }
        if !(rel_tol > 0.0) || !(abs_tol > 0.0) {
            return Err(Error::Domain("quadrature tolerances must be positive".into()));
        }
        let mut bp: Vec<f64> = breakpoints.iter().copied().filter(|&b| b > lower && b < upper).collect();
        bp.sort_by(|x, y| x.partial_cmp(y).unwrap());
        bp.dedup();
        Ok(QuadratureSpec { lower, upper, breakpoints: bp, rel_tol, abs_tol })
    }

    /// Convenience: breakpoints at every integer strictly inside the range.
    pub fn with_integer_breakpoints(lower: f64, upper: f64, rel_tol: f64, abs_tol: f64) -> Result<Self> {
        let mut bp = Vec::new();
        let mut n = lower.floor() + 1.0;
        while n < upper {
            if n > lower {
                bp.push(n);
            }
            n += 1.0;
        }
        Self::new(lower, upper, &bp, rel_tol, abs_tol)
    }

    fn panels(&self) -> Vec<(f64, f64)> {
        let mut edges = vec![self.lower];
        edges.extend_from_slice(&self.breakpoints);
        edges.push(self.upper);
        edges.windows(2).map(|w| (w[0], w[1])).collect()
    }
}

/// Scalars the adaptive engine can accumulate.
pub trait QuadValue: Copy {
    fn zero() -> Self;
    fn add(self, other: Self) -> Self;
    fn sub(self, other: Self) -> Self;
    fn scale(self, by: f64) -> Self;
    fn norm(self) -> f64;
}

impl QuadValue for f64 {
    fn zero() -> Self { 0.0 }
    fn add(self, other: Self) -> Self { self + other }
    fn sub(self, other: Self) -> Self { self - other }
    fn scale(self, by: f64) -> Self { self * by }
    fn norm(self) -> f64 { self.abs() }
}

impl QuadValue for Complex64 {
    fn zero() -> Self { Complex64::new(0.0, 0.0) }
    fn add(self, other: Self) -> Self { self + other }
    fn sub(self, other: Self) -> Self { self - other }
    fn scale(self, by: f64) -> Self { self * by }
    fn norm(self) -> f64 { Complex64::norm(self) }
}

/// Integrate a real-valued piecewise-smooth callback.
pub fn integrate_piecewise(f: impl Fn(f64) -> f64, spec: &QuadratureSpec) -> Result<f64> {
    integrate_piecewise_with_estimate(f, spec).map(|(v, _)| v)
}

/// As `integrate_piecewise`, also returning the accumulated error estimate.
pub fn integrate_piecewise_with_estimate(
    f: impl Fn(f64) -> f64,
    spec: &QuadratureSpec,
) -> Result<(f64, f64)> {
    integrate_generic(&f, spec)
}

pub fn integrate_piecewise_complex(f: impl Fn(f64) -> Complex64, spec: &QuadratureSpec) -> Result<Complex64> {
    integrate_generic(&f, spec).map(|(v, _)| v)
}

pub fn integrate_piecewise_complex_with_estimate(
    f: impl Fn(f64) -> Complex64,
    spec: &QuadratureSpec,
) -> Result<(Complex64, f64)> {
    integrate_generic(&f, spec)
}

fn integrate_generic<T: QuadValue>(f: &impl Fn(f64) -> T, spec: &QuadratureSpec) -> Result<(T, f64)> {
    let length = spec.upper - spec.lower;
    let mut total = T::zero();
    let mut err = 0.0;
    for (a, b) in spec.panels() {
        let abs_budget = spec.abs_tol * ((b - a) / length).max(1e-3);
        let whole = gl16(f, a, b);
        let (v, e) = adapt(f, a, b, whole, abs_budget, spec.rel_tol, 0)?;
        total = total.add(v);
        err += e;
    }
    Ok((total, err))
}

const MAX_DEPTH: usize = 32;

fn adapt<T: QuadValue>(
    f: &impl Fn(f64) -> T,
    a: f64,
    b: f64,
    whole: T,
    abs_budget: f64,
    rel_tol: f64,
    depth: usize,
) -> Result<(T, f64)> {
    let mid = 0.5 * (a + b);
    let left = gl16(f, a, mid);
    let right = gl16(f, mid, b);
    let refined = left.add(right);
    let disagreement = refined.sub(whole).norm();
    if disagreement <= abs_budget.max(rel_tol * refined.norm()) {
        return Ok((refined, disagreement));
    }
    if depth >= MAX_DEPTH || mid <= a || mid >= b {
        return Err(Error::NonConvergence(format!(
            "quadrature refinement stalled on [{a}, {b}] (disagreement {disagreement:.3e})"
        )));
    }
    let (lv, le) = adapt(f, a, mid, left, abs_budget / 2.0, rel_tol, depth + 1)?;
    let (rv, re) = adapt(f, mid, b, right, abs_budget / 2.0, rel_tol, depth + 1)?;
    Ok((lv.add(rv), le + re))
}

fn gl16<T: QuadValue>(f: &impl Fn(f64) -> T, a: f64, b: f64) -> T {
    let (nodes, weights) = gl16_rule();
    let half = 0.5 * (b - a);
    let center = 0.5 * (a + b);
    let mut acc = T::zero();
    for i in 0..16 {
        acc = acc.add(f(center + half * nodes[i]).scale(weights[i]));
    }
    acc.scale(half)
}

/// 16-point Gauss-Legendre nodes/weights on [-1, 1], computed once by Newton
/// iteration on the Legendre polynomial.
fn gl16_rule() -> &'static ([f64; 16], [f64; 16]) {
    static RULE: OnceLock<([f64; 16], [f64; 16])> = OnceLock::new();
    RULE.get_or_init(|| {
        let n = 16usize;
        let mut nodes = [0.0; 16];
        let mut weights = [0.0; 16];
        for i in 0..n {
            // Chebyshev-like initial guess, then Newton on P_16.
            let mut x = (std::f64::consts::PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
            for _ in 0..100 {
                let (p, dp) = legendre_and_derivative(n, x);
                let dx = p / dp;
                x -= dx;
                if dx.abs() < 1e-16 {
                    break;
                }
            }
            let (_, dp) = legendre_and_derivative(n, x);
            nodes[i] = x;
            weights[i] = 2.0 / ((1.0 - x * x) * dp * dp);
        }
        (nodes, weights)
    })
}

fn legendre_and_derivative(n: usize, x: f64) -> (f64, f64) {
    let mut p0 = 1.0;
    let mut p1 = x;
    for j in 2..=n {
        let pj = ((2 * j - 1) as f64 * x * p1 - (j - 1) as f64 * p0) / j as f64;
        p0 = p1;
        p1 = pj;
    }
    let dp = n as f64 * (x * p1 - p0) / (x * x - 1.0);
    (p1, dp)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rule_is_symmetric_and_normalized() {
        let (nodes, weights) = gl16_rule();
        let wsum: f64 = weights.iter().sum();
        assert!((wsum - 2.0).abs() < 1e-14);
        for i in 0..8 {
            assert!((nodes[i] + nodes[15 - i]).abs() < 1e-14);
        }
    }

    #[test]
    fn linear_function() {
        let spec = QuadratureSpec::new(0.0, 1.0, &[], 1e-12, 1e-14).unwrap();
        let v = integrate_piecewise(|x| x, &spec).unwrap();
        assert!((v - 0.5).abs() < 1e-14);
    }

    #[test]
    fn degree_ten_polynomial_with_breakpoints_is_exact() {
        let spec = QuadratureSpec::new(0.0, 2.0, &[0.3, 1.0, 1.7], 1e-13, 1e-13).unwrap();
        let v = integrate_piecewise(|x| x.powi(10), &spec).unwrap();
        assert!((v - 2048.0 / 11.0).abs() < 1e-12);
    }

    #[test]
    fn rejects_bad_spec() {
        assert!(QuadratureSpec::new(1.0, 0.0, &[], 1e-10, 1e-10).is_err());
        assert!(QuadratureSpec::new(0.0, 1.0, &[], -1e-10, 1e-10).is_err());
    }
}
