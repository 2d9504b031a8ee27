//! Exact Bernoulli and Euler polynomials, their 1-periodic / 2-antiperiodic
//! extensions, and the character-twisted periodic functions.
//!
//! Base-interval convention: the periodic functions equal the polynomials on
//! [0, 1) and the value at an integer is the right-limit with the sign rule
//! applied, so the antiperiodic Euler function satisfies eval(m) = (-1)^m E_n(0).
//! The single exception is the classical convention that the first periodic
//! Bernoulli function vanishes at integers.

use crate::characters::DirichletCharacter;
use crate::error::{Error, Result};
use crate::numeric::{bernoulli_number, binomial};
use crate::value::{rational_to_f64, Value};
use num::{BigInt, BigRational, One, Signed, Zero};
use num_complex::Complex64;
use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Kind {
    Bernoulli,
    Euler,
}

/// Exact coefficient vector of B_n(x) or E_n(x), ascending powers.
#[derive(Debug, Clone, PartialEq)]
pub struct PolySpec {
    pub kind: Kind,
    pub degree: usize,
    pub coeffs: Vec<BigRational>,
}

impl PolySpec {
    pub fn eval(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }
}

fn poly_cache() -> &'static Mutex<HashMap<(Kind, usize), Arc<PolySpec>>> {
    static CACHE: OnceLock<Mutex<HashMap<(Kind, usize), Arc<PolySpec>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

fn f64_coeff_cache() -> &'static Mutex<HashMap<(Kind, usize), Arc<Vec<f64>>>> {
    static CACHE: OnceLock<Mutex<HashMap<(Kind, usize), Arc<Vec<f64>>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Exact coefficients of the degree-n Bernoulli or Euler polynomial; results
/// are cached. Euler polynomials derive from Bernoulli ones through
/// E_n(x) = (2/(n+1)) (B_{n+1}(x) - 2^{n+1} B_{n+1}(x/2)).
pub fn poly_coeffs(kind: Kind, n: usize) -> Arc<PolySpec> {
    if let Some(hit) = poly_cache().lock().unwrap().get(&(kind, n)) {
        return hit.clone();
    }
    let spec = Arc::new(match kind {
        Kind::Bernoulli => bernoulli_poly(n),
        Kind::Euler => euler_poly(n),
    });
    poly_cache().lock().unwrap().entry((kind, n)).or_insert(spec).clone()
}

fn bernoulli_poly(n: usize) -> PolySpec {
    let coeffs = (0..=n)
        .map(|j| BigRational::from_integer(binomial(n, j)) * bernoulli_number(n - j))
        .collect();
    PolySpec { kind: Kind::Bernoulli, degree: n, coeffs }
}

fn euler_poly(n: usize) -> PolySpec {
    let b = bernoulli_poly(n + 1);
    let two = BigRational::from_integer(BigInt::from(2));
    let scale = &two / BigRational::from_integer(BigInt::from(n + 1));
    let mut coeffs = Vec::with_capacity(n + 1);
    for j in 0..=n {
        // coefficient of x^j in B_{n+1}(x) - 2^{n+1} B_{n+1}(x/2)
        let pow = BigRational::from_integer(BigInt::from(2).pow((n + 1 - j) as u32));
        let c = &b.coeffs[j] * (BigRational::one() - pow);
        coeffs.push(&scale * c);
    }
    PolySpec { kind: Kind::Euler, degree: n, coeffs }
}

fn f64_coeffs(kind: Kind, n: usize) -> Arc<Vec<f64>> {
    if let Some(hit) = f64_coeff_cache().lock().unwrap().get(&(kind, n)) {
        return hit.clone();
    }
    let spec = poly_coeffs(kind, n);
    let v = Arc::new(spec.coeffs.iter().map(rational_to_f64).collect::<Vec<f64>>());
    f64_coeff_cache().lock().unwrap().entry((kind, n)).or_insert(v).clone()
}

/// Periodic Bernoulli / antiperiodic Euler function at an exact rational
/// argument. Bernoulli needs n >= 1 to make the integer convention coherent.
pub fn periodic_eval(kind: Kind, n: usize, x: &BigRational) -> Result<BigRational> {
    if kind == Kind::Bernoulli && n == 0 {
        return Err(Error::Range("periodic Bernoulli function requires n >= 1".into()));
    }
    let m = x.floor();
    let frac = x - &m;
    match kind {
        Kind::Bernoulli => {
            if n == 1 && frac.is_zero() {
                return Ok(BigRational::zero());
            }
            Ok(poly_coeffs(kind, n).eval(&frac))
        }
        Kind::Euler => {
            let sign_negative = m.numer().is_odd();
            let v = poly_coeffs(kind, n).eval(&frac);
            Ok(if sign_negative { -v } else { v })
        }
    }
}

/// Floating-point twin of `periodic_eval`, used inside quadrature kernels.
pub fn periodic_eval_f64(kind: Kind, n: usize, x: f64) -> f64 {
    let m = x.floor();
    let frac = x - m;
    let coeffs = f64_coeffs(kind, n);
    let mut acc = 0.0;
    for c in coeffs.iter().rev() {
        acc = acc * frac + c;
    }
    match kind {
        Kind::Bernoulli => {
            if n == 1 && frac == 0.0 {
                0.0
            } else {
                acc
            }
        }
        Kind::Euler => {
            if (m.rem_euclid(2.0)) < 0.5 {
                acc
            } else {
                -acc
            }
        }
    }
}

/// Character periodic function specification. Euler kind requires an odd
/// modulus; Bernoulli kind requires order >= 1.
#[derive(Debug, Clone)]
pub struct CharPeriodicSpec {
    pub kind: Kind,
    pub order: usize,
    pub chi: DirichletCharacter,
}

impl CharPeriodicSpec {
    pub fn new(kind: Kind, order: usize, chi: DirichletCharacter) -> Result<Self> {
        match kind {
            Kind::Euler => {
                if chi.modulus() % 2 == 0 {
                    return Err(Error::Hypothesis(format!(
                        "character Euler functions need an odd modulus, got {}",
                        chi.modulus()
                    )));
                }
            }
            Kind::Bernoulli => {
                if order == 0 {
                    return Err(Error::Range("character Bernoulli functions need order >= 1".into()));
                }
            }
        }
        Ok(CharPeriodicSpec { kind, order, chi })
    }
}

/// Character periodic function at an exact rational argument: the k-fold
/// twisted combination of periodic Bernoulli/Euler values. Exact for real
/// characters, complex-embedded otherwise.
pub fn char_periodic_eval(spec: &CharPeriodicSpec, x: &BigRational) -> Result<Value> {
    let k = spec.chi.modulus();
    let m = spec.order;
    let kq = BigRational::from_integer(BigInt::from(k));
    if spec.chi.is_real() {
        let mut acc = BigRational::zero();
        for j in 0..k {
            let cv = spec.chi.value(j as i64).conj();
            let Some(c) = cv.as_rational() else { unreachable!("real character") };
            if c.is_zero() {
                continue;
            }
            let arg = (BigRational::from_integer(BigInt::from(j)) + x) / &kq;
            let mut term = c * periodic_eval(spec.kind, m, &arg)?;
            if spec.kind == Kind::Euler && j % 2 == 1 {
                term = -term;
            }
            acc += term;
        }
        let power = match spec.kind {
            Kind::Bernoulli => m as i64 - 1,
            Kind::Euler => m as i64,
        };
        Ok(Value::Exact(acc * rational_pow_of(k, power)))
    } else {
        let mut acc = Complex64::new(0.0, 0.0);
        for j in 0..k {
            let cv = spec.chi.value(j as i64).conj();
            if cv.is_zero() {
                continue;
            }
            let arg = (BigRational::from_integer(BigInt::from(j)) + x) / &kq;
            let base = rational_to_f64(&periodic_eval(spec.kind, m, &arg)?);
            let sign = if spec.kind == Kind::Euler && j % 2 == 1 { -1.0 } else { 1.0 };
            acc += cv.to_c64() * (sign * base);
        }
        let power = match spec.kind {
            Kind::Bernoulli => m as i32 - 1,
            Kind::Euler => m as i32,
        };
        Ok(Value::Complex(acc * (k as f64).powi(power)))
    }
}

/// Floating-point twin of `char_periodic_eval` for quadrature kernels.
pub fn char_periodic_eval_f64(spec: &CharPeriodicSpec, x: f64) -> Complex64 {
    let k = spec.chi.modulus();
    let m = spec.order;
    let mut acc = Complex64::new(0.0, 0.0);
    for j in 0..k {
        let cv = spec.chi.value(j as i64).conj();
        if cv.is_zero() {
            continue;
        }
        let base = periodic_eval_f64(spec.kind, m, (j as f64 + x) / k as f64);
        let sign = if spec.kind == Kind::Euler && j % 2 == 1 { -1.0 } else { 1.0 };
        acc += cv.to_c64() * (sign * base);
    }
    let power = match spec.kind {
        Kind::Bernoulli => m as i32 - 1,
        Kind::Euler => m as i32,
    };
    acc * (k as f64).powi(power)
}

fn rational_pow_of(k: u64, power: i64) -> BigRational {
    let kk = BigInt::from(k);
    if power >= 0 {
        BigRational::from_integer(kk.pow(power as u32))
    } else {
        BigRational::new(BigInt::one(), kk.pow((-power) as u32))
    }
}

/// E_{m,chi}(0): the character Euler value that seeds special values,
/// generating functions, and reciprocity right-hand sides.
pub fn char_euler_at_zero(m: usize, chi: &DirichletCharacter) -> Result<Value> {
    let spec = CharPeriodicSpec::new(Kind::Euler, m, chi.clone())?;
    char_periodic_eval(&spec, &BigRational::zero())
}

/// Upper bound 4 * l! * zeta(l+1) / (pi/k)^(l+1) on |E-bar_{l,chi}|.
pub fn char_euler_magnitude_bound(l: usize, k: u64) -> f64 {
    let fact: f64 = (1..=l).fold(1.0, |acc, i| acc * i as f64);
    let zeta = (1..200).map(|n| (n as f64).powi(-(l as i32) - 1)).sum::<f64>();
    4.0 * fact * zeta / (std::f64::consts::PI / k as f64).powi(l as i32 + 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::characters::quadratic_character;

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn polynomial_tables() {
        let e1 = poly_coeffs(Kind::Euler, 1);
        assert_eq!(e1.coeffs, vec![rat(-1, 2), rat(1, 1)]);
        let b2 = poly_coeffs(Kind::Bernoulli, 2);
        assert_eq!(b2.coeffs, vec![rat(1, 6), rat(-1, 1), rat(1, 1)]);
        let e0 = poly_coeffs(Kind::Euler, 0);
        assert_eq!(e0.coeffs, vec![rat(1, 1)]);
    }

    #[test]
    fn derivative_relation_holds_exactly() {
        for kind in [Kind::Bernoulli, Kind::Euler] {
            for n in 1..=8usize {
                let p = poly_coeffs(kind, n);
                let q = poly_coeffs(kind, n - 1);
                for j in 0..n {
                    let derived = &p.coeffs[j + 1] * BigRational::from_integer(BigInt::from(j + 1));
                    let expected = BigRational::from_integer(BigInt::from(n)) * &q.coeffs[j];
                    assert_eq!(derived, expected, "kind={kind:?} n={n} j={j}");
                }
            }
        }
    }

    #[test]
    fn periodic_values() {
        assert_eq!(periodic_eval(Kind::Euler, 0, &rat(3, 2)).unwrap(), rat(-1, 1));
        assert_eq!(periodic_eval(Kind::Bernoulli, 1, &rat(1, 1)).unwrap(), rat(0, 1));
        assert_eq!(periodic_eval(Kind::Euler, 1, &rat(7, 6)).unwrap(), rat(1, 3));
        assert!(periodic_eval(Kind::Bernoulli, 0, &rat(1, 2)).is_err());
    }

    #[test]
    fn periodic_f64_matches_exact() {
        for n in 0..6usize {
            for num in -12..25i64 {
                let x = rat(num, 7);
                let exact = rational_to_f64(&periodic_eval(Kind::Euler, n, &x).unwrap());
                let float = periodic_eval_f64(Kind::Euler, n, num as f64 / 7.0);
                assert!((exact - float).abs() < 1e-12, "n={n} x={num}/7");
            }
        }
    }

    #[test]
    fn character_euler_values_mod_three() {
        let chi3 = quadratic_character(3).unwrap();
        let spec = CharPeriodicSpec::new(Kind::Euler, 0, chi3.clone()).unwrap();
        assert_eq!(char_periodic_eval(&spec, &rat(0, 1)).unwrap(), Value::Exact(rat(-2, 1)));
        let spec1 = CharPeriodicSpec::new(Kind::Euler, 1, chi3.clone()).unwrap();
        assert_eq!(char_periodic_eval(&spec1, &rat(0, 1)).unwrap(), Value::Exact(rat(0, 1)));
        let specb = CharPeriodicSpec::new(Kind::Bernoulli, 1, chi3).unwrap();
        assert_eq!(char_periodic_eval(&specb, &rat(0, 1)).unwrap(), Value::Exact(rat(-1, 3)));
    }

    #[test]
    fn character_euler_half_integer_table() {
        // E-bar_{1,chi3-bar}(n/2) for n = 1..6
        let chi3 = quadratic_character(3).unwrap();
        let spec = CharPeriodicSpec::new(Kind::Euler, 1, chi3.conjugate()).unwrap();
        let expected = [rat(-1, 1), rat(-2, 1), rat(-2, 1), rat(-2, 1), rat(-1, 1), rat(0, 1)];
        for (i, want) in expected.iter().enumerate() {
            let got = char_periodic_eval(&spec, &rat(i as i64 + 1, 2)).unwrap();
            assert_eq!(got, Value::Exact(want.clone()), "n={}", i + 1);
        }
    }

    #[test]
    fn euler_kind_rejects_even_modulus() {
        let chars = crate::characters::enumerate_characters(4).unwrap();
        assert!(CharPeriodicSpec::new(Kind::Euler, 1, chars[1].clone()).is_err());
        assert!(CharPeriodicSpec::new(Kind::Bernoulli, 1, chars[1].clone()).is_ok());
    }
}
