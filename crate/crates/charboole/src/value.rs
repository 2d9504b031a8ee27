//! Exact-or-complex result type.
//!
//! Operations that are rational for real characters and floating for complex
//! ones return a [`Value`]: `Exact` carries an arbitrary-precision rational,
//! `Complex` a double-precision complex number. Exact paths never round.

use num::{BigRational, ToPrimitive};
use num_complex::Complex64;
use std::fmt;

#[derive(Debug, Clone, PartialEq)]
pub enum Value {
    Exact(BigRational),
    Complex(Complex64),
}

impl Value {
    pub fn zero_exact() -> Self {
        Value::Exact(BigRational::from_integer(0.into()))
    }

    pub fn is_exact(&self) -> bool {
        matches!(self, Value::Exact(_))
    }

    /// Embed into a complex double (rationals are converted, possibly with
    /// rounding; use only on non-exact paths or for display/diagnostics).
    pub fn to_c64(&self) -> Complex64 {
        match self {
            Value::Exact(r) => Complex64::new(rational_to_f64(r), 0.0),
            Value::Complex(z) => *z,
        }
    }

    pub fn as_exact(&self) -> Option<&BigRational> {
        match self {
            Value::Exact(r) => Some(r),
            Value::Complex(_) => None,
        }
    }

    /// Defect against another value: exact difference when both are exact
    /// (reported as its absolute value in doubles for uniform comparison,
    /// together with an exactness flag), complex modulus otherwise.
    pub fn defect(&self, other: &Value) -> (f64, bool) {
        match (self, other) {
            (Value::Exact(a), Value::Exact(b)) => {
                let d = a - b;
                (rational_to_f64(&d).abs(), true)
            }
            _ => ((self.to_c64() - other.to_c64()).norm(), false),
        }
    }
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Exact(r) => write!(f, "{}", r),
            Value::Complex(z) => write!(f, "{}", format_c64(*z)),
        }
    }
}

/// Convert a big rational to f64 via a scaled integer division that stays
/// finite for any magnitude the library produces.
pub fn rational_to_f64(r: &BigRational) -> f64 {
    if let (Some(n), Some(d)) = (r.numer().to_f64(), r.denom().to_f64()) {
        if n.is_finite() && d.is_finite() && d != 0.0 {
            return n / d;
        }
    }
    // Fall back on a 64-bit-mantissa truncation of the quotient.
    let scale = num::BigInt::from(1u64 << 53);
    let q = (r.numer() * &scale) / r.denom();
    q.to_f64().map(|x| x / (1u64 << 53) as f64).unwrap_or(f64::NAN)
}

/// "re±im i" rendering; pure reals print without an imaginary part.
pub fn format_c64(z: Complex64) -> String {
    if z.im == 0.0 {
        format!("{:.12}", z.re)
    } else if z.im < 0.0 {
        format!("{:.12}-{:.12}i", z.re, -z.im)
    } else {
        format!("{:.12}+{:.12}i", z.re, z.im)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num::BigInt;

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn display_exact() {
        assert_eq!(Value::Exact(rat(-1, 3)).to_string(), "-1/3");
        assert_eq!(Value::Exact(rat(4, 2)).to_string(), "2");
    }

    #[test]
    fn defect_exact_is_exact() {
        let (d, exact) = Value::Exact(rat(1, 3)).defect(&Value::Exact(rat(1, 3)));
        assert_eq!(d, 0.0);
        assert!(exact);
    }

    #[test]
    fn rational_to_f64_large() {
        let big = BigRational::new(BigInt::from(10).pow(400), BigInt::from(3) * BigInt::from(10).pow(398));
        assert!((rational_to_f64(&big) - 100.0 / 3.0).abs() < 1e-12);
    }
}
