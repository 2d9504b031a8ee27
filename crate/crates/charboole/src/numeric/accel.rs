//! Iterated Aitken extrapolation for slowly converging partial-sum
//! sequences (the 2k-block partial sums of the alternating L-series).

use num_complex::Complex64;

/// Accelerate a partial-sum sequence; returns the extrapolated limit and a
/// crude error estimate (change contributed by the final pass).
pub fn aitken_accelerate(partial_sums: &[Complex64]) -> (Complex64, f64) {
    assert!(!partial_sums.is_empty());
    let mut row: Vec<Complex64> = partial_sums.to_vec();
    let mut previous_tail = *row.last().unwrap();
    let passes = ((row.len().saturating_sub(1)) / 2).min(10);
    for _ in 0..passes {
        if row.len() < 3 {
            break;
        }
        let mut next = Vec::with_capacity(row.len() - 2);
        for w in row.windows(3) {
            let (x0, x1, x2) = (w[0], w[1], w[2]);
            let denom = x2 - 2.0 * x1 + x0;
            let scale = x0.norm() + x1.norm() + x2.norm() + f64::MIN_POSITIVE;
            if denom.norm() <= 1e-15 * scale {
                next.push(x2);
            } else {
                let d = x1 - x0;
                next.push(x0 - d * d / denom);
            }
        }
        previous_tail = *row.last().unwrap();
        row = next;
    }
    let value = *row.last().unwrap();
    (value, (value - previous_tail).norm())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn geometric_series() {
        // sum 0.7^n = 1/0.3
        let mut s = 0.0;
        let sums: Vec<Complex64> = (0..20)
            .map(|n| {
                s += 0.7f64.powi(n);
                Complex64::new(s, 0.0)
            })
            .collect();
        let (v, _) = aitken_accelerate(&sums);
        assert!((v.re - 1.0 / 0.3).abs() < 1e-12);
    }

    #[test]
    fn algebraic_decay() {
        // sum (-1)^(n+1)/n = ln 2, partial sums converge like 1/n.
        let mut s = 0.0;
        let sums: Vec<Complex64> = (1..60)
            .map(|n| {
                s += if n % 2 == 1 { 1.0 } else { -1.0 } / n as f64;
                Complex64::new(s, 0.0)
            })
            .collect();
        let (v, _) = aitken_accelerate(&sums);
        assert!((v.re - std::f64::consts::LN_2).abs() < 1e-12);
    }
}
