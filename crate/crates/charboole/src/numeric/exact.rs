//! Exact Bernoulli numbers and binomial coefficients, cached.

use num::{BigInt, BigRational, One, Zero};
use std::sync::Mutex;
use std::sync::OnceLock;

/// C(n, k) as an exact big integer.
pub fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for i in 0..k {
        num *= BigInt::from(n - i);
        den *= BigInt::from(i + 1);
    }
    num / den
}

fn cache() -> &'static Mutex<Vec<BigRational>> {
    static CACHE: OnceLock<Mutex<Vec<BigRational>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(vec![BigRational::one()]))
}

/// Bernoulli number B_n (B_1 = -1/2), exact, from the defining recurrence
/// sum_{j=0}^{n} C(n+1,j) B_j = 0 for n >= 1.
pub fn bernoulli_number(n: usize) -> BigRational {
    let mut known = cache().lock().unwrap();
    while known.len() <= n {
        let m = known.len();
        let mut acc = BigRational::zero();
        for (j, b) in known.iter().enumerate() {
            acc += BigRational::from_integer(binomial(m + 1, j)) * b;
        }
        let next = -acc / BigRational::from_integer(BigInt::from(m + 1));
        known.push(next);
    }
    known[n].clone()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn first_bernoulli_numbers() {
        assert_eq!(bernoulli_number(0), rat(1, 1));
        assert_eq!(bernoulli_number(1), rat(-1, 2));
        assert_eq!(bernoulli_number(2), rat(1, 6));
        assert_eq!(bernoulli_number(3), rat(0, 1));
        assert_eq!(bernoulli_number(4), rat(-1, 30));
        assert_eq!(bernoulli_number(10), rat(5, 66));
        assert_eq!(bernoulli_number(12), rat(-691, 2730));
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(6, 3), BigInt::from(20));
        assert_eq!(binomial(10, 0), BigInt::from(1));
        assert_eq!(binomial(4, 7), BigInt::from(0));
    }
}
