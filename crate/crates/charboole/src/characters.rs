//! Dirichlet characters mod k with exact root-of-unity values.
//!
//! Characters are enumerated through the CRT decomposition of (Z/kZ)* into
//! cyclic factors over prime powers, indexed canonically by their exponent
//! vector on fixed generators, so enumeration order is deterministic.

use crate::error::{Error, Result};
use num::rational::Ratio;
use num::{BigInt, BigRational, Integer, Zero};
use num_complex::Complex64;
use std::fmt;

/// Zero or a root of unity exp(2*pi*i*e/d), with the exponent e/d kept
/// reduced in [0, 1).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CharacterValue {
    exponent: Option<Ratio<i64>>,
}

impl CharacterValue {
    pub fn zero() -> Self {
        CharacterValue { exponent: None }
    }

    pub fn one() -> Self {
        Self::root_of_unity(0, 1)
    }

    pub fn minus_one() -> Self {
        Self::root_of_unity(1, 2)
    }

    /// exp(2*pi*i*e/d), exponent reduced into [0, 1).
    pub fn root_of_unity(e: i64, d: i64) -> Self {
        assert!(d >= 1, "root_of_unity needs d >= 1");
        let mut r = Ratio::new(e, d);
        let one = Ratio::new(1, 1);
        r -= r.floor();
        if r >= one {
            r -= one;
        }
        CharacterValue { exponent: Some(r) }
    }

    pub fn is_zero(&self) -> bool {
        self.exponent.is_none()
    }

    /// Reduced exponent e/d, None for the zero value.
    pub fn exponent(&self) -> Option<Ratio<i64>> {
        self.exponent
    }

    pub fn mul(&self, other: &CharacterValue) -> CharacterValue {
        match (self.exponent, other.exponent) {
            (Some(a), Some(b)) => {
                let s = a + b;
                CharacterValue::root_of_unity(*s.numer(), *s.denom())
            }
            _ => CharacterValue::zero(),
        }
    }

    pub fn conj(&self) -> CharacterValue {
        match self.exponent {
            Some(a) => CharacterValue::root_of_unity(-*a.numer(), *a.denom()),
            None => CharacterValue::zero(),
        }
    }

    /// True when the value lies in {0, 1, -1}.
    pub fn is_real(&self) -> bool {
        match self.exponent {
            None => true,
            Some(a) => *a.denom() <= 2,
        }
    }

    /// Exact rational reading for real values, None otherwise.
    pub fn as_rational(&self) -> Option<BigRational> {
        match self.exponent {
            None => Some(BigRational::zero()),
            Some(a) if *a.denom() == 1 => Some(BigRational::from_integer(BigInt::from(1))),
            Some(a) if *a.denom() == 2 => Some(BigRational::from_integer(BigInt::from(-1))),
            _ => None,
        }
    }

    /// Complex embedding; fourth roots of unity are emitted exactly.
    pub fn to_c64(&self) -> Complex64 {
        match self.exponent {
            None => Complex64::new(0.0, 0.0),
            Some(a) => {
                let (e, d) = (*a.numer(), *a.denom());
                match (e, d) {
                    (0, 1) => Complex64::new(1.0, 0.0),
                    (1, 2) => Complex64::new(-1.0, 0.0),
                    (1, 4) => Complex64::new(0.0, 1.0),
                    (3, 4) => Complex64::new(0.0, -1.0),
                    _ => {
                        let theta = 2.0 * std::f64::consts::PI * e as f64 / d as f64;
                        Complex64::new(theta.cos(), theta.sin())
                    }
                }
            }
        }
    }
}

impl fmt::Display for CharacterValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.exponent {
            None => write!(f, "0"),
            Some(a) if *a.denom() == 1 => write!(f, "1"),
            Some(a) if *a.denom() == 2 => write!(f, "-1"),
            Some(a) => write!(f, "e(2pi i {}/{})", a.numer(), a.denom()),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Parity {
    Even,
    Odd,
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Parity::Even => write!(f, "even"),
            Parity::Odd => write!(f, "odd"),
        }
    }
}

/// A Dirichlet character mod k: value table on residues, conductor, parity,
/// and its canonical index in the fixed enumeration. Immutable after
/// construction and freely shareable.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DirichletCharacter {
    modulus: u64,
    values: Vec<CharacterValue>,
    conductor: u64,
    parity: Parity,
    real: bool,
    index: usize,
    orders: Vec<u64>,
    exponents: Vec<u64>,
}

impl DirichletCharacter {
    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn conductor(&self) -> u64 {
        self.conductor
    }

    pub fn parity(&self) -> Parity {
        self.parity
    }

    pub fn is_even(&self) -> bool {
        self.parity == Parity::Even
    }

    pub fn is_odd(&self) -> bool {
        self.parity == Parity::Odd
    }

    /// chi(-1) as +1/-1.
    pub fn sign_at_minus_one(&self) -> i64 {
        if self.is_even() {
            1
        } else {
            -1
        }
    }

    pub fn is_primitive(&self) -> bool {
        self.conductor == self.modulus
    }

    pub fn is_principal(&self) -> bool {
        self.exponents.iter().all(|&a| a == 0)
    }

    /// All values in {0, 1, -1}.
    pub fn is_real(&self) -> bool {
        self.real
    }

    /// Position in the canonical enumeration of characters mod k.
    pub fn index(&self) -> usize {
        self.index
    }

    /// chi(n), with n reduced mod k (negative n handled).
    pub fn value(&self, n: i64) -> CharacterValue {
        let k = self.modulus as i64;
        let r = n.rem_euclid(k) as usize;
        self.values[r]
    }

    pub fn conjugate(&self) -> DirichletCharacter {
        let exponents: Vec<u64> = self
            .exponents
            .iter()
            .zip(&self.orders)
            .map(|(&a, &d)| if a == 0 { 0 } else { d - a })
            .collect();
        DirichletCharacter {
            modulus: self.modulus,
            values: self.values.iter().map(|v| v.conj()).collect(),
            conductor: self.conductor,
            parity: self.parity,
            real: self.real,
            index: canonical_index(&exponents, &self.orders),
            orders: self.orders.clone(),
            exponents,
        }
    }

    /// JSON form used by the CLI: exponent fractions as "e/d" strings,
    /// null on non-units.
    pub fn to_json(&self) -> serde_json::Value {
        let values: Vec<serde_json::Value> = self
            .values
            .iter()
            .map(|v| match v.exponent() {
                None => serde_json::Value::Null,
                Some(a) => serde_json::Value::String(format!("{}/{}", a.numer(), a.denom())),
            })
            .collect();
        serde_json::json!({
            "modulus": self.modulus,
            "index": self.index,
            "conductor": self.conductor,
            "parity": self.parity.to_string(),
            "primitive": self.is_primitive(),
            "real": self.real,
            "order": self.order(),
            "values": values,
        })
    }

    /// Multiplicative order of the character.
    pub fn order(&self) -> u64 {
        self.exponents
            .iter()
            .zip(&self.orders)
            .map(|(&a, &d)| {
                if a == 0 {
                    1
                } else {
                    d / gcd_u64(a, d)
                }
            })
            .fold(1, lcm_u64)
    }
}

fn gcd_u64(a: u64, b: u64) -> u64 {
    a.gcd(&b)
}

fn lcm_u64(a: u64, b: u64) -> u64 {
    a / a.gcd(&b) * b
}

fn canonical_index(exponents: &[u64], orders: &[u64]) -> usize {
    let mut idx = 0usize;
    for (a, d) in exponents.iter().zip(orders) {
        idx = idx * (*d as usize) + *a as usize;
    }
    idx
}

/// One cyclic factor of (Z/kZ)*: a generator residue mod k, its order, and
/// the discrete-log table residue -> exponent.
struct CyclicFactor {
    order: u64,
    dlog: Vec<Option<u64>>, // indexed by residue mod prime_power
    prime_power: u64,
}

fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            let mut e = 0;
            while n % p == 0 {
                n /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

fn pow_mod(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut acc = 1u64;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % m;
        }
        b = b * b % m;
        e >>= 1;
    }
    acc
}

fn euler_phi(pp: u64, p: u64) -> u64 {
    pp / p * (p - 1)
}

/// Smallest primitive root mod p^e for odd prime p.
fn primitive_root_odd(p: u64, e: u32) -> u64 {
    let phi_p = p - 1;
    let factors = factorize(phi_p);
    let mut g = 2;
    loop {
        let ok = factors.iter().all(|&(q, _)| pow_mod(g, phi_p / q, p) != 1);
        if ok {
            break;
        }
        g += 1;
    }
    if e == 1 {
        return g;
    }
    // Lift: g works mod p^e unless g^(p-1) = 1 mod p^2.
    if pow_mod(g, p - 1, p * p) == 1 {
        g += p;
    }
    g
}

fn dlog_table(generator: u64, order: u64, modulus: u64) -> Vec<Option<u64>> {
    let mut table = vec![None; modulus as usize];
    let mut acc = 1u64;
    for t in 0..order {
        table[acc as usize] = Some(t);
        acc = acc * generator % modulus;
    }
    table
}

/// Cyclic decomposition of (Z/kZ)* as discrete-log tables per prime power.
fn unit_group_factors(k: u64) -> Vec<CyclicFactor> {
    let mut factors = Vec::new();
    for (p, e) in factorize(k) {
        let pp = p.pow(e);
        if p == 2 {
            match e {
                1 => {}
                2 => {
                    factors.push(CyclicFactor { order: 2, dlog: dlog_table(3, 2, 4), prime_power: 4 });
                }
                _ => {
                    // (Z/2^e)* = <-1> x <5>
                    let half = pp / 2;
                    let mut neg = vec![None; pp as usize];
                    let mut five = vec![None; pp as usize];
                    // residues of the form (-1)^s 5^t
                    let mut acc = 1u64;
                    for t in 0..half / 2 {
                        neg[acc as usize] = Some(0);
                        five[acc as usize] = Some(t);
                        let m = (pp - acc) % pp;
                        neg[m as usize] = Some(1);
                        five[m as usize] = Some(t);
                        acc = acc * 5 % pp;
                    }
                    factors.push(CyclicFactor { order: 2, dlog: neg, prime_power: pp });
                    factors.push(CyclicFactor { order: half / 2, dlog: five, prime_power: pp });
                }
            }
        } else {
            let g = primitive_root_odd(p, e);
            let order = euler_phi(pp, p);
            factors.push(CyclicFactor { order, dlog: dlog_table(g, order, pp), prime_power: pp });
        }
    }
    factors
}

fn build_character(k: u64, factors: &[CyclicFactor], exponents: &[u64]) -> DirichletCharacter {
    let orders: Vec<u64> = factors.iter().map(|f| f.order).collect();
    let mut values = Vec::with_capacity(k as usize);
    for n in 0..k {
        if num::integer::gcd(n, k) != 1 {
            values.push(CharacterValue::zero());
            continue;
        }
        // Exponent = sum_i a_i * dlog_i(n) / d_i  (mod 1), assembled exactly.
        let mut num_acc: i64 = 0;
        let mut den_acc: i64 = 1;
        for (f, &a) in factors.iter().zip(exponents) {
            let t = f.dlog[(n % f.prime_power) as usize].expect("unit residue must have a discrete log");
            let term = Ratio::new((a * t) as i64, f.order as i64);
            let combined = Ratio::new(num_acc, den_acc) + term;
            num_acc = *combined.numer();
            den_acc = *combined.denom();
        }
        values.push(CharacterValue::root_of_unity(num_acc, den_acc));
    }
    let parity = if k == 1 || values[(k - 1) as usize % k as usize] == CharacterValue::one() {
        Parity::Even
    } else {
        Parity::Odd
    };
    let real = values.iter().all(|v| v.is_real());
    let mut chi = DirichletCharacter {
        modulus: k,
        conductor: 1,
        parity,
        real,
        index: canonical_index(exponents, &orders),
        orders,
        exponents: exponents.to_vec(),
        values,
    };
    chi.conductor = compute_conductor(&chi);
    chi
}

/// Smallest f | k such that chi is trivial on every unit congruent to 1 mod f.
fn compute_conductor(chi: &DirichletCharacter) -> u64 {
    let k = chi.modulus;
    let mut divisors: Vec<u64> = (1..=k).filter(|d| k % d == 0).collect();
    divisors.sort_unstable();
    'outer: for &f in &divisors {
        for n in 1..k {
            if num::integer::gcd(n, k) == 1 && n % f == 1 % f && chi.values[n as usize] != CharacterValue::one() {
                continue 'outer;
            }
        }
        return f;
    }
    k
}

/// All phi(k) characters mod k in canonical (odometer) order.
pub fn enumerate_characters(k: u64) -> Result<Vec<DirichletCharacter>> {
    if k < 2 {
        return Err(Error::Range(format!("character modulus must be >= 2, got {k}")));
    }
    let factors = unit_group_factors(k);
    let orders: Vec<u64> = factors.iter().map(|f| f.order).collect();
    let total: usize = orders.iter().map(|&d| d as usize).product();
    let mut out = Vec::with_capacity(total);
    let mut exponents = vec![0u64; orders.len()];
    for _ in 0..total {
        out.push(build_character(k, &factors, &exponents));
        // odometer increment, last coordinate fastest
        for i in (0..orders.len()).rev() {
            exponents[i] += 1;
            if exponents[i] < orders[i] {
                break;
            }
            exponents[i] = 0;
        }
    }
    Ok(out)
}

/// The real primitive non-principal character mod k, when there is exactly
/// one (the quadratic character for prime k).
pub fn quadratic_character(k: u64) -> Result<DirichletCharacter> {
    let all = enumerate_characters(k)?;
    let mut hits: Vec<DirichletCharacter> =
        all.into_iter().filter(|c| c.is_real() && c.is_primitive() && !c.is_principal()).collect();
    match hits.len() {
        1 => Ok(hits.pop().unwrap()),
        0 => Err(Error::Range(format!("no real primitive character mod {k}"))),
        n => Err(Error::Range(format!("{n} real primitive characters mod {k}; select by index"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mod_three() {
        let chars = enumerate_characters(3).unwrap();
        assert_eq!(chars.len(), 2);
        let primitive: Vec<_> = chars.iter().filter(|c| c.is_primitive()).collect();
        assert_eq!(primitive.len(), 1);
        let chi3 = primitive[0];
        assert_eq!(chi3.value(1), CharacterValue::one());
        assert_eq!(chi3.value(2), CharacterValue::minus_one());
        assert_eq!(chi3.value(-1), CharacterValue::minus_one());
        assert_eq!(chi3.value(6), CharacterValue::zero());
        assert_eq!(chi3.parity(), Parity::Odd);
        assert_eq!(chi3.conductor(), 3);
    }

    #[test]
    fn mod_five_counts() {
        let chars = enumerate_characters(5).unwrap();
        assert_eq!(chars.len(), 4);
        assert_eq!(chars.iter().filter(|c| c.is_primitive()).count(), 3);
        let principal: Vec<_> = chars.iter().filter(|c| c.is_principal()).collect();
        assert_eq!(principal.len(), 1);
        assert_eq!(principal[0].conductor(), 1);
    }

    #[test]
    fn mod_nine_counts() {
        let chars = enumerate_characters(9).unwrap();
        assert_eq!(chars.len(), 6);
        assert_eq!(chars.iter().filter(|c| c.is_primitive()).count(), 4);
        let lifted: Vec<_> = chars.iter().filter(|c| c.conductor() == 3).collect();
        assert_eq!(lifted.len(), 1);
        assert_eq!(lifted[0].order(), 2);
    }

    #[test]
    fn conjugate_involution_and_parity() {
        for k in [5u64, 7, 9, 12, 16] {
            for chi in enumerate_characters(k).unwrap() {
                let cc = chi.conjugate().conjugate();
                assert_eq!(chi, cc);
                assert_eq!(chi.parity(), chi.conjugate().parity());
            }
        }
    }

    #[test]
    fn multiplicativity_exact() {
        for k in [3u64, 5, 9, 15, 16] {
            for chi in enumerate_characters(k).unwrap() {
                for m in 0..(2 * k as i64) {
                    for n in 0..(k as i64) {
                        let lhs = chi.value(m * n);
                        let rhs = chi.value(m).mul(&chi.value(n));
                        assert_eq!(lhs, rhs, "k={k} m={m} n={n}");
                    }
                }
            }
        }
    }

    #[test]
    fn nonprincipal_value_sums_vanish() {
        for k in [3u64, 5, 9, 15] {
            for chi in enumerate_characters(k).unwrap() {
                if chi.is_principal() {
                    continue;
                }
                let s: Complex64 = (0..k as i64).map(|n| chi.value(n).to_c64()).sum();
                assert!(s.norm() < 1e-14, "k={k} idx={}", chi.index());
            }
        }
    }

    #[test]
    fn quadratic_mod_five_is_even(){
        let chi5 = quadratic_character(5).unwrap();
        assert_eq!(chi5.parity(), Parity::Even);
        assert_eq!(chi5.value(2), CharacterValue::minus_one());
        assert_eq!(chi5.value(4), CharacterValue::one());
    }
}
