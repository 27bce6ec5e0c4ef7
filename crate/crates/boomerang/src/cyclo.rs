//! Exact arithmetic in cyclotomic integer rings.
//!
//! Elements live in `Z[x]/(Φ_N(x))` where `Φ_N` is the N-th cyclotomic
//! polynomial, so `is_zero` is an honest coefficient test: `Z[x]/(x^N - 1)`
//! has zero divisors and would poison every non-vanishing check downstream.
//! Coefficients are arbitrary-precision integers, since products of many
//! quantum numbers overflow machine words quickly.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use once_cell::sync::Lazy;
use std::collections::HashMap;
use std::sync::Mutex;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CycloError {
    /// Inversion was requested for an element that is not (plus or minus)
    /// a root of unity; general unit detection is out of scope.
    #[error("division by a non-unit element of Z[zeta_{0}]")]
    DivisionByNonUnit(u64),
    /// Two operands from different cyclotomic rings were combined.
    #[error("mixed cyclotomic moduli {0} and {1}")]
    MixedModuli(u64, u64),
}

/// Euler's totient.
pub fn euler_phi(mut n: u64) -> u64 {
    let mut result = n;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            while n % p == 0 {
                n /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result
}

// ---- integer polynomial helpers (little-endian coefficient vectors) ----

fn poly_trim(p: &mut Vec<BigInt>) {
    while p.last().map_or(false, |c| c.is_zero()) {
        p.pop();
    }
}

fn poly_mul(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, ai) in a.iter().enumerate() {
        if ai.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate() {
            out[i + j] += ai * bj;
        }
    }
    poly_trim(&mut out);
    out
}

/// Division with remainder by a monic divisor; exact over the integers.
fn poly_divmod(num: &[BigInt], den: &[BigInt]) -> (Vec<BigInt>, Vec<BigInt>) {
    assert!(den.last().map_or(false, |c| c.is_one()), "divisor must be monic");
    let mut rem: Vec<BigInt> = num.to_vec();
    poly_trim(&mut rem);
    let dd = den.len() - 1;
    if rem.len() <= dd {
        return (Vec::new(), rem);
    }
    let mut quot = vec![BigInt::zero(); rem.len() - dd];
    while rem.len() > dd {
        let shift = rem.len() - 1 - dd;
        let coef = rem.last().unwrap().clone();
        quot[shift] = coef.clone();
        for (k, dk) in den.iter().enumerate() {
            let idx = shift + k;
            let sub = &coef * dk;
            rem[idx] -= sub;
        }
        poly_trim(&mut rem);
        if rem.is_empty() {
            break;
        }
    }
    poly_trim(&mut quot);
    (quot, rem)
}

static CYCLO_CACHE: Lazy<Mutex<HashMap<u64, Vec<BigInt>>>> =
    Lazy::new(|| Mutex::new(HashMap::new()));

/// The N-th cyclotomic polynomial Φ_N as a little-endian coefficient vector.
///
/// Computed by dividing `x^N - 1` by `Φ_d` for every proper divisor `d` of N;
/// results are memoized process-wide.
pub fn cyclotomic_polynomial(n: u64) -> Vec<BigInt> {
    assert!(n >= 1 && n <= 10_000, "modulus out of supported range");
    if let Some(hit) = CYCLO_CACHE.lock().unwrap().get(&n) {
        return hit.clone();
    }
    let mut num = vec![BigInt::zero(); (n + 1) as usize];
    num[0] = -BigInt::one();
    num[n as usize] = BigInt::one();
    let mut acc = num;
    for d in 1..n {
        if n % d == 0 {
            let phi_d = cyclotomic_polynomial(d);
            let (q, r) = poly_divmod(&acc, &phi_d);
            assert!(r.is_empty(), "cyclotomic division must be exact");
            acc = q;
        }
    }
    debug_assert_eq!(acc.len() as u64 - 1, euler_phi(n));
    CYCLO_CACHE.lock().unwrap().insert(n, acc.clone());
    acc
}

/// A root of unity `ζ_N^k`, stored by modulus and exponent.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct RootOfUnity {
    modulus: u64,
    exponent: u64,
}

impl RootOfUnity {
    pub fn new(modulus: u64, exponent: i64) -> Self {
        assert!(modulus >= 1);
        let m = modulus as i64;
        RootOfUnity {
            modulus,
            exponent: exponent.rem_euclid(m) as u64,
        }
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn exponent(&self) -> u64 {
        self.exponent
    }

    /// Multiplicative order: `N / gcd(N, k)`.
    pub fn order(&self) -> u64 {
        self.modulus / num_integer::gcd(self.modulus, self.exponent)
    }

    pub fn inv(&self) -> Self {
        RootOfUnity::new(self.modulus, -(self.exponent as i64))
    }

    pub fn pow(&self, e: i64) -> Self {
        let k = (self.exponent as i128 * e as i128).rem_euclid(self.modulus as i128);
        RootOfUnity {
            modulus: self.modulus,
            exponent: k as u64,
        }
    }

    pub fn mul(&self, other: &RootOfUnity) -> Result<Self, CycloError> {
        if self.modulus != other.modulus {
            return Err(CycloError::MixedModuli(self.modulus, other.modulus));
        }
        Ok(RootOfUnity::new(
            self.modulus,
            (self.exponent + other.exponent) as i64,
        ))
    }

    pub fn is_one(&self) -> bool {
        self.exponent == 0
    }
}

/// An exact element of `Z[ζ_N] = Z[x]/(Φ_N)` in canonical reduced form.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CycloNumber {
    modulus: u64,
    /// Little-endian coefficients, degree < φ(N), no trailing zeros.
    coeffs: Vec<BigInt>,
}

impl CycloNumber {
    pub fn zero(modulus: u64) -> Self {
        CycloNumber {
            modulus,
            coeffs: Vec::new(),
        }
    }

    pub fn one(modulus: u64) -> Self {
        CycloNumber::from_int(modulus, 1)
    }

    pub fn from_int(modulus: u64, v: i64) -> Self {
        let mut coeffs = vec![BigInt::from(v)];
        poly_trim(&mut coeffs);
        CycloNumber { modulus, coeffs }
    }

    /// Embed `ζ_N^k` as the reduction of `x^k`.
    pub fn embed(z: RootOfUnity) -> Self {
        let mut coeffs = vec![BigInt::zero(); z.exponent as usize + 1];
        coeffs[z.exponent as usize] = BigInt::one();
        CycloNumber::reduced(z.modulus, coeffs)
    }

    fn reduced(modulus: u64, coeffs: Vec<BigInt>) -> Self {
        let phi = cyclotomic_polynomial(modulus);
        let (_, mut rem) = poly_divmod(&coeffs, &phi);
        poly_trim(&mut rem);
        CycloNumber {
            modulus,
            coeffs: rem,
        }
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    fn check_moduli(&self, other: &CycloNumber) -> Result<(), CycloError> {
        if self.modulus != other.modulus {
            Err(CycloError::MixedModuli(self.modulus, other.modulus))
        } else {
            Ok(())
        }
    }

    pub fn add(&self, other: &CycloNumber) -> Result<CycloNumber, CycloError> {
        self.check_moduli(other)?;
        let mut out = vec![BigInt::zero(); self.coeffs.len().max(other.coeffs.len())];
        for (i, c) in self.coeffs.iter().enumerate() {
            out[i] += c;
        }
        for (i, c) in other.coeffs.iter().enumerate() {
            out[i] += c;
        }
        poly_trim(&mut out);
        Ok(CycloNumber {
            modulus: self.modulus,
            coeffs: out,
        })
    }

    pub fn sub(&self, other: &CycloNumber) -> Result<CycloNumber, CycloError> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> CycloNumber {
        CycloNumber {
            modulus: self.modulus,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn mul(&self, other: &CycloNumber) -> Result<CycloNumber, CycloError> {
        self.check_moduli(other)?;
        let prod = poly_mul(&self.coeffs, &other.coeffs);
        Ok(CycloNumber::reduced(self.modulus, prod))
    }

    pub fn pow(&self, mut e: u64) -> CycloNumber {
        let mut base = self.clone();
        let mut acc = CycloNumber::one(self.modulus);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base).unwrap();
            }
            base = base.mul(&base).unwrap();
            e >>= 1;
        }
        acc
    }

    /// Inverse, supported only for elements of the form `±ζ_N^k`.
    pub fn inv(&self) -> Result<CycloNumber, CycloError> {
        for k in 0..self.modulus {
            let z = CycloNumber::embed(RootOfUnity::new(self.modulus, k as i64));
            if *self == z {
                return Ok(CycloNumber::embed(RootOfUnity::new(
                    self.modulus,
                    -(k as i64),
                )));
            }
            if *self == z.neg() {
                return Ok(CycloNumber::embed(RootOfUnity::new(
                    self.modulus,
                    -(k as i64),
                ))
                .neg());
            }
        }
        Err(CycloError::DivisionByNonUnit(self.modulus))
    }

    /// Render as a polynomial in `z` (a primitive N-th root of unity).
    pub fn to_display(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut parts = Vec::new();
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            let term = if i == 0 {
                format!("{mag}")
            } else if mag.is_one() {
                format!("z^{i}")
            } else {
                format!("{mag}*z^{i}")
            };
            if parts.is_empty() {
                parts.push(if c.is_negative() {
                    format!("-{term}")
                } else {
                    term
                });
            } else {
                parts.push(format!(
                    " {} {term}",
                    if c.is_negative() { "-" } else { "+" }
                ));
            }
        }
        parts.concat()
    }
}

/// The quantum number `(n)_q = 1 + q + ... + q^{n-1}` evaluated exactly.
pub fn quantum_number(n: u64, q: RootOfUnity) -> CycloNumber {
    let mut acc = CycloNumber::zero(q.modulus());
    for j in 0..n {
        acc = acc.add(&CycloNumber::embed(q.pow(j as i64))).unwrap();
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    fn coeffs(p: &[i64]) -> Vec<BigInt> {
        let mut v: Vec<BigInt> = p.iter().map(|&c| BigInt::from(c)).collect();
        poly_trim(&mut v);
        v
    }

    #[test]
    fn small_cyclotomics() {
        assert_eq!(cyclotomic_polynomial(1), coeffs(&[-1, 1]));
        assert_eq!(cyclotomic_polynomial(2), coeffs(&[1, 1]));
        assert_eq!(cyclotomic_polynomial(4), coeffs(&[1, 0, 1]));
        assert_eq!(cyclotomic_polynomial(12), coeffs(&[1, 0, -1, 0, 1]));
    }

    #[test]
    fn cyclotomic_degree_is_phi() {
        for n in 1..=60 {
            assert_eq!(cyclotomic_polynomial(n).len() as u64 - 1, euler_phi(n));
        }
    }

    #[test]
    fn root_powers_wrap() {
        let z = RootOfUnity::new(6, 1);
        assert!(CycloNumber::embed(z.pow(6)) == CycloNumber::one(6));
        assert_eq!(RootOfUnity::new(6, 2).order(), 3);
        assert_eq!(RootOfUnity::new(6, 0).order(), 1);
        assert_eq!(RootOfUnity::new(12, 8).order(), 3);
    }

    #[test]
    fn zeta3_sum_vanishes() {
        let z = RootOfUnity::new(3, 1);
        let s = CycloNumber::embed(z)
            .add(&CycloNumber::embed(z.pow(2)))
            .unwrap()
            .add(&CycloNumber::one(3))
            .unwrap();
        assert!(s.is_zero());
    }

    #[test]
    fn gaussian_product() {
        // (1 + i)(1 - i) = 2 in Z[i]
        let i = CycloNumber::embed(RootOfUnity::new(4, 1));
        let one = CycloNumber::one(4);
        let p = one.add(&i).unwrap().mul(&one.sub(&i).unwrap()).unwrap();
        assert_eq!(p, CycloNumber::from_int(4, 2));
    }

    #[test]
    fn quantum_number_basics() {
        assert_eq!(quantum_number(3, RootOfUnity::new(1, 0)), CycloNumber::from_int(1, 3));
        assert_eq!(quantum_number(0, RootOfUnity::new(5, 1)), CycloNumber::zero(5));
        // (n)_q = 0 when ord(q) | n and q != 1
        assert!(quantum_number(6, RootOfUnity::new(6, 2)).is_zero());
        assert!(quantum_number(3, RootOfUnity::new(3, 1)).is_zero());
        // (2)_{zeta_4} = 1 + zeta_4 is nonzero
        assert!(!quantum_number(2, RootOfUnity::new(4, 1)).is_zero());
    }

    #[test]
    fn quantum_symmetry_identity() {
        // (n)_q = q^{n-1} (n)_{q^{-1}}, exactly, for every root of unity.
        for n_mod in 1..=24u64 {
            for k in 0..n_mod {
                let q = RootOfUnity::new(n_mod, k as i64);
                for n in 1..=12u64 {
                    let lhs = quantum_number(n, q);
                    let rhs = CycloNumber::embed(q.pow(n as i64 - 1))
                        .mul(&quantum_number(n, q.inv()))
                        .unwrap();
                    assert_eq!(lhs, rhs, "N={n_mod} k={k} n={n}");
                }
            }
        }
    }

    #[test]
    fn quantum_nonvanishing_below_order() {
        for n_mod in 1..=24u64 {
            for k in 0..n_mod {
                let q = RootOfUnity::new(n_mod, k as i64);
                for n in 1..q.order() {
                    assert!(!quantum_number(n, q).is_zero(), "N={n_mod} k={k} n={n}");
                }
            }
        }
    }

    #[test]
    fn embed_is_multiplicative() {
        for n_mod in 1..=16u64 {
            for a in 0..n_mod {
                for b in 0..n_mod {
                    let za = RootOfUnity::new(n_mod, a as i64);
                    let zb = RootOfUnity::new(n_mod, b as i64);
                    let lhs = CycloNumber::embed(za.mul(&zb).unwrap());
                    let rhs = CycloNumber::embed(za).mul(&CycloNumber::embed(zb)).unwrap();
                    assert_eq!(lhs, rhs);
                }
            }
        }
    }

    #[test]
    fn inversion_of_signed_roots_only() {
        let z = CycloNumber::embed(RootOfUnity::new(5, 2));
        assert_eq!(z.inv().unwrap().mul(&z).unwrap(), CycloNumber::one(5));
        let mz = z.neg();
        assert_eq!(mz.inv().unwrap().mul(&mz).unwrap(), CycloNumber::one(5));
        let two = CycloNumber::from_int(5, 2);
        assert_eq!(two.inv(), Err(CycloError::DivisionByNonUnit(5)));
    }
}
