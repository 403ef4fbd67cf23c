//! Cyclotomic polynomials and factorization into cyclotomic parts.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive};
use serde::{Deserialize, Serialize};

use super::{divisors, euler_phi, mobius};
use crate::error::{Error, Result};
use crate::IntPolynomial;

/// `Φ_n` via the Möbius product `Π_{d|n} (t^d - 1)^{μ(n/d)}`.
///
/// Numerator factors are multiplied in first and denominator factors are
/// then divided out exactly, so every intermediate is an integer polynomial.
pub fn cyclotomic(n: u64) -> IntPolynomial {
    assert!(n >= 1, "cyclotomic: n must be positive");
    let divs = divisors(n);
    let mut acc = IntPolynomial::one();
    for d in divs.iter() {
        if mobius(n / d) == 1 {
            acc = acc.mul_binomial(*d as usize);
        }
    }
    for d in divs.iter() {
        if mobius(n / d) == -1 {
            acc = acc
                .div_binomial(*d as usize)
                .expect("Möbius product divides exactly");
        }
    }
    acc
}

/// `Φ_n` by dividing `t^n - 1` by `Φ_d` for every proper divisor `d`.
///
/// Slower than [`cyclotomic`]; kept as an independent route.
pub fn cyclotomic_by_division(n: u64) -> IntPolynomial {
    assert!(n >= 1);
    let mut acc = IntPolynomial::binomial(n as usize);
    for d in divisors(n) {
        if d == n {
            continue;
        }
        acc = acc
            .exact_div(&cyclotomic_by_division(d))
            .expect("proper cyclotomic factors divide t^n - 1");
    }
    acc
}

/// A polynomial written as `sign · Π Φ_n^{e_n} · remainder`, where the
/// remainder has positive leading coefficient and no root of unity as a root.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CyclotomicProduct {
    sign: i8,
    factors: BTreeMap<u64, u32>,
    remainder: IntPolynomial,
}

impl CyclotomicProduct {
    pub fn one() -> Self {
        CyclotomicProduct {
            sign: 1,
            factors: BTreeMap::new(),
            remainder: IntPolynomial::one(),
        }
    }

    /// Purely cyclotomic product `Π Φ_n^{e_n}` with sign `+1`.
    pub fn from_factors<I: IntoIterator<Item = (u64, u32)>>(factors: I) -> Self {
        let mut out = Self::one();
        for (n, e) in factors {
            assert!(n >= 1, "cyclotomic index must be positive");
            if e > 0 {
                *out.factors.entry(n).or_insert(0) += e;
            }
        }
        out
    }

    pub fn cyclotomic(n: u64) -> Self {
        Self::from_factors([(n, 1)])
    }

    /// Builds `Π (t^m - 1)^{e_m}` from integer exponents `e_m` (possibly
    /// negative), failing unless the quotient is a polynomial.
    pub fn from_binomial_exponents<I: IntoIterator<Item = (u64, i64)>>(exps: I) -> Result<Self> {
        let mut by_index: BTreeMap<u64, i64> = BTreeMap::new();
        for (m, e) in exps {
            if m == 0 {
                return Err(Error::Computation("t^0 - 1 is the zero polynomial".into()));
            }
            for d in divisors(m) {
                *by_index.entry(d).or_insert(0) += e;
            }
        }
        let mut factors = BTreeMap::new();
        for (n, e) in by_index {
            if e < 0 {
                return Err(Error::Computation(format!(
                    "binomial quotient is not a polynomial: Φ_{n} has exponent {e}"
                )));
            }
            if e > 0 {
                factors.insert(n, e as u32);
            }
        }
        Ok(CyclotomicProduct {
            sign: 1,
            factors,
            remainder: IntPolynomial::one(),
        })
    }

    pub fn sign(&self) -> i8 {
        self.sign
    }

    pub fn factors(&self) -> &BTreeMap<u64, u32> {
        &self.factors
    }

    pub fn remainder(&self) -> &IntPolynomial {
        &self.remainder
    }

    pub fn exponent(&self, n: u64) -> u32 {
        self.factors.get(&n).copied().unwrap_or(0)
    }

    /// True when the remainder is trivial, i.e. every root is a root of unity.
    pub fn is_cyclotomic(&self) -> bool {
        self.remainder.is_one()
    }

    pub fn degree(&self) -> usize {
        let cyclo: u64 = self
            .factors
            .iter()
            .map(|(n, e)| euler_phi(*n) * *e as u64)
            .sum();
        cyclo as usize + self.remainder.degree().unwrap_or(0)
    }

    pub fn expand(&self) -> IntPolynomial {
        let mut acc = self.remainder.scale(&BigInt::from(self.sign));
        for (n, e) in self.factors.iter() {
            let phi = cyclotomic(*n);
            for _ in 0..*e {
                acc = &acc * &phi;
            }
        }
        acc
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut out = Self::one();
        for _ in 0..e {
            out = out.mul(self);
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut factors = self.factors.clone();
        for (n, e) in other.factors.iter() {
            *factors.entry(*n).or_insert(0) += e;
        }
        CyclotomicProduct {
            sign: self.sign * other.sign,
            factors,
            remainder: &self.remainder * &other.remainder,
        }
    }

    /// Whether `self` divides `other` in `Z[t]`.
    pub fn divides(&self, other: &Self) -> bool {
        self.factors
            .iter()
            .all(|(n, e)| other.exponent(*n) >= *e)
            && self.remainder.divides(&other.remainder)
    }

    /// `Φ_n` indices with positive exponent.
    pub fn indices(&self) -> Vec<u64> {
        self.factors.keys().copied().collect()
    }

    /// `p(t^k)`, refactored.
    pub fn substitute_power(&self, k: u64) -> Result<Self> {
        // Φ_n(t^k) = Π_{d|n} (t^{dk} - 1)^{μ(n/d)}
        let mut exps: BTreeMap<u64, i64> = BTreeMap::new();
        for (n, e) in self.factors.iter() {
            for d in divisors(*n) {
                let mu = mobius(n / d) as i64;
                if mu != 0 {
                    *exps.entry(d * k).or_insert(0) += mu * *e as i64;
                }
            }
        }
        let mut out = Self::from_binomial_exponents(exps)?;
        out.sign = self.sign;
        if !self.remainder.is_one() {
            let sub = self.remainder.substitute_power(k as usize);
            let refactored = factor_cyclotomic(&sub)?;
            out = out.mul(&refactored);
        }
        Ok(out)
    }

    /// Value at `t = -1`.
    pub fn value_at_minus_one(&self) -> BigInt {
        self.expand().eval(&BigInt::from(-1))
    }

    /// Factored notation, e.g. `Φ_6^2·Φ_10`.
    pub fn factored_string(&self) -> String {
        let mut parts: Vec<String> = Vec::new();
        if self.sign < 0 {
            parts.push("-1".into());
        }
        for (n, e) in self.factors.iter() {
            if *e == 1 {
                parts.push(format!("Φ_{n}"));
            } else {
                parts.push(format!("Φ_{n}^{e}"));
            }
        }
        if !self.remainder.is_one() {
            parts.push(format!("({})", self.remainder));
        }
        if parts.is_empty() {
            "1".into()
        } else {
            parts.join("·")
        }
    }
}

impl fmt::Display for CyclotomicProduct {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.factored_string())
    }
}

/// Candidate indices `n` with `φ(n) ≤ max_degree`, searched up to `3·deg²`.
fn candidate_indices(max_degree: usize) -> Vec<u64> {
    let deg = max_degree.max(1) as u64;
    let bound = 3 * deg * deg;
    (1..=bound).filter(|n| euler_phi(*n) <= deg).collect()
}

const SIEVE_PRIME: u64 = 2_305_843_009_213_693_951; // 2^61 - 1

fn mulmod(a: u64, b: u64) -> u64 {
    ((a as u128 * b as u128) % SIEVE_PRIME as u128) as u64
}

fn reduce_mod_prime(p: &IntPolynomial) -> Vec<u64> {
    let modulus = BigInt::from(SIEVE_PRIME);
    p.coeffs()
        .iter()
        .map(|c| {
            let r = ((c % &modulus) + &modulus) % &modulus;
            r.to_u64().expect("reduced residue fits in u64")
        })
        .collect()
}

/// Whether the monic `divisor` divides `p` modulo the sieve prime. A `false`
/// answer is conclusive over the integers; `true` still needs an exact check.
fn divides_mod_prime(p: &[u64], divisor: &[u64]) -> bool {
    let dr = divisor.len() - 1;
    if p.len() <= dr {
        return p.iter().all(|c| *c == 0);
    }
    let mut rest = p.to_vec();
    for k in (dr..rest.len()).rev() {
        let c = rest[k];
        if c == 0 {
            continue;
        }
        for (j, b) in divisor.iter().enumerate() {
            let idx = k - dr + j;
            rest[idx] = (rest[idx] + SIEVE_PRIME - mulmod(c, *b)) % SIEVE_PRIME;
        }
    }
    rest[..dr].iter().all(|c| *c == 0)
}

/// Splits off every cyclotomic factor of `p` by trial division.
pub fn factor_cyclotomic(p: &IntPolynomial) -> Result<CyclotomicProduct> {
    let deg = match p.degree() {
        None => return Err(Error::Precondition("cannot factor the zero polynomial".into())),
        Some(d) => d,
    };
    let mut rest = p.clone();
    let mut sign = 1i8;
    if rest.leading().is_some_and(Signed::is_negative) {
        rest = -&rest;
        sign = -1;
    }
    let mut factors = BTreeMap::new();
    if deg > 0 {
        for n in candidate_indices(deg) {
            let phi_deg = euler_phi(n) as usize;
            if rest.degree().unwrap_or(0) < phi_deg {
                continue;
            }
            let phi = cyclotomic(n);
            let phi_mod = reduce_mod_prime(&phi);
            let mut e = 0u32;
            while rest.degree().unwrap_or(0) >= phi_deg
                && divides_mod_prime(&reduce_mod_prime(&rest), &phi_mod)
            {
                match rest.exact_div(&phi) {
                    Some(q) => {
                        rest = q;
                        e += 1;
                    }
                    None => break,
                }
            }
            if e > 0 {
                factors.insert(n, e);
            }
        }
    }
    debug_assert!(!rest.is_zero());
    Ok(CyclotomicProduct {
        sign,
        factors,
        remainder: rest,
    })
}

impl Default for CyclotomicProduct {
    fn default() -> Self {
        Self::one()
    }
}

/// `(t^{pq}-1)(t-1) / ((t^p-1)(t^q-1))` for arbitrary `p, q ≥ 1`, composed
/// with `t ↦ t^k`. Shared by several singularity formulas.
pub fn coprime_quotient(p: u64, q: u64, k: u64) -> Result<CyclotomicProduct> {
    CyclotomicProduct::from_binomial_exponents([(p * q * k, 1), (k, 1), (p * k, -1), (q * k, -1)])
}

/// Convenience: a cyclotomic product whose factor exponents are all zero
/// except those given, as used by tests and fixtures.
pub fn product_of(indices: &[(u64, u32)]) -> CyclotomicProduct {
    CyclotomicProduct::from_factors(indices.iter().copied())
}

/// Unit check used by the remainder invariant.
pub fn is_unit(p: &IntPolynomial) -> bool {
    p.degree() == Some(0) && p.coeffs()[0].abs().is_one()
}
