//! Exact arithmetic foundation.
//!
//! Everything above this module is written against the small set of scalar
//! traits defined here, so the same polynomial and elimination code runs over
//! `BigInt`, `BigRational`, cyclotomic field elements, and (for the numerical
//! cross-checks) `f64`.

pub mod cyclo_number;
pub mod cyclotomic;
pub mod float;
pub mod matrix;
pub mod polynomial;

use std::fmt::Debug;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Commutative ring with identity.
pub trait Ring:
    Clone
    + Debug
    + PartialEq
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
}

impl<T> Ring for T where
    T: Clone
        + Debug
        + PartialEq
        + Zero
        + One
        + Add<Output = T>
        + Sub<Output = T>
        + Mul<Output = T>
        + Neg<Output = T>
{
}

/// Integral domain with a division that is only asked to succeed when the
/// quotient exists in the ring.
pub trait ExactDiv: Ring {
    /// `Some(q)` with `q * rhs == self`, or `None` if no such `q` exists
    /// (or `rhs` is zero).
    fn exact_div(&self, rhs: &Self) -> Option<Self>;
}

/// A field: every nonzero element is invertible.
pub trait Field: ExactDiv {
    fn inverse(&self) -> Option<Self>;
}

impl ExactDiv for BigInt {
    fn exact_div(&self, rhs: &Self) -> Option<Self> {
        if rhs.is_zero() {
            return None;
        }
        let (q, r) = self.div_rem(rhs);
        r.is_zero().then_some(q)
    }
}

impl ExactDiv for i64 {
    fn exact_div(&self, rhs: &Self) -> Option<Self> {
        if *rhs == 0 || self % rhs != 0 {
            return None;
        }
        Some(self / rhs)
    }
}

impl ExactDiv for BigRational {
    fn exact_div(&self, rhs: &Self) -> Option<Self> {
        (!rhs.is_zero()).then(|| self / rhs)
    }
}

impl Field for BigRational {
    fn inverse(&self) -> Option<Self> {
        (!self.is_zero()).then(|| self.recip())
    }
}

macro_rules! float_field {
    ($t:ty) => {
        impl ExactDiv for $t {
            fn exact_div(&self, rhs: &Self) -> Option<Self> {
                (*rhs != 0.0).then(|| self / rhs)
            }
        }

        impl Field for $t {
            fn inverse(&self) -> Option<Self> {
                (*self != 0.0).then(|| 1.0 / self)
            }
        }
    };
}

float_field!(f32);
float_field!(f64);

/// Multiplicative Euler totient.
pub fn euler_phi(n: u64) -> u64 {
    assert!(n >= 1, "euler_phi: n must be positive");
    let mut result = n;
    let mut m = n;
    let mut p = 2;
    while p * p <= m {
        if m.is_multiple_of(p) {
            while m.is_multiple_of(p) {
                m /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if m > 1 {
        result -= result / m;
    }
    result
}

/// Divisors of `n` in increasing order.
pub fn divisors(n: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut i = 1;
    while i * i <= n {
        if n.is_multiple_of(i) {
            small.push(i);
            if i != n / i {
                large.push(n / i);
            }
        }
        i += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

/// Möbius function.
pub fn mobius(n: u64) -> i8 {
    let mut m = n;
    let mut sign = 1i8;
    let mut p = 2;
    while p * p <= m {
        if m.is_multiple_of(p) {
            m /= p;
            if m.is_multiple_of(p) {
                return 0;
            }
            sign = -sign;
        }
        p += 1;
    }
    if m > 1 {
        sign = -sign;
    }
    sign
}

pub fn gcd(a: u64, b: u64) -> u64 {
    a.gcd(&b)
}

pub fn lcm(a: u64, b: u64) -> u64 {
    a.lcm(&b)
}
