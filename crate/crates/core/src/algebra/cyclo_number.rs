//! Elements of the cyclotomic field `ℚ(ζ_n)`.
//!
//! An element is stored as a rational polynomial in `ζ_n` of degree below
//! `φ(n)`. Binary operations on elements of different conductors first lift
//! both operands to the lcm conductor via `ζ_a = ζ_m^{m/a}`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_complex::Complex;
use num_rational::BigRational;
use num_traits::{Float, FromPrimitive, One, ToPrimitive, Zero};

use super::cyclotomic::cyclotomic;
use super::polynomial::Polynomial;
use super::{lcm, ExactDiv, Field};
use crate::RatPolynomial;

#[derive(Clone, Debug)]
pub struct CyclotomicNumber {
    conductor: u64,
    value: RatPolynomial,
}

fn modulus(n: u64) -> RatPolynomial {
    cyclotomic(n).to_rational()
}

impl CyclotomicNumber {
    /// Element given by `Σ coeffs[k] ζ_n^k`, reduced modulo `Φ_n`.
    /// Any number of coefficients is accepted.
    pub fn new(conductor: u64, coeffs: Vec<BigRational>) -> Self {
        assert!(conductor >= 1, "conductor must be positive");
        let value = Polynomial::new(coeffs).rem(&modulus(conductor));
        CyclotomicNumber { conductor, value }
    }

    pub fn from_rational(q: BigRational) -> Self {
        CyclotomicNumber {
            conductor: 1,
            value: Polynomial::constant(q),
        }
    }

    pub fn from_integer(k: i64) -> Self {
        Self::from_rational(BigRational::from_integer(BigInt::from(k)))
    }

    /// `ζ_n^k` for any integer `k`.
    pub fn root_of_unity(n: u64, k: i64) -> Self {
        let e = k.rem_euclid(n as i64) as usize;
        Self::new(n, Polynomial::monomial(BigRational::one(), e).into_coeffs())
    }

    pub fn conductor(&self) -> u64 {
        self.conductor
    }

    /// Coefficients in the power basis `1, ζ_n, …, ζ_n^{φ(n)-1}`
    /// (trailing zeros dropped).
    pub fn coeffs(&self) -> &[BigRational] {
        self.value.coeffs()
    }

    /// Representation over conductor `m`, which must be a multiple of the
    /// current conductor.
    pub fn lift(&self, m: u64) -> Self {
        assert!(
            m.is_multiple_of(self.conductor),
            "cannot lift conductor {} to {}",
            self.conductor,
            m
        );
        if m == self.conductor {
            return self.clone();
        }
        let k = (m / self.conductor) as usize;
        Self::new(m, self.value.substitute_power(k).into_coeffs())
    }

    fn align(&self, other: &Self) -> (Self, Self) {
        let m = lcm(self.conductor, other.conductor);
        (self.lift(m), other.lift(m))
    }

    /// Multiplicative inverse via the extended Euclidean algorithm against `Φ_n`.
    pub fn inverse(&self) -> Option<Self> {
        if self.value.is_zero() {
            return None;
        }
        let (g, u, _) = self.value.extended_gcd(&modulus(self.conductor));
        debug_assert!(g.is_one(), "Φ_n is irreducible");
        Some(CyclotomicNumber {
            conductor: self.conductor,
            value: u.rem(&modulus(self.conductor)),
        })
    }

    /// Image under the embedding `ζ_n ↦ exp(2πi/n)`.
    pub fn to_complex<T: Float + FromPrimitive>(&self) -> Complex<T> {
        let angle = T::from_f64(std::f64::consts::TAU / self.conductor as f64).unwrap();
        let zeta = Complex::from_polar(T::one(), angle);
        self.value
            .coeffs()
            .iter()
            .rev()
            .fold(Complex::new(T::zero(), T::zero()), |acc, c| {
                let c = T::from_f64(c.to_f64().unwrap_or(f64::NAN)).unwrap();
                acc * zeta + Complex::new(c, T::zero())
            })
    }

    /// The rational value, if the element lies in `ℚ`.
    pub fn as_rational(&self) -> Option<BigRational> {
        match self.value.degree() {
            None => Some(BigRational::zero()),
            Some(0) => Some(self.value.coeffs()[0].clone()),
            _ => None,
        }
    }
}

impl PartialEq for CyclotomicNumber {
    fn eq(&self, other: &Self) -> bool {
        if self.conductor == other.conductor {
            return self.value == other.value;
        }
        let (a, b) = self.align(other);
        a.value == b.value
    }
}

impl Eq for CyclotomicNumber {}

impl Zero for CyclotomicNumber {
    fn zero() -> Self {
        Self::from_integer(0)
    }
    fn is_zero(&self) -> bool {
        self.value.is_zero()
    }
}

impl One for CyclotomicNumber {
    fn one() -> Self {
        Self::from_integer(1)
    }
}

impl Add for CyclotomicNumber {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        let (a, b) = self.align(&rhs);
        CyclotomicNumber {
            conductor: a.conductor,
            value: &a.value + &b.value,
        }
    }
}

impl Sub for CyclotomicNumber {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        let (a, b) = self.align(&rhs);
        CyclotomicNumber {
            conductor: a.conductor,
            value: &a.value - &b.value,
        }
    }
}

impl Mul for CyclotomicNumber {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        let (a, b) = self.align(&rhs);
        if a.value.is_zero() || b.value.is_zero() {
            return CyclotomicNumber {
                conductor: a.conductor,
                value: Polynomial::zero(),
            };
        }
        let product = &a.value * &b.value;
        CyclotomicNumber {
            conductor: a.conductor,
            value: product.rem(&modulus(a.conductor)),
        }
    }
}

impl Neg for CyclotomicNumber {
    type Output = Self;
    fn neg(self) -> Self {
        CyclotomicNumber {
            conductor: self.conductor,
            value: -&self.value,
        }
    }
}

impl ExactDiv for CyclotomicNumber {
    fn exact_div(&self, rhs: &Self) -> Option<Self> {
        rhs.inverse().map(|inv| self.clone() * inv)
    }
}

impl Field for CyclotomicNumber {
    fn inverse(&self) -> Option<Self> {
        CyclotomicNumber::inverse(self)
    }
}

impl fmt::Display for CyclotomicNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.value.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.value.coeffs().iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "{c}")?,
                1 => write!(f, "({c})*z{}", self.conductor)?,
                _ => write!(f, "({c})*z{}^{k}", self.conductor)?,
            }
        }
        Ok(())
    }
}
