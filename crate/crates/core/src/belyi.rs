//! Cyclic covers of `ℙ¹` branched over three points,
//! `y^d = x^a (x - z)^b z^c` with `a + b + c = d`.

use std::fmt;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::algebra::gcd;
use crate::error::{Error, Result};
use crate::CyclotomicProduct;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BelyiCover {
    pub a: u64,
    pub b: u64,
    pub c: u64,
    pub d: u64,
}

impl BelyiCover {
    /// Validates positivity, `a + b + c = d` and irreducibility
    /// (`gcd(a, b, c, d) = 1`).
    pub fn new(a: u64, b: u64, c: u64, d: u64) -> Result<Self> {
        if a == 0 || b == 0 || c == 0 {
            return Err(Error::precondition("exponents a, b, c must be positive"));
        }
        if a.checked_add(b).and_then(|s| s.checked_add(c)) != Some(d) {
            return Err(Error::precondition("a+b+c != d"));
        }
        if gcd(gcd(a, b), gcd(c, d)) != 1 {
            return Err(Error::precondition(
                "gcd(a, b, c, d) must be 1 (the cover is reducible otherwise)",
            ));
        }
        Ok(BelyiCover { a, b, c, d })
    }

    /// Ramification data at the three branch points: the stabilizer orders
    /// `gcd(a,d), gcd(b,d), gcd(c,d)`.
    pub fn stabilizers(&self) -> [u64; 3] {
        [gcd(self.a, self.d), gcd(self.b, self.d), gcd(self.c, self.d)]
    }

    pub fn genus(&self) -> u64 {
        genus(self)
    }
}

impl fmt::Display for BelyiCover {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "y^{} = x^{}(x-z)^{}z^{}",
            self.d, self.a, self.b, self.c
        )
    }
}

/// Riemann–Hurwitz: `(d - gcd(a,d) - gcd(b,d) - gcd(c,d) + 2) / 2`.
pub fn genus(cover: &BelyiCover) -> u64 {
    let s: u64 = cover.stabilizers().iter().sum();
    let twice = cover.d + 2 - s;
    debug_assert!(twice.is_multiple_of(2));
    twice / 2
}

/// Multiplicity of `ω_d^j` on holomorphic 1-forms:
/// `-(⌊-aj/d⌋ + ⌊-bj/d⌋ + ⌊(a+b)j/d⌋ + 1)`, with mathematical floors.
pub fn eigen_multiplicity(cover: &BelyiCover, j: u64) -> Result<u8> {
    if j == 0 || j >= cover.d {
        return Err(Error::precondition(format!(
            "eigenvalue index j = {j} outside 1..{}",
            cover.d - 1
        )));
    }
    let (a, b, d, j) = (cover.a as i128, cover.b as i128, cover.d as i128, j as i128);
    let fl = |x: i128| Integer::div_floor(&x, &d);
    let s = fl(-a * j) + fl(-b * j) + fl((a + b) * j) + 1;
    let m = -s;
    u8::try_from(m)
        .ok()
        .filter(|m| *m <= 1)
        .ok_or_else(|| Error::Computation(format!("multiplicity {m} outside {{0, 1}} for {cover}")))
}

/// `(t^d - 1)(t - 1)^2 / ((t^{gcd(a,d)} - 1)(t^{gcd(b,d)} - 1)(t^{gcd(c,d)} - 1))`,
/// the deck transformation on `H_1`.
pub fn deck_charpoly(cover: &BelyiCover) -> Result<CyclotomicProduct> {
    let [ga, gb, gc] = cover.stabilizers();
    CyclotomicProduct::from_binomial_exponents([
        (cover.d, 1),
        (1, 2),
        (ga, -1),
        (gb, -1),
        (gc, -1),
    ])
    .map_err(|e| Error::Computation(format!("deck polynomial of {cover} is not exact: {e}")))
}

/// Indices `j` whose eigenvalue `ω_d^j` occurs on holomorphic forms.
pub fn cm_exponents(cover: &BelyiCover) -> Result<Vec<u64>> {
    let mut out = Vec::new();
    for j in 1..cover.d {
        if eigen_multiplicity(cover, j)? == 1 {
            out.push(j);
        }
    }
    Ok(out)
}

/// Conductors `n` with `Φ_n` dividing the deck polynomial.
pub fn cm_conductors(cover: &BelyiCover) -> Result<Vec<u64>> {
    Ok(deck_charpoly(cover)?.indices())
}

/// Number of adjunction conditions of `y^d + x^l`:
/// `((d-1)(l-1) + gcd(d,l) - 1) / 2`.
pub fn adjunction_count(d: u64, l: u64) -> Result<u64> {
    if d < 2 || l < 2 {
        return Err(Error::precondition(format!(
            "adjunction count needs d, l >= 2, got ({d}, {l})"
        )));
    }
    Ok(adjunction_count_unchecked(d, l))
}

fn adjunction_count_unchecked(d: u64, l: u64) -> u64 {
    ((d - 1) * (l - 1) + gcd(d, l) - 1) / 2
}

/// `C(d-1, 2)` minus the adjunction conditions at the three points of the
/// plane model where the curve looks like `y^d + x^l`. Exponent 1 is a
/// smooth point and imposes nothing.
pub fn adjoint_dimension(cover: &BelyiCover) -> u64 {
    let d = cover.d;
    let ambient = (d - 1) * (d - 2) / 2;
    let conditions: u64 = [cover.a, cover.b, cover.c]
        .iter()
        .map(|l| adjunction_count_unchecked(d, *l))
        .sum();
    ambient - conditions
}
