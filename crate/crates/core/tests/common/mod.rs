#![allow(dead_code)]

use num_bigint::BigInt;
use num_rational::BigRational;
use planecurve::{CycloMatrix, CyclotomicNumber};
use rand::Rng;

pub const CONDUCTORS: [u64; 7] = [1, 3, 4, 5, 8, 12, 20];

pub fn random_element<R: Rng>(rng: &mut R, n: u64, height: i64) -> CyclotomicNumber {
    let coeffs = (0..n.max(1))
        .map(|_| BigRational::from_integer(BigInt::from(rng.gen_range(-height..=height))))
        .collect();
    CyclotomicNumber::new(n, coeffs)
}

/// Random matrix over `ℚ(ζ_n)`; with `deficient` set, the last row is a
/// combination of the others so the rank drops.
pub fn random_matrix<R: Rng>(
    rng: &mut R,
    n: u64,
    rows: usize,
    cols: usize,
    deficient: bool,
) -> CycloMatrix {
    let mut data: Vec<Vec<CyclotomicNumber>> = (0..rows)
        .map(|_| (0..cols).map(|_| random_element(rng, n, 3)).collect())
        .collect();
    if deficient && rows >= 2 {
        let c: Vec<_> = (0..rows - 1).map(|_| random_element(rng, n, 2)).collect();
        let last = (0..cols)
            .map(|j| {
                (0..rows - 1).fold(CyclotomicNumber::from_integer(0).lift(n), |acc, i| {
                    acc + c[i].clone() * data[i][j].clone()
                })
            })
            .collect();
        data[rows - 1] = last;
    }
    CycloMatrix::from_rows(data.into_iter().map(|r| r.into_iter().map(|x| x.lift(n)).collect()).collect())
        .expect("rectangular")
}

/// Number of `(u, v)` with `u, v ≥ 1` on or below the segment from `(l, 0)`
/// to `(0, d)`, counted one by one.
pub fn lattice_count(d: u64, l: u64) -> u64 {
    let mut count = 0;
    for u in 1..=l {
        for v in 1..=d {
            if d * u + l * v <= d * l {
                count += 1;
            }
        }
    }
    count
}

/// All covers `y^d = x^a (x - z)^b z^c` with `d` in the given range.
pub fn belyi_covers(max_d: u64) -> Vec<planecurve::belyi::BelyiCover> {
    let mut out = Vec::new();
    for d in 3..=max_d {
        for a in 1..d {
            for b in 1..d - a {
                if let Ok(c) = planecurve::belyi::BelyiCover::new(a, b, d - a - b, d) {
                    out.push(c);
                }
            }
        }
    }
    out
}

pub fn coprime_pairs(lo: u64, hi: u64) -> Vec<(u64, u64)> {
    let mut out = Vec::new();
    for p in lo..=hi {
        for q in lo..=hi {
            if p != q && num_integer::gcd(p, q) == 1 {
                out.push((p, q));
            }
        }
    }
    out
}
