//! Floating-point rank estimates, used to cross-check exact elimination.

use nalgebra::{DMatrix, RealField};
use num_complex::Complex;
use num_traits::{Float, FromPrimitive};

use super::cyclo_number::CyclotomicNumber;
use super::matrix::Matrix;

/// Embeds a cyclotomic matrix into `ℂ` via `ζ_n ↦ exp(2πi/n)`.
pub fn embed<T>(m: &Matrix<CyclotomicNumber>) -> DMatrix<Complex<T>>
where
    T: RealField + Float + FromPrimitive,
{
    DMatrix::from_fn(m.rows(), m.cols(), |i, j| m.get(i, j).to_complex::<T>())
}

/// Number of singular values above `rel_tol · σ_max`.
pub fn singular_value_rank<T>(m: &DMatrix<Complex<T>>, rel_tol: T) -> usize
where
    T: RealField + Float,
{
    if m.nrows() == 0 || m.ncols() == 0 {
        return 0;
    }
    let sv = m.clone().svd(false, false).singular_values;
    let max = sv.iter().copied().fold(T::zero(), Float::max);
    if max == T::zero() {
        return 0;
    }
    sv.iter().filter(|s| **s > rel_tol * max).count()
}

/// Rank of a cyclotomic matrix under the complex embedding.
pub fn embedded_rank<T>(m: &Matrix<CyclotomicNumber>, rel_tol: T) -> usize
where
    T: RealField + Float + FromPrimitive,
{
    singular_value_rank(&embed::<T>(m), rel_tol)
}
