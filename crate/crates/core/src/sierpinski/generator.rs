//! The nilpotent generator `X_{b,N}(x)` with `exp(X_{b,N}) = S_{b,N}`.

use num_traits::One;

use super::identities::{biguint_to_rational, stirling_row};
use crate::digits::Base;
use crate::error::{Error, Result};
use crate::exactpoly::{factorial, ratio, Polynomial, Rational};
use crate::matrix::{Dims, Matrix, PolyMatrix, Scalar};

/// `X_{b,1}`: strictly lower-triangular with `x/(j−k)` below the diagonal.
pub fn x_base(base: Base) -> PolyMatrix {
    let x = Polynomial::x();
    PolyMatrix::from_fn(base.get() as usize, |j, k| {
        if j > k {
            x.scale(&ratio(1, (j - k) as i64))
        } else {
            Polynomial::zero()
        }
    })
}

/// `X_{b,N+1} = X_{b,1} ⊗ I + I ⊗ X_{b,N}`.
pub fn x_matrix(dims: Dims) -> PolyMatrix {
    let base = x_base(dims.base());
    let mut acc = base.clone();
    for _ in 1..dims.depth() {
        acc = base.kronecker_sum(&acc);
    }
    acc
}

/// Largest digit sum of `j−k` over a `b^N` matrix, `N(b−1)`. Every power of
/// `X_{b,N}` beyond this one vanishes.
pub fn nilpotency_bound(dims: Dims) -> u32 {
    dims.depth() * dims.base().max_digit()
}

/// Entry `(j, k)` of `X_{b,1}^n`: `(n!/(j−k)!)·c(j−k, n)·x^n` when `j ≥ k+n`.
pub fn x_power_entry(n: u32, j: usize, k: usize) -> Polynomial {
    if j < k + n as usize {
        return Polynomial::zero();
    }
    let l = (j - k) as u32;
    let c = biguint_to_rational(&stirling_row(l)[n as usize]);
    let coeff = factorial(n) / factorial(l) * c;
    Polynomial::monomial(coeff, n, 0)
}

/// Compares `X_{b,1}^n`, formed by repeated multiplication, with [`x_power_entry`].
pub fn x_power_entry_check(base: Base, n: u32) -> Result<bool> {
    if n < 1 || n > base.max_digit() {
        return Err(Error::InvalidArgument(format!(
            "power {n} outside 1..={} for base {base}",
            base.max_digit()
        )));
    }
    let power = x_base(base).pow(n);
    let dim = base.get() as usize;
    let formula = PolyMatrix::from_fn(dim, |j, k| x_power_entry(n, j, k));
    Ok(power == formula)
}

/// `Σ_{n=0}^{bound} Xⁿ/n!` for strictly lower-triangular `X`.
///
/// The series is exact once `bound` reaches the nilpotency index minus one;
/// for `X_{b,N}` that is [`nilpotency_bound`].
pub fn matrix_exp_nilpotent<T: Scalar>(x: &Matrix<T>, bound: u32) -> Result<Matrix<T>> {
    if let Some((row, col)) = x.first_nonzero_on_or_above_diagonal() {
        return Err(Error::NotStrictlyLowerTriangular { row, col });
    }
    let mut sum = Matrix::identity(x.dim());
    let mut power = Matrix::identity(x.dim());
    let mut inv_factorial = <Rational as One>::one();
    for n in 1..=bound {
        power = power.mul(x);
        if power.is_zero() {
            break;
        }
        inv_factorial /= Rational::from_integer(n.into());
        sum = sum.add(&power.scale(&inv_factorial));
    }
    Ok(sum)
}
