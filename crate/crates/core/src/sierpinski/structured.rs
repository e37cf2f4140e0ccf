//! Matrix-free application of an N-fold Kronecker power.
//!
//! Writing the index as `N` base-b digits, `A⊗A⊗…⊗A` acts on each digit
//! position independently, so applying `A` along every position in turn costs
//! `N·b·b^N` coefficient operations instead of `b^{2N}`.

use crate::error::{Error, Result};
use crate::exactpoly::{Polynomial, Rational};
use crate::matrix::{Dims, Matrix, RationalMatrix, Scalar};

use super::s_base_with;

#[derive(Clone, PartialEq)]
pub struct KroneckerChain<T> {
    base_factor: Matrix<T>,
    depth: u32,
    dim: usize,
}

impl<T: Scalar + std::fmt::Display> KroneckerChain<T> {
    pub fn new(base_factor: Matrix<T>, depth: u32) -> Result<Self> {
        if depth == 0 {
            return Err(Error::InvalidDepth(depth));
        }
        let dim = (base_factor.dim() as u64)
            .checked_pow(depth)
            .and_then(|d| usize::try_from(d).ok())
            .ok_or_else(|| {
                Error::InvalidArgument(format!(
                    "{}^{depth} does not fit in memory indices",
                    base_factor.dim()
                ))
            })?;
        Ok(KroneckerChain {
            base_factor,
            depth,
            dim,
        })
    }

    pub fn base_factor(&self) -> &Matrix<T> {
        &self.base_factor
    }

    pub fn depth(&self) -> u32 {
        self.depth
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Materializes the full Kronecker power.
    pub fn to_dense(&self) -> Matrix<T> {
        self.base_factor.kronecker_power(self.depth)
    }

    pub fn apply(&self, v: &[T]) -> Result<Vec<T>> {
        if v.len() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                actual: v.len(),
            });
        }
        let b = self.base_factor.dim();
        // Nonzero entries of each factor row, with a flag for entries equal to one.
        let rows: Vec<Vec<(usize, bool, &T)>> = (0..b)
            .map(|i| {
                self.base_factor
                    .row(i)
                    .iter()
                    .enumerate()
                    .filter(|(_, a)| !a.is_zero())
                    .map(|(k, a)| (k, *a == T::one(), a))
                    .collect()
            })
            .collect();

        let mut cur = v.to_vec();
        let mut next = vec![T::zero(); self.dim];
        let mut stride = 1;
        for _ in 0..self.depth {
            let block = stride * b;
            for start in (0..self.dim).step_by(block) {
                for offset in 0..stride {
                    let origin = start + offset;
                    for (i, row) in rows.iter().enumerate() {
                        let mut acc = T::zero();
                        for &(k, unit, a) in row {
                            let x = &cur[origin + k * stride];
                            if unit {
                                acc.add_assign(x);
                            } else {
                                acc.add_assign(&a.mul(x));
                            }
                        }
                        next[origin + i * stride] = acc;
                    }
                }
            }
            std::mem::swap(&mut cur, &mut next);
            stride = block;
        }
        Ok(cur)
    }
}

impl<T: Scalar + std::fmt::Display> std::fmt::Debug for KroneckerChain<T> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "KroneckerChain(depth {}, factor ", self.depth)?;
        std::fmt::Debug::fmt(&self.base_factor, f)?;
        f.write_str(")")
    }
}

impl KroneckerChain<Rational> {
    /// `S_{b,N}` evaluated at `x = x0`, kept in factored form.
    pub fn sierpinski(dims: Dims, x0: &Rational) -> Self {
        let factor: RationalMatrix = s_base_with(dims.base(), &Polynomial::x())
            .map(|p| p.eval(x0, &Rational::from_integer(0.into())));
        KroneckerChain {
            base_factor: factor,
            depth: dims.depth(),
            dim: dims.dim(),
        }
    }
}
