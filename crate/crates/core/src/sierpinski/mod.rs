//! Generalized Sierpinski matrices `S_{b,N}(x)` and their infinitesimal generators.
//!
//! `S_{b,1}(x)` is the `b×b` lower-triangular matrix with entry
//! `C(x+j−k−1, j−k)` at `(j, k)`, and `S_{b,N+1} = S_{b,1} ⊗ S_{b,N}`.
//! The family satisfies `S(x)·S(y) = S(x+y)`; entry `(n, 0)` of that identity
//! is the digital binomial theorem.

mod generator;
mod identities;
mod structured;

pub use generator::{
    matrix_exp_nilpotent, nilpotency_bound, x_base, x_matrix, x_power_entry, x_power_entry_check,
};
pub use identities::{
    digital_binomial_sides, gould_check, gould_check_at, gould_sides, multiplicity_identity_sides,
    shifted_gould_check, shifted_gould_sides, stirling_first, stirling_identity_check,
    stirling_identity_sides, stirling_row,
};
pub use structured::KroneckerChain;

use crate::digits::{dominates, to_digits, Base};
use crate::error::{Error, Result};
use crate::exactpoly::{binom_rising, Polynomial};
use crate::matrix::{Comparison, Dims, PolyMatrix};

/// `A ⊗ B` with the left factor indexing blocks.
pub fn kronecker(a: &PolyMatrix, b: &PolyMatrix) -> PolyMatrix {
    a.kronecker(b)
}

pub fn s_base(base: Base) -> PolyMatrix {
    s_base_with(base, &Polynomial::x())
}

/// `S_{b,1}` with `arg` in place of `x`.
pub fn s_base_with(base: Base, arg: &Polynomial) -> PolyMatrix {
    let b = base.get() as usize;
    let binoms = BinomTable::new(base, arg);
    PolyMatrix::from_fn(b, |j, k| {
        if k <= j {
            binoms.get((j - k) as u32).clone()
        } else {
            Polynomial::zero()
        }
    })
}

pub fn s_matrix(dims: Dims) -> PolyMatrix {
    s_matrix_with(dims, &Polynomial::x())
}

/// `S_{b,N}` built by the Kronecker recursion, with `arg` in place of `x`.
pub fn s_matrix_with(dims: Dims, arg: &Polynomial) -> PolyMatrix {
    s_base_with(dims.base(), arg).kronecker_power(dims.depth())
}

pub fn s_entry(dims: Dims, j: usize, k: usize) -> Result<Polynomial> {
    s_entry_with(dims, j, k, &Polynomial::x())
}

/// Closed-form entry: the product of `C(arg+d_i−1, d_i)` over the digits
/// `d_i` of `j−k` when `k ⪯ j`, zero otherwise.
pub fn s_entry_with(dims: Dims, j: usize, k: usize, arg: &Polynomial) -> Result<Polynomial> {
    check_index(dims, j, k)?;
    Ok(BinomTable::new(dims.base(), arg).entry(j as u64, k as u64))
}

/// Builds `S_{b,N}` entry by entry from the closed form.
pub fn s_matrix_closed_form(dims: Dims, arg: &Polynomial) -> PolyMatrix {
    let table = BinomTable::new(dims.base(), arg);
    PolyMatrix::from_fn(dims.dim(), |j, k| table.entry(j as u64, k as u64))
}

fn check_index(dims: Dims, j: usize, k: usize) -> Result<()> {
    if j >= dims.dim() || k >= dims.dim() {
        return Err(Error::IndexOutOfRange {
            row: j,
            col: k,
            dim: dims.dim(),
        });
    }
    Ok(())
}

/// `C(arg+d−1, d)` for every digit `d` of the base.
struct BinomTable {
    base: Base,
    values: Vec<Polynomial>,
}

impl BinomTable {
    fn new(base: Base, arg: &Polynomial) -> Self {
        BinomTable {
            base,
            values: (0..base.get()).map(|d| binom_rising(d, arg)).collect(),
        }
    }

    fn get(&self, d: u32) -> &Polynomial {
        &self.values[d as usize]
    }

    fn entry(&self, j: u64, k: u64) -> Polynomial {
        if k > j || !dominates(k, j, self.base) {
            return Polynomial::zero();
        }
        to_digits(j - k, self.base)
            .digits()
            .iter()
            .filter(|&&d| d > 0)
            .fold(Polynomial::one(), |acc, &d| &acc * self.get(d))
    }
}

/// Symbolic check of `S(x)·S(y) = S(x+y)`.
///
/// The product is formed from two Kronecker-built copies, one in `x` and one in
/// `y`; the right side comes from the closed-form entries with argument `x+y`.
pub fn verify_one_parameter(dims: Dims) -> Comparison<Polynomial> {
    let sx = s_matrix_with(dims, &Polynomial::x());
    let sy = s_matrix_with(dims, &Polynomial::y());
    let sum = &Polynomial::x() + &Polynomial::y();
    sx.mul(&sy).compare(&s_matrix_closed_form(dims, &sum))
}

/// `S(x)·S(−x)`, which the group law makes the identity.
pub fn inverse_product(dims: Dims) -> PolyMatrix {
    let x = Polynomial::x();
    s_matrix_with(dims, &x).mul(&s_matrix_with(dims, &-&x))
}

/// Determinant of a lower-triangular matrix: the product of its diagonal.
pub fn triangular_determinant(m: &PolyMatrix) -> Option<Polynomial> {
    if !m.is_lower_triangular() {
        return None;
    }
    Some((0..m.dim()).fold(Polynomial::one(), |acc, i| &acc * m.get(i, i)))
}
