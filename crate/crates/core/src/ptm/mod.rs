//! Prouhet-Thue-Morse polynomials and their factorization.
//!
//! For a zero-sum vector `A = (a_0, …, a_{b−1})` the PTM polynomial
//! `F_N(x; A) = Σ_{n<b^N} a_{u_b(n)} xⁿ` factors as
//! `P_N(x) · ∏_{m<N} (1 − x^{b^m})`. The coefficient vector of `P_N` is
//! `c_N = S_N a_N`, where `S_N = S_{b,N}(1)` inverts the Kronecker power
//! `M_N` of the bidiagonal matrix with `1` on the diagonal and `−1` below it.

mod relations;
mod unipoly;

pub use relations::{
    braid_check, braid_square_check, eigen_poly_annihilation_check, eigen_polynomial,
    power_relation_check, t_matrix, u_base, u_matrix, u_matrix_kron, v_base, v_matrix,
    v_matrix_kron, BraidCheck,
};
pub use unipoly::UniPoly;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::digits::{dominated_set, parity_w, ptm, to_digits, Base};
use crate::error::{Error, Result};
use crate::exactpoly::Rational;
use crate::matrix::{Dims, RationalMatrix};

/// `b` rationals summing to zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ZeroSumVector {
    base: Base,
    entries: Vec<Rational>,
}

impl ZeroSumVector {
    /// The base is the number of entries.
    pub fn new(entries: Vec<Rational>) -> Result<Self> {
        let base = Base::new(entries.len() as u32).map_err(|_| {
            Error::InvalidArgument(format!(
                "a zero-sum vector needs at least 2 entries, got {}",
                entries.len()
            ))
        })?;
        let sum: Rational = entries.iter().sum();
        if !sum.is_zero() {
            return Err(Error::NotZeroSum(sum));
        }
        Ok(ZeroSumVector { base, entries })
    }

    pub fn from_integers(entries: &[i64]) -> Result<Self> {
        ZeroSumVector::new(entries.iter().map(|&a| crate::exactpoly::int(a)).collect())
    }

    pub fn base(&self) -> Base {
        self.base
    }

    pub fn entries(&self) -> &[Rational] {
        &self.entries
    }

    pub fn get(&self, i: u32) -> &Rational {
        &self.entries[i as usize]
    }

    fn expect_base(&self, base: Base) -> Result<()> {
        if self.base != base {
            return Err(Error::InvalidArgument(format!(
                "zero-sum vector has {} entries but the base is {base}",
                self.base
            )));
        }
        Ok(())
    }
}

/// `M_1`: `1` on the diagonal, `−1` on the subdiagonal.
pub fn m_base(base: Base) -> RationalMatrix {
    let b = base.get() as usize;
    RationalMatrix::from_fn(b, |i, j| {
        if i == j {
            Rational::one()
        } else if i == j + 1 {
            -Rational::one()
        } else {
            Rational::zero()
        }
    })
}

/// `M_N = M_1 ⊗ M_{N−1}`.
pub fn m_matrix(dims: Dims) -> RationalMatrix {
    m_base(dims.base()).kronecker_power(dims.depth())
}

/// `S_1`: lower-triangular all ones.
pub fn s_int_base(base: Base) -> RationalMatrix {
    let b = base.get() as usize;
    RationalMatrix::from_fn(b, |i, j| {
        if j <= i {
            Rational::one()
        } else {
            Rational::zero()
        }
    })
}

/// `S_N = S_1 ⊗ S_{N−1}`, the Sierpinski matrix evaluated at `x = 1`.
pub fn s_int(dims: Dims) -> RationalMatrix {
    s_int_base(dims.base()).kronecker_power(dims.depth())
}

/// `a_N`: component `n` is `a_{u_b(n)}`.
pub fn f_vector(dims: Dims, a: &ZeroSumVector) -> Result<Vec<Rational>> {
    a.expect_base(dims.base())?;
    Ok((0..dims.dim() as u64)
        .map(|n| a.get(ptm(n, dims.base())).clone())
        .collect())
}

pub fn f_polynomial(dims: Dims, a: &ZeroSumVector) -> Result<UniPoly> {
    Ok(UniPoly::from_coeffs(f_vector(dims, a)?))
}

/// `c_n = Σ_{k ⪯ n} a_{u_b(k)}`.
pub fn coefficient_by_formula(n: u64, a: &ZeroSumVector) -> Rational {
    dominated_set(n, a.base())
        .into_iter()
        .map(|k| a.get(ptm(k, a.base())))
        .sum()
}

pub fn coefficients_by_formula(dims: Dims, a: &ZeroSumVector) -> Result<Vec<Rational>> {
    a.expect_base(dims.base())?;
    Ok((0..dims.dim() as u64)
        .map(|n| coefficient_by_formula(n, a))
        .collect())
}

/// `c_N = S_N a_N`.
pub fn coefficients_by_matrix(dims: Dims, a: &ZeroSumVector) -> Result<Vec<Rational>> {
    s_int(dims).mul_vec(&f_vector(dims, a)?)
}

/// True when some base-b digit of `n` (within its expansion) equals `b − 1`.
pub fn has_top_digit(n: u64, base: Base) -> bool {
    n > 0 && to_digits(n, base).digits().contains(&base.max_digit())
}

/// `∏_{m<N} (1 − x^{b^m})`.
pub fn cyclotomic_product(dims: Dims) -> UniPoly {
    let b = dims.b() as usize;
    (0..dims.depth())
        .fold((UniPoly::one(), 1usize), |(acc, power), _| {
            (acc.mul(&UniPoly::one_minus_power(power)), power * b)
        })
        .0
}

/// `F_N`, the cofactor `P_N` built from [`coefficients_by_formula`], and the
/// product `P_N · ∏(1 − x^{b^m})`.
#[derive(Debug, Clone, PartialEq)]
pub struct Factorization {
    pub f: UniPoly,
    pub p: UniPoly,
    pub product: UniPoly,
}

impl Factorization {
    pub fn holds(&self) -> bool {
        self.f == self.product
    }
}

pub fn factorize(dims: Dims, a: &ZeroSumVector) -> Result<Factorization> {
    let f = f_polynomial(dims, a)?;
    let p = UniPoly::from_coeffs(coefficients_by_formula(dims, a)?);
    let product = p.mul(&cyclotomic_product(dims));
    Ok(Factorization { f, p, product })
}

pub fn verify_factorization(dims: Dims, a: &ZeroSumVector) -> Result<bool> {
    Ok(factorize(dims, a)?.holds())
}

/// Values `F^{(m)}(1)` for `m = 0..N`; all vanish when `F` has a zero of
/// order at least `N` at `x = 1`.
pub fn derivatives_at_one(dims: Dims, a: &ZeroSumVector) -> Result<Vec<Rational>> {
    let mut p = f_polynomial(dims, a)?;
    let one = Rational::one();
    let mut out = Vec::with_capacity(dims.depth() as usize);
    for _ in 0..dims.depth() {
        out.push(p.eval(&one));
        p = p.derivative();
    }
    Ok(out)
}

/// Base-3 closed form `c_n = (−1)^{w(n)} a_{u_3(2n)}` for `n` with digits in `{0, 1}`.
/// Returns both sides.
pub fn base3_corollary_sides(n: u64, a: &ZeroSumVector) -> Result<(Rational, Rational)> {
    a.expect_base(Base::TERNARY)?;
    if to_digits(n, Base::TERNARY).digits().contains(&2) {
        return Err(Error::InvalidArgument(format!(
            "{n} has the digit 2 in base 3"
        )));
    }
    let lhs = coefficient_by_formula(n, a);
    let mut rhs = a.get(ptm(2 * n, Base::TERNARY)).clone();
    if parity_w(n) == 1 {
        rhs = -rhs;
    }
    Ok((lhs, rhs))
}

pub fn base3_corollary_check(n: u64, a: &ZeroSumVector) -> Result<bool> {
    let (lhs, rhs) = base3_corollary_sides(n, a)?;
    Ok(lhs == rhs)
}

/// Prouhet's partition of `0..b^{M+1}` into classes by `u_b(n)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProuhetPartition {
    base: Base,
    degree: u32,
    classes: Vec<Vec<u64>>,
}

impl ProuhetPartition {
    pub fn base(&self) -> Base {
        self.base
    }

    /// The degree `M` up to which power sums agree.
    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn classes(&self) -> &[Vec<u64>] {
        &self.classes
    }

    /// `table[m][i] = Σ_{n ∈ S_i} n^m` for `m = 0..=max_degree`.
    pub fn power_sums(&self, max_degree: u32) -> Vec<Vec<BigUint>> {
        (0..=max_degree)
            .map(|m| {
                self.classes
                    .iter()
                    .map(|class| class.iter().map(|&n| BigUint::from(n).pow(m)).sum())
                    .collect()
            })
            .collect()
    }

    /// True when every class has the same `m`-th power sum for all `m ≤ M`.
    pub fn has_equal_power_sums(&self) -> bool {
        self.power_sums(self.degree)
            .iter()
            .all(|row| row.windows(2).all(|w| w[0] == w[1]))
    }
}

/// Partition of `0..b^{M+1}` with `n ∈ S_{u_b(n)}`. `b^{M+1}` must not exceed `cap`.
pub fn prouhet_partition(base: Base, degree: u32, cap: usize) -> Result<ProuhetPartition> {
    let dims = Dims::with_cap(base.get(), degree + 1, cap)?;
    let mut classes = vec![Vec::new(); base.get() as usize];
    for n in 0..dims.dim() as u64 {
        classes[ptm(n, base) as usize].push(n);
    }
    Ok(ProuhetPartition {
        base,
        degree,
        classes,
    })
}
