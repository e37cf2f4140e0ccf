//! Relations among `S_N`, `T_N = M_Nᵀ`, `U_N = S_N T_N` and `V_N = T_N S_N`.

use num_traits::{One, Zero};

use super::{m_base, m_matrix, s_int, s_int_base};
use crate::digits::Base;
use crate::exactpoly::Rational;
use crate::matrix::{Comparison, Dims, RationalMatrix};

pub fn t_matrix(dims: Dims) -> RationalMatrix {
    m_matrix(dims).transpose()
}

pub fn u_base(base: Base) -> RationalMatrix {
    s_int_base(base).mul(&m_base(base).transpose())
}

pub fn v_base(base: Base) -> RationalMatrix {
    m_base(base).transpose().mul(&s_int_base(base))
}

/// `U_N = S_N T_N` by direct multiplication.
pub fn u_matrix(dims: Dims) -> RationalMatrix {
    s_int(dims).mul(&t_matrix(dims))
}

/// `V_N = T_N S_N` by direct multiplication.
pub fn v_matrix(dims: Dims) -> RationalMatrix {
    t_matrix(dims).mul(&s_int(dims))
}

/// `U_N = U_1 ⊗ U_{N−1}`.
pub fn u_matrix_kron(dims: Dims) -> RationalMatrix {
    u_base(dims.base()).kronecker_power(dims.depth())
}

/// `V_N = V_1 ⊗ V_{N−1}`.
pub fn v_matrix_kron(dims: Dims) -> RationalMatrix {
    v_base(dims.base()).kronecker_power(dims.depth())
}

fn signed_identity(dim: usize, negative: bool) -> RationalMatrix {
    let id = RationalMatrix::identity(dim);
    if negative {
        id.neg()
    } else {
        id
    }
}

/// `U_N^{b+1} = V_N^{b+1} = (−1)^{N(b+1)} I`.
pub fn power_relation_check(dims: Dims) -> bool {
    let exp = dims.b() + 1;
    let target = signed_identity(dims.dim(), (dims.depth() * exp) % 2 == 1);
    u_matrix(dims).pow(exp) == target && v_matrix(dims).pow(exp) == target
}

/// Coefficients of `p(r) = Σ_{j=0}^{b} (−1)^{j+1} r^j = −1 + r − r² + …`.
pub fn eigen_polynomial(base: Base) -> Vec<Rational> {
    (0..=base.get())
        .map(|j| {
            if j % 2 == 0 {
                -Rational::one()
            } else {
                Rational::one()
            }
        })
        .collect()
}

fn eval_matrix_polynomial(coeffs: &[Rational], m: &RationalMatrix) -> RationalMatrix {
    let mut acc = RationalMatrix::zeros(m.dim());
    let mut power = RationalMatrix::identity(m.dim());
    for c in coeffs {
        if !c.is_zero() {
            acc = acc.add(&power.scale(c));
        }
        power = power.mul(m);
    }
    acc
}

/// `p(U_1) = 0` and `p(V_1) = 0` for the polynomial of [`eigen_polynomial`].
pub fn eigen_poly_annihilation_check(base: Base) -> bool {
    let p = eigen_polynomial(base);
    eval_matrix_polynomial(&p, &u_base(base)).is_zero()
        && eval_matrix_polynomial(&p, &v_base(base)).is_zero()
}

/// Comparison of `Q_N = S T S` against `R_N = T S T`.
#[derive(Debug, Clone, PartialEq)]
pub struct BraidCheck {
    pub q: RationalMatrix,
    pub r: RationalMatrix,
    pub comparison: Comparison<Rational>,
}

impl BraidCheck {
    pub fn holds(&self) -> bool {
        self.comparison.holds()
    }
}

pub fn braid_check(dims: Dims) -> BraidCheck {
    let s = s_int(dims);
    let t = t_matrix(dims);
    let q = s.mul(&t).mul(&s);
    let r = t.mul(&s).mul(&t);
    let comparison = q.compare(&r);
    BraidCheck { q, r, comparison }
}

/// `Q_N² = R_N² = (−1)^N I`.
pub fn braid_square_check(dims: Dims) -> bool {
    let BraidCheck { q, r, .. } = braid_check(dims);
    let target = signed_identity(dims.dim(), dims.depth() % 2 == 1);
    q.mul(&q) == target && r.mul(&r) == target
}
