//! Named verification suites producing [`CheckRecord`]s.
//!
//! Each suite runs a family of identities at one `(b, N)` and records a
//! witness for the first failure it finds.

use std::fmt::Display;

use num_traits::Zero;

use crate::digits::{to_digits, Base};
use crate::error::{Error, Result};
use crate::exactpoly::{Polynomial, Rational};
use crate::matrix::{Comparison, Dims, Matrix, Scalar};
use crate::ptm::{
    base3_corollary_sides, braid_check, braid_square_check, coefficients_by_formula,
    coefficients_by_matrix, derivatives_at_one, eigen_poly_annihilation_check, factorize,
    has_top_digit, m_matrix, power_relation_check, prouhet_partition, s_int, u_matrix,
    u_matrix_kron, v_matrix, v_matrix_kron, ZeroSumVector,
};
use crate::report::{CheckRecord, Status, Witness};
use crate::sierpinski::{
    digital_binomial_sides, gould_sides, inverse_product, matrix_exp_nilpotent,
    multiplicity_identity_sides, nilpotency_bound, s_matrix, s_matrix_closed_form,
    shifted_gould_sides, stirling_identity_sides, triangular_determinant, verify_one_parameter,
    x_matrix, x_power_entry_check,
};

/// Largest `n` used by the Gould convolution checks.
pub const GOULD_MAX: u32 = 8;
/// Largest `l` used by the Stirling recurrence check.
pub const STIRLING_MAX: u32 = 12;
/// The base-3 closed form is checked for every `n` below this, or below `3^N`
/// when that is larger.
pub const BASE3_RANGE: u64 = 27;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    OneParameter,
    DigitalBinomial,
    Exp,
    Stirling,
    Factorization,
    Relations,
    Prouhet,
}

impl Suite {
    pub const ALL: [Suite; 7] = [
        Suite::OneParameter,
        Suite::DigitalBinomial,
        Suite::Exp,
        Suite::Stirling,
        Suite::Factorization,
        Suite::Relations,
        Suite::Prouhet,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::OneParameter => "one-parameter",
            Suite::DigitalBinomial => "digital-binomial",
            Suite::Exp => "exp",
            Suite::Stirling => "stirling",
            Suite::Factorization => "factorization",
            Suite::Relations => "relations",
            Suite::Prouhet => "prouhet",
        }
    }
}

/// Inputs shared by every suite.
#[derive(Debug, Clone)]
pub struct SuiteConfig {
    pub dims: Dims,
    /// Cap on `b^{M+1}` for the Prouhet partition, which uses `M = N`.
    pub cap: usize,
    /// Vectors for the factorization suite; each must have `b` entries.
    pub zero_sums: Vec<ZeroSumVector>,
}

pub fn run_suite(suite: Suite, config: &SuiteConfig) -> Result<Vec<CheckRecord>> {
    let dims = config.dims;
    match suite {
        Suite::OneParameter => Ok(one_parameter(dims)),
        Suite::DigitalBinomial => Ok(digital_binomial(dims)),
        Suite::Exp => exp(dims),
        Suite::Stirling => stirling(dims),
        Suite::Factorization => factorization(dims, &config.zero_sums),
        Suite::Relations => Ok(relations(dims)),
        Suite::Prouhet => prouhet(dims, config.cap),
    }
}

fn record(name: &str, dims: Dims, holds: bool, witness: Option<Witness>) -> CheckRecord {
    let witness = if holds { None } else { witness };
    CheckRecord::new(
        name,
        dims.b(),
        dims.depth(),
        Status::from_outcome(holds, true),
        witness,
    )
}

fn matrix_record<T: Display>(name: &str, dims: Dims, cmp: &Comparison<T>) -> CheckRecord {
    record(
        name,
        dims,
        cmp.holds(),
        cmp.witness.as_ref().map(Witness::entry),
    )
}

/// First case whose two sides differ, as a witness.
fn first_case<I, L, R>(cases: I) -> Option<Witness>
where
    I: IntoIterator<Item = (String, L, R)>,
    L: PartialEq<R> + Display,
    R: Display,
{
    cases
        .into_iter()
        .find(|(_, l, r)| l != r)
        .map(|(case, l, r)| Witness::case(case, l, r))
}

fn case_record<I, L, R>(name: &str, dims: Dims, cases: I) -> CheckRecord
where
    I: IntoIterator<Item = (String, L, R)>,
    L: PartialEq<R> + Display,
    R: Display,
{
    let witness = first_case(cases);
    record(name, dims, witness.is_none(), witness)
}

fn identity_record<T: Scalar + Display>(name: &str, dims: Dims, m: &Matrix<T>) -> CheckRecord {
    matrix_record(name, dims, &m.compare(&Matrix::identity(m.dim())))
}

fn one_parameter(dims: Dims) -> Vec<CheckRecord> {
    let s = s_matrix(dims);
    let det = triangular_determinant(&s);
    vec![
        matrix_record(
            "closed-form",
            dims,
            &s.compare(&s_matrix_closed_form(dims, &Polynomial::x())),
        ),
        matrix_record("one-parameter", dims, &verify_one_parameter(dims)),
        identity_record("inverse", dims, &inverse_product(dims)),
        record(
            "determinant",
            dims,
            det.as_ref().is_some_and(Polynomial::is_one),
            Some(Witness::case(
                "det S(x)",
                det.map_or_else(|| "not triangular".to_string(), |d| d.to_string()),
                1,
            )),
        ),
        case_record(
            "gould",
            dims,
            (0..=GOULD_MAX).map(|n| {
                let (l, r) = gould_sides(n);
                (format!("n={n}"), l, r)
            }),
        ),
        case_record(
            "shifted-gould",
            dims,
            (1..=GOULD_MAX).flat_map(|p| {
                (1..=p).map(move |q| {
                    let (l, r) = shifted_gould_sides(p, q).expect("1 <= q <= p");
                    (format!("p={p}, q={q}"), l, r)
                })
            }),
        ),
    ]
}

fn digital_binomial(dims: Dims) -> Vec<CheckRecord> {
    let base = dims.base();
    let range = 0..dims.dim() as u64;
    vec![
        case_record(
            "digital-binomial",
            dims,
            range.clone().map(|n| {
                let (l, r) = digital_binomial_sides(n, base);
                (format!("n={n}"), l, r)
            }),
        ),
        case_record(
            "multiplicity-form",
            dims,
            range.map(|n| {
                let (l, r) = multiplicity_identity_sides(n, base);
                (format!("n={n}"), l, r)
            }),
        ),
    ]
}

fn exp(dims: Dims) -> Result<Vec<CheckRecord>> {
    let x = x_matrix(dims);
    let bound = nilpotency_bound(dims);
    let exp = matrix_exp_nilpotent(&x, bound)?;
    let top = x.pow(bound);
    let nilpotent = !top.is_zero() && top.mul(&x).is_zero();
    let mut powers = Vec::new();
    for n in 1..=dims.base().max_digit() {
        powers.push((n, x_power_entry_check(dims.base(), n)?));
    }
    let bad_power = powers.iter().find(|(_, ok)| !ok);
    Ok(vec![
        matrix_record("exp-generator", dims, &exp.compare(&s_matrix(dims))),
        record(
            "nilpotency",
            dims,
            nilpotent,
            Some(Witness::case(
                format!("X^{bound} nonzero, X^{} zero", bound + 1),
                format!("{}, {}", !top.is_zero(), top.mul(&x).is_zero()),
                "true, true",
            )),
        ),
        record(
            "generator-powers",
            dims,
            bad_power.is_none(),
            bad_power.map(|(n, _)| Witness::case(format!("n={n}"), "power", "formula")),
        ),
    ])
}

fn stirling(dims: Dims) -> Result<Vec<CheckRecord>> {
    let mut cases = Vec::new();
    for l in 1..=STIRLING_MAX {
        for n in 1..=l {
            let (lhs, rhs) = stirling_identity_sides(l, n)?;
            cases.push((format!("l={l}, n={n}"), lhs, rhs));
        }
    }
    Ok(vec![case_record("stirling", dims, cases)])
}

fn vector_label(i: usize, a: &ZeroSumVector) -> String {
    let entries: Vec<String> = a.entries().iter().map(ToString::to_string).collect();
    format!("A[{i}]=({})", entries.join(", "))
}

fn factorization(dims: Dims, zero_sums: &[ZeroSumVector]) -> Result<Vec<CheckRecord>> {
    if zero_sums.is_empty() {
        return Err(Error::InvalidArgument(
            "the factorization suite needs at least one zero-sum vector".into(),
        ));
    }
    let base = dims.base();
    let mut routes = Vec::new();
    let mut products = Vec::new();
    let mut top_digits = Vec::new();
    let mut at_one = Vec::new();
    let mut corollary = Vec::new();
    for (i, a) in zero_sums.iter().enumerate() {
        let label = vector_label(i, a);
        let by_formula = coefficients_by_formula(dims, a)?;
        let by_matrix = coefficients_by_matrix(dims, a)?;
        for (n, (l, r)) in by_formula.iter().zip(&by_matrix).enumerate() {
            routes.push((format!("{label}, n={n}"), l.clone(), r.clone()));
        }
        let f = factorize(dims, a)?;
        for n in 0..dims.dim() {
            products.push((format!("{label}, n={n}"), f.f.coeff(n), f.product.coeff(n)));
        }
        for (n, c) in by_formula.iter().enumerate() {
            if has_top_digit(n as u64, base) {
                top_digits.push((format!("{label}, n={n}"), c.clone(), Zero::zero()));
            }
        }
        for (m, d) in derivatives_at_one(dims, a)?.into_iter().enumerate() {
            at_one.push((format!("{label}, F^({m})(1)"), d, Zero::zero()));
        }
        if base == Base::TERNARY {
            let end = BASE3_RANGE.max(dims.dim() as u64);
            for n in (0..end).filter(|&n| !to_digits(n, base).digits().contains(&2)) {
                let (l, r) = base3_corollary_sides(n, a)?;
                corollary.push((format!("{label}, n={n}"), l, r));
            }
        }
    }
    let mut out = vec![
        identity_record("m-inverse", dims, &m_matrix(dims).mul(&s_int(dims))),
        case_record("coefficient-routes", dims, routes),
        case_record("factorization", dims, products),
        case_record::<_, Rational, Rational>("top-digit-zeros", dims, top_digits),
        case_record::<_, Rational, Rational>("zero-at-one", dims, at_one),
    ];
    if base == Base::TERNARY {
        out.push(case_record("base3-corollary", dims, corollary));
    }
    Ok(out)
}

fn relations(dims: Dims) -> Vec<CheckRecord> {
    let u = u_matrix(dims);
    let v = v_matrix(dims);
    let braid = braid_check(dims);
    let binary = dims.b() == 2;
    let mut out = vec![
        matrix_record("u-kronecker", dims, &u.compare(&u_matrix_kron(dims))),
        matrix_record("v-kronecker", dims, &v.compare(&v_matrix_kron(dims))),
        matrix_record("skew-transpose", dims, &v.compare(&u.skew_transpose())),
        record("power-relation", dims, power_relation_check(dims), None),
        record(
            "eigen-annihilation",
            dims,
            eigen_poly_annihilation_check(dims.base()),
            None,
        ),
        CheckRecord::new(
            "braid",
            dims.b(),
            dims.depth(),
            Status::from_outcome(braid.holds(), binary),
            braid.comparison.witness.as_ref().map(Witness::entry),
        ),
    ];
    if binary {
        out.push(record("braid-square", dims, braid_square_check(dims), None));
    }
    out
}

fn prouhet(dims: Dims, cap: usize) -> Result<Vec<CheckRecord>> {
    let partition = prouhet_partition(dims.base(), dims.depth(), cap)?;
    let sums = partition.power_sums(partition.degree());
    let witness = sums.iter().enumerate().find_map(|(m, row)| {
        row.windows(2)
            .find(|w| w[0] != w[1])
            .map(|w| Witness::case(format!("m={m}"), &w[0], &w[1]))
    });
    Ok(vec![record(
        "prouhet-power-sums",
        dims,
        witness.is_none(),
        witness,
    )])
}
