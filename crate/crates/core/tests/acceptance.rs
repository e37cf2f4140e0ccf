//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on failure.
//!
//! Each criterion runs under a wall-clock budget; exceeding it counts as a
//! failure. Where cheap, results are cross-checked against oracles written
//! here from first principles rather than through the library.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use digital_binomial::digits::Base;
use digital_binomial::exactpoly::{int, ratio, Polynomial, Rational};
use digital_binomial::matrix::{Dims, PolyMatrix, RationalMatrix};
use digital_binomial::ptm::{
    braid_check, braid_square_check, coefficients_by_formula, coefficients_by_matrix,
    derivatives_at_one, eigen_poly_annihilation_check, factorize, has_top_digit, m_matrix,
    power_relation_check, prouhet_partition, s_int, u_matrix, u_matrix_kron, v_matrix,
    ZeroSumVector,
};
use digital_binomial::random::{seeded_vectors, seeded_zero_sums};
use digital_binomial::sierpinski::{
    digital_binomial_sides, gould_check, matrix_exp_nilpotent, multiplicity_identity_sides,
    nilpotency_bound, s_base, s_entry, s_matrix, s_matrix_closed_form, shifted_gould_check,
    stirling_identity_check, stirling_row, verify_one_parameter, x_matrix, x_power_entry_check,
    KroneckerChain,
};
use num_bigint::BigUint;
use num_traits::{One, Zero};

type Outcome = Result<String, String>;

/// Name, time budget in seconds, and the check itself.
type Criterion = (&'static str, u64, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn dims(b: u32, n: u32) -> Dims {
    Dims::new(b, n).expect("valid dims")
}

/// `(b, N)` with `b ∈ 2..=5`, `N ∈ 1..=3`, `b^N ≤ 125`.
fn small_range() -> Vec<(u32, u32)> {
    let mut out = Vec::new();
    for b in 2..=5u32 {
        for n in 1..=3 {
            if b.pow(n) <= 125 {
                out.push((b, n));
            }
        }
    }
    out
}

fn base_digits(mut n: u64, b: u64) -> Vec<u64> {
    let mut d = Vec::new();
    while n > 0 {
        d.push(n % b);
        n /= b;
    }
    d
}

fn oracle_digit_sum(n: u64, b: u64) -> u64 {
    base_digits(n, b).iter().sum()
}

// Printed matrices, transcribed from the displays they reproduce.

const S2: &str = "
1 0 0 0
x 1 0 0
x 0 1 0
x^2 x x 1";

const S3: &str = "
1 0 0 0 0 0 0 0
x 1 0 0 0 0 0 0
x 0 1 0 0 0 0 0
x^2 x x 1 0 0 0 0
x 0 0 0 1 0 0 0
x^2 x 0 0 x 1 0 0
x^2 0 x 0 x 0 1 0
x^3 x^2 x^2 x x^2 x x 1";

// `a` is C(x,1) and `c` is C(x+1,2); adjacent letters multiply.
const S31: &str = "
1 0 0
a 1 0
c a 1";

const S32: &str = "
1 0 0 0 0 0 0 0 0
a 1 0 0 0 0 0 0 0
c a 1 0 0 0 0 0 0
a 0 0 1 0 0 0 0 0
aa a 0 a 1 0 0 0 0
ac aa a c a 1 0 0 0
c 0 0 a 0 0 1 0 0
ca c 0 aa a 0 a 1 0
cc ca c ac aa a c a 1";

const U1: &str = "
1 -1
1 0";

const U2: &str = "
1 -1 -1 1
1 0 -1 0
1 -1 0 0
1 0 0 0";

const U3: &str = "
1 -1 -1 1 -1 1 1 -1
1 0 -1 0 -1 0 1 0
1 -1 0 0 -1 1 0 0
1 0 0 0 -1 0 0 0
1 -1 -1 1 0 0 0 0
1 0 -1 0 0 0 0 0
1 -1 0 0 0 0 0 0
1 0 0 0 0 0 0 0";

const V1: &str = "
0 -1
1 1";

const V2: &str = "
0 0 0 1
0 0 -1 -1
0 -1 0 -1
1 1 1 1";

const V3: &str = "
0 0 0 0 0 0 0 -1
0 0 0 0 0 0 1 1
0 0 0 0 0 1 0 1
0 0 0 0 -1 -1 -1 -1
0 0 0 1 0 0 0 1
0 0 -1 -1 0 0 -1 -1
0 -1 0 -1 0 -1 0 -1
1 1 1 1 1 1 1 1";

fn grid(text: &str) -> Vec<Vec<&str>> {
    text.lines()
        .filter(|l| !l.trim().is_empty())
        .map(|l| l.split_whitespace().collect())
        .collect()
}

fn poly_cell(cell: &str) -> Polynomial {
    let x = Polynomial::x();
    match cell {
        "0" => Polynomial::zero(),
        "1" => Polynomial::one(),
        "x" => x,
        _ if cell.starts_with("x^") => x.pow(cell[2..].parse().expect("exponent")),
        _ => {
            // C(x,1) = x and C(x+1,2) = (x² + x)/2.
            let half = ratio(1, 2);
            let c = (&x.pow(2) + &x).scale(&half);
            cell.chars().fold(Polynomial::one(), |acc, ch| match ch {
                'a' => &acc * &x,
                'c' => &acc * &c,
                _ => panic!("unknown cell {cell}"),
            })
        }
    }
}

fn poly_grid(text: &str) -> PolyMatrix {
    let rows = grid(text)
        .into_iter()
        .map(|r| r.into_iter().map(poly_cell).collect())
        .collect();
    PolyMatrix::from_rows(rows).expect("square")
}

fn int_grid(text: &str) -> RationalMatrix {
    let rows = grid(text)
        .into_iter()
        .map(|r| {
            r.into_iter()
                .map(|c| int(c.parse().expect("integer")))
                .collect()
        })
        .collect();
    RationalMatrix::from_rows(rows).expect("square")
}

fn printed_matrices() -> Outcome {
    let poly_cases = [
        ("S_2", s_matrix(dims(2, 2)), S2),
        ("S_3", s_matrix(dims(2, 3)), S3),
        ("S_{3,1}", s_base(Base::TERNARY), S31),
        ("S_{3,2}", s_matrix(dims(3, 2)), S32),
    ];
    for (name, got, text) in &poly_cases {
        let want = poly_grid(text);
        ensure(got == &want, || {
            format!("{name}: {:?}", got.first_mismatch(&want))
        })?;
    }
    let int_cases = [
        ("U_1", u_matrix(dims(2, 1)), U1),
        ("U_2", u_matrix(dims(2, 2)), U2),
        ("U_3", u_matrix(dims(2, 3)), U3),
        ("V_1", v_matrix(dims(2, 1)), V1),
        ("V_2", v_matrix(dims(2, 2)), V2),
        ("V_3", v_matrix(dims(2, 3)), V3),
    ];
    for (name, got, text) in &int_cases {
        let want = int_grid(text);
        ensure(got == &want, || {
            format!("{name}: {:?}", got.first_mismatch(&want))
        })?;
    }
    ensure(u_matrix_kron(dims(2, 3)) == int_grid(U3), || {
        "U_3 via Kronecker powers".into()
    })?;
    Ok("10 matrices match entry for entry".into())
}

fn closed_form() -> Outcome {
    let mut entries = 0usize;
    for (b, n) in small_range() {
        let d = dims(b, n);
        let built = s_matrix(d);
        for j in 0..d.dim() {
            for k in 0..d.dim() {
                let e = s_entry(d, j, k).map_err(|e| e.to_string())?;
                ensure(&e == built.get(j, k), || {
                    format!("b={b} N={n} ({j},{k}): {e} vs {}", built.get(j, k))
                })?;
                entries += 1;
            }
        }
    }
    Ok(format!(
        "{entries} entries over {} (b,N) pairs",
        small_range().len()
    ))
}

fn one_parameter() -> Outcome {
    for (b, n) in small_range() {
        let cmp = verify_one_parameter(dims(b, n));
        ensure(cmp.holds(), || format!("b={b} N={n}: {:?}", cmp.witness))?;
    }
    let d = dims(2, 2);
    let sum = &Polynomial::x() + &Polynomial::y();
    let square = sum.pow(2);
    let product = s_matrix(d).mul(&s_matrix(d).map(|p| p.swap_vars()));
    ensure(product.get(3, 0) == &square, || {
        format!("S(x)S(y) (3,0) = {}", product.get(3, 0))
    })?;
    ensure(s_matrix_closed_form(d, &sum).get(3, 0) == &square, || {
        "S(x+y) (3,0) entry".into()
    })?;
    Ok(format!(
        "S(x)S(y) = S(x+y) symbolically for {} (b,N) pairs; 4x4 (3,0) entry is (x+y)^2",
        small_range().len()
    ))
}

fn digital_binomial() -> Outcome {
    let mut count = 0;
    for b in 2..=4u32 {
        let base = Base::new(b).unwrap();
        for n in 0..(b as u64).pow(3) {
            let (l, r) = digital_binomial_sides(n, base);
            ensure(l == r, || format!("b={b} n={n}: {l} vs {r}"))?;
            let (ml, mr) = multiplicity_identity_sides(n, base);
            ensure(ml == mr, || format!("multiplicity b={b} n={n}"))?;
            ensure(l == ml, || format!("forms disagree b={b} n={n}"))?;
            if b == 2 {
                let expected =
                    (&Polynomial::x() + &Polynomial::y()).pow(oracle_digit_sum(n, 2) as u32);
                ensure(l == expected, || format!("binary n={n}: {l}"))?;
            }
            count += 1;
        }
    }
    Ok(format!(
        "{count} values of n, both forms; binary case is (x+y)^s(n)"
    ))
}

fn binom_u128(n: u128, k: u128) -> u128 {
    if k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

fn gould() -> Outcome {
    for n in 0..=8 {
        ensure(gould_check(n), || format!("gould n={n}"))?;
    }
    let mut shifted = 0;
    for p in 1..=8 {
        for q in 1..=p {
            ensure(shifted_gould_check(p, q) == Ok(true), || {
                format!("shifted p={p} q={q}")
            })?;
            shifted += 1;
        }
    }
    // Oracle at nonnegative integer points.
    for x in 0..6u128 {
        for y in 0..6u128 {
            for n in 0..=8u128 {
                let lhs: u128 = (0..=n)
                    .map(|k| binom_u128(x + k, k) * binom_u128(y + n - k, n - k))
                    .sum();
                ensure(lhs == binom_u128(x + y + n + 1, n), || {
                    format!("oracle x={x} y={y} n={n}")
                })?;
            }
        }
    }
    Ok(format!("gould n<=8 and {shifted} shifted (p,q) pairs"))
}

fn generator() -> Outcome {
    for l in 1..=12 {
        for n in 1..=l {
            ensure(stirling_identity_check(l, n) == Ok(true), || {
                format!("stirling l={l} n={n}")
            })?;
        }
        // Oracle: coefficients of x(x+1)...(x+l-1).
        let mut rising = vec![BigUint::one()];
        for i in 0..l {
            let mut next = vec![BigUint::zero(); rising.len() + 1];
            for (k, c) in rising.iter().enumerate() {
                next[k + 1] += c;
                next[k] += c * BigUint::from(i);
            }
            rising = next;
        }
        ensure(stirling_row(l) == rising, || format!("stirling row {l}"))?;
    }
    for b in 2..=6 {
        let base = Base::new(b).unwrap();
        for n in 1..b {
            ensure(x_power_entry_check(base, n) == Ok(true), || {
                format!("X^{n} entries b={b}")
            })?;
        }
    }
    let mut exps = 0;
    for b in 2..=4 {
        for n in 1..=3 {
            let d = dims(b, n);
            let e = matrix_exp_nilpotent(&x_matrix(d), nilpotency_bound(d))
                .map_err(|e| e.to_string())?;
            ensure(e == s_matrix(d), || format!("exp b={b} N={n}"))?;
            exps += 1;
        }
    }
    Ok(format!(
        "stirling l<=12, X^n entries b<=6, exp(X)=S for {exps} (b,N) pairs"
    ))
}

/// Oracle: `F_N` from digit sums, `c_n` from dominated digit tuples, and the
/// product `P_N · ∏(1 − x^{b^m})` by plain convolution.
fn ptm_oracle(b: u64, depth: u32, a: &[Rational]) -> (Vec<Rational>, Vec<Rational>, Vec<Rational>) {
    let dim = b.pow(depth) as usize;
    let f: Vec<Rational> = (0..dim as u64)
        .map(|n| a[(oracle_digit_sum(n, b) % b) as usize].clone())
        .collect();
    let c: Vec<Rational> = (0..dim as u64)
        .map(|n| {
            let dn = base_digits(n, b);
            (0..=n)
                .filter(|&k| {
                    let dk = base_digits(k, b);
                    dk.len() <= dn.len() && dk.iter().zip(&dn).all(|(x, y)| x <= y)
                })
                .map(|k| f[k as usize].clone())
                .sum()
        })
        .collect();
    let mut product = c.clone();
    for m in 0..depth {
        let shift = b.pow(m) as usize;
        let mut next = product.clone();
        next.resize(product.len() + shift, Rational::zero());
        for (i, v) in product.iter().enumerate() {
            next[i + shift] -= v;
        }
        product = next;
    }
    (f, c, product)
}

fn ptm_suite() -> Outcome {
    let mut vectors = 0;
    for b in 2..=4u32 {
        let base = Base::new(b).unwrap();
        let zero_sums = seeded_zero_sums(base, 20, 2024 + b as u64);
        for n in 1..=3 {
            let d = dims(b, n);
            ensure(m_matrix(d).mul(&s_int(d)).is_identity(), || {
                format!("M S != I at b={b} N={n}")
            })?;
            for a in &zero_sums {
                let ctx = || format!("b={b} N={n} A={:?}", a.entries());
                let by_formula = coefficients_by_formula(d, a).map_err(|e| e.to_string())?;
                let by_matrix = coefficients_by_matrix(d, a).map_err(|e| e.to_string())?;
                ensure(by_formula == by_matrix, || format!("c routes {}", ctx()))?;
                for (i, c) in by_formula.iter().enumerate() {
                    if has_top_digit(i as u64, base) {
                        ensure(c.is_zero(), || format!("c_{i} nonzero {}", ctx()))?;
                    }
                }
                let fact = factorize(d, a).map_err(|e| e.to_string())?;
                ensure(fact.holds(), || format!("factorization {}", ctx()))?;
                let (f, c, product) = ptm_oracle(b as u64, n, a.entries());
                ensure(
                    (0..product.len())
                        .all(|i| fact.f.coeff(i) == *f.get(i).unwrap_or(&Rational::zero())),
                    || format!("F oracle {}", ctx()),
                )?;
                ensure(c == by_formula, || format!("c oracle {}", ctx()))?;
                ensure(
                    product
                        .iter()
                        .enumerate()
                        .all(|(i, v)| fact.product.coeff(i) == *v),
                    || format!("product oracle {}", ctx()),
                )?;
                let ders = derivatives_at_one(d, a).map_err(|e| e.to_string())?;
                ensure(
                    ders.len() == n as usize && ders.iter().all(Zero::is_zero),
                    || format!("derivatives at 1 {}", ctx()),
                )?;
                vectors += 1;
            }
        }
        if b == 3 {
            for a in &zero_sums {
                base3_corollary(a)?;
            }
        }
    }
    Ok(format!(
        "{vectors} (vector, b, N) cases with b<=4, N<=3; base-3 closed form n<27"
    ))
}

fn base3_corollary(a: &ZeroSumVector) -> Result<(), String> {
    let d = dims(3, 3);
    let c = coefficients_by_formula(d, a).map_err(|e| e.to_string())?;
    for n in 0..27u64 {
        let digits = base_digits(n, 3);
        if digits.contains(&2) {
            continue;
        }
        let w = digits.iter().sum::<u64>() % 2;
        let idx = (oracle_digit_sum(2 * n, 3) % 3) as usize;
        let mut rhs = a.entries()[idx].clone();
        if w == 1 {
            rhs = -rhs;
        }
        ensure(c[n as usize] == rhs, || {
            format!("base-3 n={n} A={:?}", a.entries())
        })?;
        ensure(
            digital_binomial::ptm::base3_corollary_check(n, a) == Ok(true),
            || format!("library base-3 n={n}"),
        )?;
    }
    Ok(())
}

fn prouhet() -> Outcome {
    let pairs = [(2, 1), (2, 2), (2, 3), (3, 1), (3, 2), (4, 1)];
    for (b, m) in pairs {
        let part = prouhet_partition(Base::new(b).unwrap(), m, 4096).map_err(|e| e.to_string())?;
        ensure(part.has_equal_power_sums(), || format!("b={b} M={m}"))?;
        let total: usize = part.classes().iter().map(Vec::len).sum();
        ensure(total == (b as usize).pow(m + 1), || {
            format!("size b={b} M={m}")
        })?;
        for e in 0..=m {
            let sums: Vec<BigUint> = part
                .classes()
                .iter()
                .map(|cl| cl.iter().map(|&v| BigUint::from(v).pow(e)).sum())
                .collect();
            ensure(sums.windows(2).all(|w| w[0] == w[1]), || {
                format!("oracle b={b} M={m} e={e}")
            })?;
        }
    }
    Ok(format!("{} (b,M) pairs with equal power sums", pairs.len()))
}

fn relations() -> Outcome {
    for b in 2..=4 {
        for n in 1..=3 {
            ensure(power_relation_check(dims(b, n)), || {
                format!("power relation b={b} N={n}")
            })?;
        }
        ensure(eigen_poly_annihilation_check(Base::new(b).unwrap()), || {
            format!("p(U_1) b={b}")
        })?;
    }
    for n in 1..=3 {
        ensure(braid_check(dims(2, n)).holds(), || {
            format!("braid b=2 N={n}")
        })?;
        ensure(braid_square_check(dims(2, n)), || format!("Q^2 b=2 N={n}"))?;
    }
    let mut witnesses = Vec::new();
    for b in [3, 4] {
        let check = braid_check(dims(b, 1));
        let w = check
            .comparison
            .witness
            .as_ref()
            .ok_or_else(|| format!("braid unexpectedly holds at b={b}"))?;
        ensure(
            check.q.get(w.row, w.col) == &w.lhs
                && check.r.get(w.row, w.col) == &w.rhs
                && w.lhs != w.rhs,
            || format!("bad witness b={b}"),
        )?;
        witnesses.push(format!(
            "b={b} at ({},{}): {} vs {}",
            w.row, w.col, w.lhs, w.rhs
        ));
    }
    Ok(format!("braid fails {}", witnesses.join("; ")))
}

fn performance() -> Outcome {
    let d = dims(2, 10);
    let one = int(1);
    let vectors = seeded_vectors(d.dim(), 100, 10);

    let start = Instant::now();
    let dense = s_base(Base::BINARY)
        .eval(&one, &int(0))
        .kronecker_power(d.depth());
    let mut dense_out = Vec::with_capacity(vectors.len());
    for v in &vectors {
        dense_out.push(dense.mul_vec(v).map_err(|e| e.to_string())?);
    }
    let dense_time = start.elapsed();

    let start = Instant::now();
    let chain = KroneckerChain::sierpinski(d, &one);
    let mut fast_out = Vec::with_capacity(vectors.len());
    for v in &vectors {
        fast_out.push(chain.apply(v).map_err(|e| e.to_string())?);
    }
    let fast_time = start.elapsed();

    ensure(dense_out == fast_out, || {
        "structured and dense results differ".into()
    })?;
    let speedup = dense_time.as_secs_f64() / fast_time.as_secs_f64().max(1e-9);
    ensure(speedup >= 5.0, || {
        format!("speedup {speedup:.1}x ({dense_time:?} dense vs {fast_time:?} structured)")
    })?;
    Ok(format!(
        "100 vectors agree; {speedup:.1}x faster ({dense_time:.2?} dense vs {fast_time:.2?} structured)"
    ))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("printed matrices", 1, printed_matrices),
        ("closed form matches Kronecker recursion", 10, closed_form),
        ("one-parameter law", 60, one_parameter),
        ("digital binomial theorem", 30, digital_binomial),
        ("Gould and shifted convolutions", 5, gould),
        ("generator suite", 30, generator),
        ("PTM factorization suite", 60, ptm_suite),
        ("Prouhet-Tarry-Escott partitions", 5, prouhet),
        ("U/V and braid relations", 10, relations),
        ("structured apply performance", 30, performance),
    ];
    let mut failures = 0;
    for (i, (name, budget, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = check();
        let elapsed = start.elapsed();
        let result = match result {
            Ok(detail) if elapsed > Duration::from_secs(*budget) => {
                Err(format!("{detail}; over the {budget}s budget"))
            }
            other => other,
        };
        let (tag, detail) = match &result {
            Ok(d) => ("PASS", d),
            Err(d) => ("FAIL", d),
        };
        if result.is_err() {
            failures += 1;
        }
        println!(
            "{tag} [{:>2}] {name} ({:.2}s / {budget}s): {detail}",
            i + 1,
            elapsed.as_secs_f64()
        );
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failures,
        criteria.len()
    );
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
