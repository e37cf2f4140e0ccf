//! Polynomial identities behind the group law: the digital binomial theorem,
//! its multiplicity form, the two Gould convolutions, and Stirling numbers.

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::digits::{dominated_set, multiplicity, to_digits, Base};
use crate::error::{Error, Result};
use crate::exactpoly::{binom_rising, Polynomial, Rational};

fn x_plus_y() -> Polynomial {
    &Polynomial::x() + &Polynomial::y()
}

fn digit_product(digits: &[u32], arg: &Polynomial) -> Polynomial {
    digits
        .iter()
        .filter(|&&d| d > 0)
        .fold(Polynomial::one(), |acc, &d| &acc * &binom_rising(d, arg))
}

/// Both sides of the base-b digital binomial theorem for `n`:
/// `∏ C(x+y+d_i(n)−1, d_i(n))` and
/// `Σ_{m ⪯ n} ∏ C(x+d_i(m)−1, d_i(m)) · ∏ C(y+d_i(n−m)−1, d_i(n−m))`.
pub fn digital_binomial_sides(n: u64, base: Base) -> (Polynomial, Polynomial) {
    let expansion = to_digits(n, base);
    let len = expansion.len();
    let lhs = digit_product(expansion.digits(), &x_plus_y());

    let (x, y) = (Polynomial::x(), Polynomial::y());
    let mut rhs = Polynomial::zero();
    for m in dominated_set(n, base) {
        let left = digit_product(&to_digits(m, base).padded(len), &x);
        let right = digit_product(&to_digits(n - m, base).padded(len), &y);
        rhs += &left * &right;
    }
    (lhs, rhs)
}

/// Both sides of the digit-multiplicity form of the theorem. The left product
/// runs over `j = 0..b`; its `j = 0` factor is the constant 1.
pub fn multiplicity_identity_sides(n: u64, base: Base) -> (Polynomial, Polynomial) {
    let b = base.get();
    let counts = |v: u64| -> Vec<u32> {
        (1..b)
            .map(|j| multiplicity(v, j, base).expect("digit in 1..b") as u32)
            .collect()
    };
    let grouped = |mults: &[u32], arg: &Polynomial| -> Polynomial {
        (1..b).zip(mults).fold(Polynomial::one(), |acc, (j, &mu)| {
            &acc * &binom_rising(j, arg).pow(mu)
        })
    };

    let lhs = &binom_rising(0, &x_plus_y()) * &grouped(&counts(n), &x_plus_y());
    let (x, y) = (Polynomial::x(), Polynomial::y());
    let mut rhs = Polynomial::zero();
    for m in dominated_set(n, base) {
        rhs += &grouped(&counts(m), &x) * &grouped(&counts(n - m), &y);
    }
    (lhs, rhs)
}

/// `Σ_{k=0}^{n} C(x+k, k)·C(y+n−k, n−k)` and `C(x+y+n+1, n)` as polynomials.
pub fn gould_sides(n: u32) -> (Polynomial, Polynomial) {
    let one = Polynomial::one();
    let x1 = &Polynomial::x() + &one;
    let y1 = &Polynomial::y() + &one;
    let lhs = (0..=n).fold(Polynomial::zero(), |acc, k| {
        acc + &binom_rising(k, &x1) * &binom_rising(n - k, &y1)
    });
    let rhs = binom_rising(n, &(&x_plus_y() + &Polynomial::from(2)));
    (lhs, rhs)
}

pub fn gould_check(n: u32) -> bool {
    let (lhs, rhs) = gould_sides(n);
    lhs == rhs
}

/// Gould's convolution evaluated at a rational point.
pub fn gould_check_at(x0: &Rational, y0: &Rational, n: u32) -> bool {
    let (lhs, rhs) = gould_sides(n);
    lhs.eval(x0, y0) == rhs.eval(x0, y0)
}

/// `Σ_{v=q}^{p} C(x+p−v−1, p−v)·C(y+v−q−1, v−q)` and `C(x+y+p−q−1, p−q)`.
pub fn shifted_gould_sides(p: u32, q: u32) -> Result<(Polynomial, Polynomial)> {
    if q < 1 || q > p {
        return Err(Error::InvalidArgument(format!(
            "shifted convolution needs 1 <= q <= p, got p={p}, q={q}"
        )));
    }
    let (x, y) = (Polynomial::x(), Polynomial::y());
    let lhs = (q..=p).fold(Polynomial::zero(), |acc, v| {
        acc + &binom_rising(p - v, &x) * &binom_rising(v - q, &y)
    });
    Ok((lhs, binom_rising(p - q, &x_plus_y())))
}

pub fn shifted_gould_check(p: u32, q: u32) -> Result<bool> {
    let (lhs, rhs) = shifted_gould_sides(p, q)?;
    Ok(lhs == rhs)
}

/// Row `n` of the unsigned Stirling numbers of the first kind, `c(n, 0..=n)`.
pub fn stirling_row(n: u32) -> Vec<BigUint> {
    let mut row = vec![BigUint::one()];
    for m in 1..=n {
        // c(m,k) = c(m−1,k−1) + (m−1)·c(m−1,k)
        let mut next = vec![BigUint::zero(); m as usize + 1];
        for (k, slot) in next.iter_mut().enumerate() {
            if k >= 1 {
                *slot += &row[k - 1];
            }
            if k < row.len() {
                *slot += &row[k] * BigUint::from(m - 1);
            }
        }
        row = next;
    }
    row
}

pub fn stirling_first(n: u32, k: u32) -> Result<BigUint> {
    if k > n {
        return Err(Error::InvalidArgument(format!(
            "stirling number c({n}, {k}) needs k <= n"
        )));
    }
    Ok(stirling_row(n).swap_remove(k as usize))
}

fn factorial_uint(n: u32) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, k| acc * BigUint::from(k))
}

fn binomial_uint(n: u32, k: u32) -> BigUint {
    factorial_uint(n) / (factorial_uint(k) * factorial_uint(n - k))
}

/// `Σ_{i=1}^{l−n+1} (i−1)!·C(l,i)·c(l−i, n−1)` and `n·c(l, n)`.
pub fn stirling_identity_sides(l: u32, n: u32) -> Result<(BigUint, BigUint)> {
    if n < 1 || n > l {
        return Err(Error::InvalidArgument(format!(
            "stirling identity needs 1 <= n <= l, got l={l}, n={n}"
        )));
    }
    let lhs = (1..=l - n + 1)
        .map(|i| factorial_uint(i - 1) * binomial_uint(l, i) * &stirling_row(l - i)[n as usize - 1])
        .sum();
    let rhs = BigUint::from(n) * &stirling_row(l)[n as usize];
    Ok((lhs, rhs))
}

pub fn stirling_identity_check(l: u32, n: u32) -> Result<bool> {
    let (lhs, rhs) = stirling_identity_sides(l, n)?;
    Ok(lhs == rhs)
}

pub(crate) fn biguint_to_rational(v: &BigUint) -> Rational {
    Rational::from_integer(v.clone().into())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::digits::digit_sum;
    use crate::exactpoly::{factorial, int};

    fn b(n: u32) -> Base {
        Base::new(n).unwrap()
    }

    #[test]
    fn binary_digital_binomial_example() {
        let (lhs, rhs) = digital_binomial_sides(3, b(2));
        assert_eq!(lhs, x_plus_y().pow(2));
        assert_eq!(lhs, rhs);
        assert_eq!(dominated_set(3, b(2)).len(), 4);
    }

    #[test]
    fn digital_binomial_trivial_and_ternary() {
        let (lhs, rhs) = digital_binomial_sides(0, b(3));
        assert_eq!(lhs, Polynomial::one());
        assert_eq!(rhs, Polynomial::one());

        // n = 7 = 21₃: brute-force sum over m ≤ 7 with m ⪯ 7.
        let (lhs, rhs) = digital_binomial_sides(7, b(3));
        let (x, y) = (Polynomial::x(), Polynomial::y());
        let mut brute = Polynomial::zero();
        for m in 0..=7u64 {
            if !crate::digits::dominates(m, 7, b(3)) {
                continue;
            }
            let (dm, dr) = (
                to_digits(m, b(3)).padded(2),
                to_digits(7 - m, b(3)).padded(2),
            );
            let mut term = Polynomial::one();
            for i in 0..2 {
                term = &term * &binom_rising(dm[i], &x);
                term = &term * &binom_rising(dr[i], &y);
            }
            brute += term;
        }
        assert_eq!(rhs, brute);
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn binary_case_is_power_of_x_plus_y() {
        for n in 0..64 {
            let (lhs, rhs) = digital_binomial_sides(n, b(2));
            let expected = x_plus_y().pow(digit_sum(n, b(2)) as u32);
            assert_eq!(lhs, expected);
            assert_eq!(rhs, expected);
        }
    }

    #[test]
    fn multiplicity_form() {
        let (lhs, rhs) = multiplicity_identity_sides(4, b(3));
        assert_eq!(lhs, rhs);
        assert_eq!(lhs, digital_binomial_sides(4, b(3)).0);
        // 0b1011: digits distinct-or-not; binary reduces to (x+y)^{s(n)}
        let (lhs, rhs) = multiplicity_identity_sides(11, b(2));
        assert_eq!(lhs, x_plus_y().pow(3));
        assert_eq!(rhs, lhs);
        // 21₄ = 9 has distinct digits
        let (lhs, _) = multiplicity_identity_sides(9, b(4));
        assert_eq!(lhs, digital_binomial_sides(9, b(4)).0);
    }

    #[test]
    fn gould_examples() {
        let (lhs, rhs) = gould_sides(0);
        assert_eq!(
            (lhs.clone(), rhs.clone()),
            (Polynomial::one(), Polynomial::one())
        );
        let (lhs, rhs) = gould_sides(1);
        let expected = &x_plus_y() + &Polynomial::from(2);
        assert_eq!(lhs, expected);
        assert_eq!(rhs, expected);
        assert!(gould_check(4));
        assert!(gould_check_at(&int(3), &crate::exactpoly::ratio(-5, 7), 6));
    }

    #[test]
    fn shifted_gould_examples() {
        assert_eq!(
            shifted_gould_sides(3, 3).unwrap(),
            (Polynomial::one(), Polynomial::one())
        );
        let (lhs, rhs) = shifted_gould_sides(4, 3).unwrap();
        assert_eq!(lhs, x_plus_y());
        assert_eq!(rhs, x_plus_y());
        assert!(shifted_gould_check(5, 2).unwrap());
        assert!(shifted_gould_check(2, 5).is_err());
        assert!(shifted_gould_check(2, 0).is_err());
    }

    #[test]
    fn stirling_values() {
        assert_eq!(stirling_first(3, 1).unwrap(), BigUint::from(2u32));
        assert_eq!(stirling_first(4, 2).unwrap(), BigUint::from(11u32));
        for n in 0..10 {
            assert_eq!(stirling_first(n, n).unwrap(), BigUint::one());
        }
        assert_eq!(stirling_first(0, 0).unwrap(), BigUint::one());
        assert_eq!(stirling_first(5, 0).unwrap(), BigUint::zero());
        assert!(stirling_first(2, 3).is_err());
    }

    #[test]
    fn stirling_row_matches_rising_factorial_coefficients() {
        let x = Polynomial::x();
        for n in 0..=10u32 {
            let rising = binom_rising(n, &x).scale(&factorial(n));
            let row = stirling_row(n);
            for (k, c) in row.iter().enumerate() {
                assert_eq!(
                    rising.coeff(k as u32, 0),
                    biguint_to_rational(c),
                    "c({n},{k})"
                );
            }
        }
    }

    #[test]
    fn stirling_identity_examples() {
        assert_eq!(
            stirling_identity_sides(2, 2).unwrap(),
            (BigUint::from(2u32), BigUint::from(2u32))
        );
        assert_eq!(
            stirling_identity_sides(3, 1).unwrap(),
            (BigUint::from(2u32), BigUint::from(2u32))
        );
        assert!(stirling_identity_check(5, 2).unwrap());
        assert!(stirling_identity_check(2, 3).is_err());
        assert!(stirling_identity_check(2, 0).is_err());
    }
}
