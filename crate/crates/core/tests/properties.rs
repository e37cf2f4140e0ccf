use digital_binomial::digits::{carry_free, digit_sum, dominates, ptm, to_digits, Base};
use digital_binomial::exactpoly::{ratio, Polynomial, Rational};
use digital_binomial::matrix::Dims;
use digital_binomial::sierpinski::{s_matrix, s_matrix_with};
use proptest::prelude::*;

fn rational() -> impl Strategy<Value = Rational> {
    (-30i64..=30, 1i64..=9).prop_map(|(n, d)| ratio(n, d))
}

fn polynomial() -> impl Strategy<Value = Polynomial> {
    prop::collection::vec(((0u32..4, 0u32..4), rational()), 0..6).prop_map(Polynomial::from_terms)
}

proptest! {
    #[test]
    fn ring_axioms(a in polynomial(), b in polynomial(), c in polynomial()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a + &Polynomial::zero(), a.clone());
        prop_assert_eq!(&a * &Polynomial::one(), a.clone());
        prop_assert!((&a - &a).is_zero());
    }

    #[test]
    fn evaluation_is_a_homomorphism(a in polynomial(), b in polynomial(), x0 in rational(), y0 in rational()) {
        prop_assert_eq!((&a + &b).eval(&x0, &y0), a.eval(&x0, &y0) + b.eval(&x0, &y0));
        prop_assert_eq!((&a * &b).eval(&x0, &y0), a.eval(&x0, &y0) * b.eval(&x0, &y0));
    }

    #[test]
    fn carry_free_iff_digit_sums_add(j in 0u64..5000, k in 0u64..5000, b in 2u32..7) {
        let base = Base::new(b).unwrap();
        let additive = digit_sum(j, base) + digit_sum(k, base) == digit_sum(j + k, base);
        prop_assert_eq!(carry_free(j, k, base), additive);
        prop_assert_eq!(dominates(j, j + k, base), additive);
    }

    #[test]
    fn digits_round_trip(n in 0u64..1_000_000, b in 2u32..11) {
        let base = Base::new(b).unwrap();
        let e = to_digits(n, base);
        prop_assert_eq!(e.value(), n);
        prop_assert!(e.digits().iter().all(|&d| d < b));
        prop_assert_eq!(ptm(n, base) as u64, digit_sum(n, base) % b as u64);
    }

    #[test]
    fn sierpinski_at_a_point_is_a_group_law(x0 in rational(), y0 in rational(), b in 2u32..4, n in 1u32..3) {
        let d = Dims::new(b, n).unwrap();
        let zero = ratio(0, 1);
        let s = s_matrix(d);
        let lhs = s.eval(&x0, &zero).mul(&s.eval(&y0, &zero));
        let rhs = s_matrix_with(d, &Polynomial::constant(&x0 + &y0)).eval(&zero, &zero);
        prop_assert_eq!(lhs, rhs);
    }
}
