//! Both sides of the digital binomial theorem for every `n < b^3`.

use digital_binomial::digits::{digit_sum, dominated_set, to_digits};
use digital_binomial::sierpinski::{digital_binomial_sides, multiplicity_identity_sides};
use digital_binomial::Base;

fn main() -> digital_binomial::Result<()> {
    let base = Base::new(3)?;
    for n in [5, 8, 13] {
        let (lhs, rhs) = digital_binomial_sides(n, base);
        println!(
            "n={n} digits {:?} dominates {:?}",
            to_digits(n, base).digits(),
            dominated_set(n, base)
        );
        println!("  lhs = {lhs}");
        println!("  rhs = {rhs}");
    }

    let mut checked = 0;
    for b in 2..=4 {
        let base = Base::new(b)?;
        for n in 0..(b as u64).pow(3) {
            let (l, r) = digital_binomial_sides(n, base);
            let (ml, mr) = multiplicity_identity_sides(n, base);
            assert!(l == r && ml == mr && l == ml, "b={b} n={n}");
            checked += 1;
        }
    }
    println!("{checked} cases hold");

    // In base 2 both sides collapse to (x+y)^s(n).
    let (lhs, _) = digital_binomial_sides(11, Base::BINARY);
    println!("b=2, n=11, s(n)={}: {lhs}", digit_sum(11, Base::BINARY));
    Ok(())
}
