//! Factors a Prouhet-Thue-Morse polynomial as `P_N(x)·∏(1 − x^{b^m})`.
//!
//! cargo run --example ptm_factorization -- 3 2 1,1,-2

use digital_binomial::exactpoly::{int, parse_rational};
use digital_binomial::ptm::{coefficients_by_matrix, derivatives_at_one, factorize, ZeroSumVector};
use digital_binomial::Dims;

fn main() -> digital_binomial::Result<()> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let base: u32 = args.first().map_or(3, |a| a.parse().expect("integer"));
    let depth: u32 = args.get(1).map_or(2, |a| a.parse().expect("integer"));
    let entries = match args.get(2) {
        Some(list) => list
            .split(',')
            .map(parse_rational)
            .collect::<Result<Vec<_>, _>>()?,
        None => {
            let mut v = vec![int(1); base as usize - 1];
            v.push(int(1 - base as i64));
            v
        }
    };
    let a = ZeroSumVector::new(entries)?;
    let dims = Dims::new(base, depth)?;

    let fact = factorize(dims, &a)?;
    println!("F = {:?}", fact.f);
    println!("P = {:?}", fact.p);
    println!("P·∏(1 − x^(b^m)) == F: {}", fact.holds());
    let c: Vec<String> = coefficients_by_matrix(dims, &a)?
        .iter()
        .map(ToString::to_string)
        .collect();
    println!("c = S a = [{}]", c.join(", "));
    println!(
        "F^(m)(1) for m < N: {:?}",
        derivatives_at_one(dims, &a)?
            .iter()
            .map(ToString::to_string)
            .collect::<Vec<_>>()
    );
    Ok(())
}
