//! Builds `S_{b,N}(x)` by Kronecker powers and from the closed-form entries.
//!
//! cargo run --example sierpinski_matrices -- 3 2

use digital_binomial::exactpoly::Polynomial;
use digital_binomial::sierpinski::{s_entry, s_matrix, s_matrix_closed_form};
use digital_binomial::Dims;

fn main() -> digital_binomial::Result<()> {
    let mut args = std::env::args()
        .skip(1)
        .map(|a| a.parse::<u32>().expect("integer"));
    let base = args.next().unwrap_or(2);
    let depth = args.next().unwrap_or(2);
    let dims = Dims::new(base, depth)?;

    let s = s_matrix(dims);
    println!("S_{{{base},{depth}}}(x):\n{s}");

    let last = dims.dim() - 1;
    println!("entry ({last}, 0) = {}", s_entry(dims, last, 0)?);
    assert_eq!(s, s_matrix_closed_form(dims, &Polynomial::x()));
    println!("closed form agrees with the Kronecker recursion");
    Ok(())
}
