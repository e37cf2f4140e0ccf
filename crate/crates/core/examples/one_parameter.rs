//! `S(x)·S(y) = S(x+y)` checked symbolically, and `S(x)⁻¹ = S(−x)`.

use digital_binomial::exactpoly::Polynomial;
use digital_binomial::sierpinski::{inverse_product, s_matrix, verify_one_parameter};
use digital_binomial::Dims;

fn main() -> digital_binomial::Result<()> {
    for (b, n) in [(2, 2), (3, 2), (4, 2), (5, 3)] {
        let dims = Dims::new(b, n)?;
        let cmp = verify_one_parameter(dims);
        let inverse = inverse_product(dims).is_identity();
        println!(
            "b={b} N={n}: group law {}, inverse {}",
            cmp.holds(),
            inverse
        );
    }

    let dims = Dims::new(2, 2)?;
    let s = s_matrix(dims);
    let product = s.mul(&s.map(Polynomial::swap_vars));
    println!("\nS_2(x)·S_2(y):\n{product}");
    Ok(())
}
