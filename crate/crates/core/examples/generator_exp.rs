//! The nilpotent generator `X_{b,N}(x)` and `exp(X) = S`.

use digital_binomial::sierpinski::{
    matrix_exp_nilpotent, nilpotency_bound, s_matrix, stirling_row, x_matrix,
};
use digital_binomial::Dims;

fn main() -> digital_binomial::Result<()> {
    let dims = Dims::new(3, 2)?;
    let x = x_matrix(dims);
    println!("X_{{3,2}}(x):\n{x}");

    let bound = nilpotency_bound(dims);
    println!("X^{bound} is nonzero, X^{} is zero", bound + 1);
    let exp = matrix_exp_nilpotent(&x, bound)?;
    assert_eq!(exp, s_matrix(dims));
    println!("exp(X_{{3,2}}) = S_{{3,2}}");

    for n in 0..=6 {
        let row: Vec<String> = stirling_row(n).iter().map(ToString::to_string).collect();
        println!("c({n}, k) = {}", row.join(" "));
    }
    Ok(())
}
