//! `U_N = S_N T_N`, `V_N = T_N S_N` and the braid relation.

use digital_binomial::ptm::{
    braid_check, eigen_poly_annihilation_check, power_relation_check, u_matrix, v_matrix,
};
use digital_binomial::{Base, Dims};

fn main() -> digital_binomial::Result<()> {
    let dims = Dims::new(2, 2)?;
    println!("U_2:\n{}", u_matrix(dims));
    println!("V_2:\n{}", v_matrix(dims));

    for (b, n) in [(2, 1), (2, 3), (3, 1), (3, 2), (4, 2)] {
        let dims = Dims::new(b, n)?;
        println!(
            "b={b} N={n}: U^(b+1) = V^(b+1) = ±I {}, p(U_1) = 0 {}",
            power_relation_check(dims),
            eigen_poly_annihilation_check(Base::new(b)?)
        );
    }

    for b in 2..=4 {
        let check = braid_check(Dims::new(b, 1)?);
        match &check.comparison.witness {
            None => println!("b={b}: STS = TST"),
            Some(w) => println!(
                "b={b}: STS != TST at ({}, {}): {} vs {}",
                w.row, w.col, w.lhs, w.rhs
            ),
        }
    }
    Ok(())
}
