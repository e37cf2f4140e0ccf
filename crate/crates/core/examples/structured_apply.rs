//! Applies `S_{2,10}(1)` to vectors without forming the 1024×1024 matrix.

use std::time::Instant;

use digital_binomial::exactpoly::int;
use digital_binomial::random::seeded_vectors;
use digital_binomial::sierpinski::KroneckerChain;
use digital_binomial::Dims;

fn main() -> digital_binomial::Result<()> {
    let dims = Dims::new(2, 10)?;
    let chain = KroneckerChain::sierpinski(dims, &int(1));
    let vectors = seeded_vectors(dims.dim(), 20, 1);

    let start = Instant::now();
    let fast: Vec<_> = vectors
        .iter()
        .map(|v| chain.apply(v))
        .collect::<Result<_, _>>()?;
    let fast_time = start.elapsed();

    let start = Instant::now();
    let dense = chain.to_dense();
    let slow: Vec<_> = vectors
        .iter()
        .map(|v| dense.mul_vec(v))
        .collect::<Result<_, _>>()?;
    let slow_time = start.elapsed();

    assert_eq!(fast, slow);
    println!("structured: {fast_time:.2?}, dense build and multiply: {slow_time:.2?}");
    Ok(())
}
