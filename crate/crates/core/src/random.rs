//! Seeded random rationals and zero-sum vectors.
//!
//! All generators take an explicit seed and use ChaCha8, so a given seed
//! produces the same values on every platform.

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::digits::Base;
use crate::exactpoly::Rational;
use crate::ptm::ZeroSumVector;

pub fn rng_from_seed(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Numerator in `[-20, 20]`, denominator in `[1, 12]`.
pub fn random_rational<R: Rng + ?Sized>(rng: &mut R) -> Rational {
    let num: i64 = rng.random_range(-20..=20);
    let den: i64 = rng.random_range(1..=12);
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn random_vector<R: Rng + ?Sized>(rng: &mut R, len: usize) -> Vec<Rational> {
    (0..len).map(|_| random_rational(rng)).collect()
}

/// `b − 1` random entries followed by the negated sum of the others.
pub fn random_zero_sum<R: Rng + ?Sized>(rng: &mut R, base: Base) -> ZeroSumVector {
    let mut entries = random_vector(rng, base.max_digit() as usize);
    let total: Rational = entries.iter().sum();
    entries.push(-total);
    ZeroSumVector::new(entries).expect("entries sum to zero by construction")
}

pub fn seeded_zero_sums(base: Base, count: usize, seed: u64) -> Vec<ZeroSumVector> {
    let mut rng = rng_from_seed(seed);
    (0..count)
        .map(|_| random_zero_sum(&mut rng, base))
        .collect()
}

pub fn seeded_vectors(len: usize, count: usize, seed: u64) -> Vec<Vec<Rational>> {
    let mut rng = rng_from_seed(seed);
    (0..count).map(|_| random_vector(&mut rng, len)).collect()
}
