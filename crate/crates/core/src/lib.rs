//! Exact generalized Sierpinski matrices and the digital binomial theorem.
//!
//! Everything is computed with arbitrary-precision rationals and sparse
//! polynomials in `x` and `y`; identities are checked by structural equality,
//! never by sampling or floating point.
//!
//! - [`digits`]: base-b expansions, digit sums, digital dominance, PTM values.
//! - [`exactpoly`]: rationals and bivariate polynomials.
//! - [`matrix`]: dense exact matrices with Kronecker products and sums.
//! - [`sierpinski`]: `S_{b,N}(x)`, its generator `X_{b,N}(x)`, and the
//!   identities they satisfy.
//! - [`ptm`]: Prouhet-Thue-Morse polynomial factorization, Prouhet partitions,
//!   and relations among `S_N`, `T_N`, `U_N`, `V_N`.
//! - [`verify`]: named verification suites; [`report`] holds their JSON shape.
//! - [`random`]: seeded random rationals and zero-sum vectors.
//! - [`cli`]: the command-line front end used by the `digital-binomial` binary.
//!
//! Runnable walkthroughs of each capability live in `examples/`.

pub mod cli;
pub mod digits;
pub mod error;
pub mod exactpoly;
pub mod matrix;
pub mod ptm;
pub mod random;
pub mod report;
pub mod sierpinski;
pub mod verify;

pub use digits::{Base, BaseBExpansion};
pub use error::{Error, Result};
pub use exactpoly::{Polynomial, Rational};
pub use matrix::{Dims, Matrix, PolyMatrix, RationalMatrix};
