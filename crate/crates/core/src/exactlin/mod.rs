//! Exact scalars and dense linear algebra over the rationals or `F_p`.

mod field;
mod kernel;
mod matrix;
mod solve;

pub use field::{Field, Scalar};
pub use matrix::DenseMap;
pub use solve::{solve_linear, Solution};
