//! Exact linear algebra over the rationals.

mod interp;
mod matrix;
mod matrix_poly;
mod poly;
mod solve;

pub use interp::{interpolate, sample_points};
pub use matrix::Matrix;
pub use matrix_poly::{eval_matrix_poly, MatrixPoly};
pub use poly::Poly;
pub use solve::{determinant, kernel, rank, solve, solve_many, LinSystem};
