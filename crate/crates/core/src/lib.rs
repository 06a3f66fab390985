//! Classical r-matrices for sl(n): exact rational pipelines (cuspidal and Stolin)
//! and numeric elliptic ones, together with the checks that certify them.
//!
//! Module map:
//! - [`linalg`]: rationals, polynomials, matrix polynomials, exact solving.
//! - [`lie`]: gl(n) tensors, Casimir, CYBE residual, gauge maps, Heisenberg basis.
//! - [`cuspidal`]: J-matrices, the solution spaces Sol((e,d),x), G-elements.
//! - [`stolin`]: Frobenius forms on parabolics, dec-equations, Lagrangian orders.
//! - [`elliptic`]: theta functions, Kronecker function, Belavin r-matrix, (2,1) zoo.

pub mod cuspidal;
pub mod elliptic;
pub mod error;
pub mod lie;
pub mod linalg;
pub mod scalar;
pub mod stolin;

pub use error::{Result, YbeError};
pub use lie::{BasisIndex, GlTensor2, GlTensor3, LinearMapGl};
pub use linalg::{Matrix, MatrixPoly, Poly};
pub use scalar::{rat, Cplx, Rat, Scalar, ScalarKind};

/// Greatest common divisor on small unsigned integers.
pub fn gcd(a: usize, b: usize) -> usize {
    num_integer::gcd(a, b)
}

/// Fails with [`YbeError::NotCoprime`] unless `gcd(a, b) == 1` and both are positive.
pub fn require_coprime(a: usize, b: usize) -> Result<()> {
    if a == 0 || b == 0 || gcd(a, b) != 1 {
        return Err(YbeError::NotCoprime(a, b));
    }
    Ok(())
}
