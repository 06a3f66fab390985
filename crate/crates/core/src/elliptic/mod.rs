//! Numeric side: Jacobi theta functions, the Kronecker function, the Belavin
//! elliptic r-matrix for coprime (n, d) and the three sl(2) examples.

mod belavin;
mod jacobi;
mod kronecker;
mod theta;
mod zoo;

use crate::lie::GlTensor2;
use crate::scalar::Cplx;

pub use belavin::{belavin_r, resolve_v_sign, BelavinR, VSign, VSignResolution};
pub use jacobi::{jacobi_modulus, jacobi_sn_cn_dn, JacobiValues};
pub use kronecker::{kronecker_series, kronecker_sigma, POLE_GUARD};
pub use theta::{theta1, theta1_deriv0, theta2, theta3, theta4, ThetaContext};
pub use zoo::{cybe_one_variable, zoo_baxter, zoo_cherednik, zoo_stolin_rat};

/// Complex-coefficient two-tensor; its norm is the max coefficient magnitude.
pub type ComplexTensor = GlTensor2<Cplx>;
