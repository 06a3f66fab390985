use std::f64::consts::PI;

use crate::elliptic::theta::{theta1, theta1_deriv0, ThetaContext};
use crate::error::{Result, YbeError};
use crate::scalar::Cplx;

/// Distance to the zero lattice of θ₁, measured as |θ₁|, below which σ reports a pole.
pub const POLE_GUARD: f64 = 1e-8;

/// σ(u, z) = θ₁′(0) θ₁(u + z) / (θ₁(u) θ₁(z)).
pub fn kronecker_sigma(u: Cplx, z: Cplx, ctx: &ThetaContext) -> Result<Cplx> {
    let tu = theta1(u, ctx)?;
    if tu.norm() < POLE_GUARD {
        return Err(YbeError::Pole(format!("theta1(u) vanishes at u = {u}")));
    }
    let tz = theta1(z, ctx)?;
    if tz.norm() < POLE_GUARD {
        return Err(YbeError::Pole(format!("theta1(z) vanishes at z = {z}")));
    }
    Ok(theta1_deriv0(ctx) * theta1(u + z, ctx)? / (tu * tz))
}

/// 2πi Σ_{|m|≤terms} e^{−2πimz} / (1 − e^{−2πi(a − mτ)}), convergent for −Im τ < Im z < 0.
pub fn kronecker_series(a: Cplx, z: Cplx, tau: Cplx, terms: usize) -> Result<Cplx> {
    if !(z.im < 0.0 && z.im > -tau.im) {
        return Err(YbeError::NonConvergent(format!("series needs -Im tau < Im z < 0, got z = {z}")));
    }
    let two_pi_i = Cplx::new(0.0, 2.0 * PI);
    let mut acc = Cplx::new(0.0, 0.0);
    for m in -(terms as i64)..=(terms as i64) {
        let mf = m as f64;
        let denom = Cplx::new(1.0, 0.0) - (-two_pi_i * (a - tau * mf)).exp();
        if denom.norm() < POLE_GUARD {
            return Err(YbeError::Pole(format!("a = {a} on the lattice")));
        }
        acc += (-two_pi_i * mf * z).exp() / denom;
    }
    let value = two_pi_i * acc;
    if !value.re.is_finite() || !value.im.is_finite() {
        return Err(YbeError::NonConvergent("Kronecker series overflowed".into()));
    }
    Ok(value)
}
