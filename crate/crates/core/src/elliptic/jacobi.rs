use std::f64::consts::PI;

use crate::elliptic::theta::{theta1, theta2, theta3, theta4, ThetaContext};
use crate::error::{Result, YbeError};
use crate::scalar::Cplx;

#[derive(Clone, Copy, Debug)]
pub struct JacobiValues {
    pub sn: Cplx,
    pub cn: Cplx,
    pub dn: Cplx,
}

/// k = θ₂(0)²/θ₃(0)², the modulus attached to τ.
pub fn jacobi_modulus(ctx: &ThetaContext) -> Result<Cplx> {
    let zero = Cplx::new(0.0, 0.0);
    let (t2, t3) = (theta2(zero, ctx)?, theta3(zero, ctx)?);
    Ok(t2 * t2 / (t3 * t3))
}

/// sn, cn, dn at argument u with modulus k(τ), as theta quotients at ζ = u / (π θ₃(0)²).
pub fn jacobi_sn_cn_dn(u: Cplx, ctx: &ThetaContext) -> Result<JacobiValues> {
    let zero = Cplx::new(0.0, 0.0);
    let (t2, t3, t4) = (theta2(zero, ctx)?, theta3(zero, ctx)?, theta4(zero, ctx)?);
    let zeta = u / (t3 * t3 * PI);
    let d = theta4(zeta, ctx)?;
    if d.norm() < 1e-12 {
        return Err(YbeError::Pole(format!("Jacobi functions have a pole at u = {u}")));
    }
    Ok(JacobiValues {
        sn: t3 / t2 * theta1(zeta, ctx)? / d,
        cn: t4 / t2 * theta2(zeta, ctx)? / d,
        dn: t4 / t3 * theta3(zeta, ctx)? / d,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pythagorean_identities() {
        let ctx = ThetaContext::new(Cplx::new(0.0, 1.1)).unwrap();
        let k = jacobi_modulus(&ctx).unwrap();
        for u in [0.2, 0.7, 1.3] {
            let j = jacobi_sn_cn_dn(Cplx::new(u, 0.0), &ctx).unwrap();
            assert!((j.sn * j.sn + j.cn * j.cn - 1.0).norm() < 1e-12);
            assert!((j.dn * j.dn + k * k * j.sn * j.sn - 1.0).norm() < 1e-12);
        }
    }

    #[test]
    fn derivative_of_sn_is_cn_dn() {
        let ctx = ThetaContext::new(Cplx::new(0.0, 1.1)).unwrap();
        let (u, h) = (0.4, 1e-5);
        let f = |t: f64| jacobi_sn_cn_dn(Cplx::new(t, 0.0), &ctx).unwrap();
        let d = (f(u + h).sn - f(u - h).sn) / (2.0 * h);
        let j = f(u);
        assert!((d - j.cn * j.dn).norm() < 1e-8);
    }
}
