use std::f64::consts::PI;

use crate::error::{Result, YbeError};
use crate::scalar::Cplx;

/// Modular parameter τ, series length and tolerance shared by all theta evaluations.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ThetaContext {
    pub tau: Cplx,
    pub terms: usize,
    pub tol: f64,
}

impl ThetaContext {
    pub const DEFAULT_TERMS: usize = 60;
    pub const DEFAULT_TOL: f64 = 1e-12;

    pub fn new(tau: Cplx) -> Result<Self> {
        Self::with_terms(tau, Self::DEFAULT_TERMS, Self::DEFAULT_TOL)
    }

    /// Rejects Im τ ≤ 0 and truncations whose first dropped θ₃ term exceeds tol/10.
    pub fn with_terms(tau: Cplx, terms: usize, tol: f64) -> Result<Self> {
        if !(tau.im > 0.0) || !tau.re.is_finite() {
            return Err(YbeError::NonConvergent(format!("Im tau must be positive, got {tau}")));
        }
        if terms < 2 {
            return Err(YbeError::NonConvergent(format!("need at least 2 terms, got {terms}")));
        }
        let ctx = ThetaContext { tau, terms, tol };
        let dropped = 2.0 * ctx.q_pow(terms as f64 * terms as f64).norm();
        if dropped >= tol / 10.0 {
            return Err(YbeError::NonConvergent(format!(
                "{terms} terms leave a tail of {dropped:e} at tau = {tau}"
            )));
        }
        Ok(ctx)
    }

    /// |q| with q = exp(πiτ).
    pub fn nome_abs(&self) -> f64 {
        (-PI * self.tau.im).exp()
    }

    /// q^s = exp(πiτ s).
    fn q_pow(&self, s: f64) -> Cplx {
        (Cplx::i() * PI * self.tau * s).exp()
    }

    /// q^s·sin(w) and q^s·cos(w) from single exponentials, so that large Im w
    /// cannot overflow before the nome factor damps it.
    fn damped_sin_cos(&self, s: f64, w: Cplx) -> (Cplx, Cplx) {
        let base = Cplx::i() * PI * self.tau * s;
        let (a, b) = ((base + Cplx::i() * w).exp(), (base - Cplx::i() * w).exp());
        ((a - b) / (Cplx::i() * 2.0), (a + b) / 2.0)
    }

    pub fn doubled(&self) -> Self {
        ThetaContext { terms: self.terms * 2, ..*self }
    }

    fn checked(&self, value: Cplx, last: Cplx) -> Result<Cplx> {
        if !value.re.is_finite() || !value.im.is_finite() {
            return Err(YbeError::NonConvergent("theta series overflowed".into()));
        }
        if last.norm() > self.tol * value.norm().max(1.0) {
            return Err(YbeError::NonConvergent(format!("last theta term {:e} above tolerance", last.norm())));
        }
        Ok(value)
    }
}

/// θ₁(z|τ) = 2q^{1/4} Σ_{n≥0} (−1)ⁿ q^{n(n+1)} sin((2n+1)πz).
pub fn theta1(z: Cplx, ctx: &ThetaContext) -> Result<Cplx> {
    let mut acc = Cplx::new(0.0, 0.0);
    let mut last = acc;
    for n in 0..ctx.terms {
        let nf = n as f64;
        let sign = if n % 2 == 0 { 1.0 } else { -1.0 };
        last = ctx.damped_sin_cos(nf * (nf + 1.0) + 0.25, (2.0 * nf + 1.0) * PI * z).0 * (2.0 * sign);
        acc += last;
    }
    ctx.checked(acc, last)
}

/// θ₂(z|τ) = 2q^{1/4} Σ_{n≥0} q^{n(n+1)} cos((2n+1)πz).
pub fn theta2(z: Cplx, ctx: &ThetaContext) -> Result<Cplx> {
    let mut acc = Cplx::new(0.0, 0.0);
    let mut last = acc;
    for n in 0..ctx.terms {
        let nf = n as f64;
        last = ctx.damped_sin_cos(nf * (nf + 1.0) + 0.25, (2.0 * nf + 1.0) * PI * z).1 * 2.0;
        acc += last;
    }
    ctx.checked(acc, last)
}

fn theta34(z: Cplx, ctx: &ThetaContext, alternate: bool) -> Result<Cplx> {
    let mut acc = Cplx::new(1.0, 0.0);
    let mut last = Cplx::new(0.0, 0.0);
    for n in 1..ctx.terms {
        let nf = n as f64;
        let sign = if alternate && n % 2 == 1 { -1.0 } else { 1.0 };
        last = ctx.damped_sin_cos(nf * nf, 2.0 * nf * PI * z).1 * (2.0 * sign);
        acc += last;
    }
    ctx.checked(acc, last)
}

/// θ₃(z|τ) = 1 + 2 Σ_{n≥1} q^{n²} cos(2πnz).
pub fn theta3(z: Cplx, ctx: &ThetaContext) -> Result<Cplx> {
    theta34(z, ctx, false)
}

/// θ₄(z|τ) = 1 + 2 Σ_{n≥1} (−1)ⁿ q^{n²} cos(2πnz).
pub fn theta4(z: Cplx, ctx: &ThetaContext) -> Result<Cplx> {
    theta34(z, ctx, true)
}

/// θ₁′(0), differentiated term by term.
pub fn theta1_deriv0(ctx: &ThetaContext) -> Cplx {
    let mut acc = Cplx::new(0.0, 0.0);
    for n in 0..ctx.terms {
        let nf = n as f64;
        let sign = if n % 2 == 0 { 1.0 } else { -1.0 };
        acc += ctx.q_pow(nf * (nf + 1.0) + 0.25) * (2.0 * sign * (2.0 * nf + 1.0) * PI);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Cplx {
        Cplx::new(re, im)
    }

    #[test]
    fn parity_and_zero() {
        let ctx = ThetaContext::new(c(0.3, 1.0)).unwrap();
        assert!(theta1(c(0.0, 0.0), &ctx).unwrap().norm() < 1e-15);
        let z = c(0.17, -0.08);
        assert!((theta1(-z, &ctx).unwrap() + theta1(z, &ctx).unwrap()).norm() < 1e-12);
        assert!((theta3(-z, &ctx).unwrap() - theta3(z, &ctx).unwrap()).norm() < 1e-12);
    }

    #[test]
    fn half_period_relation() {
        let ctx = ThetaContext::new(c(0.3, 1.0)).unwrap();
        let tau = ctx.tau;
        for z in [c(0.1, 0.05), c(-0.31, 0.2), c(0.44, -0.1)] {
            let lhs = theta3(z + (tau + 1.0) / 2.0, &ctx).unwrap();
            let rhs = Cplx::i() * (-Cplx::i() * PI * (z + tau / 4.0)).exp() * theta1(z, &ctx).unwrap();
            assert!((lhs - rhs).norm() < 1e-12);
        }
    }

    #[test]
    fn derivative_matches_finite_difference() {
        let ctx = ThetaContext::new(c(0.0, 1.0)).unwrap();
        let h = 1e-6;
        let fd = (theta1(c(h, 0.0), &ctx).unwrap() - theta1(c(-h, 0.0), &ctx).unwrap()) / (2.0 * h);
        let d = theta1_deriv0(&ctx);
        assert!((fd - d).norm() < 1e-8);
        assert!(d.norm() > 0.1);
        assert_eq!(d, theta1_deriv0(&ctx));
    }

    #[test]
    fn rejects_bad_context() {
        assert!(ThetaContext::new(c(0.0, -1.0)).is_err());
        assert!(ThetaContext::with_terms(c(0.0, 0.01), 5, 1e-12).is_err());
    }
}
