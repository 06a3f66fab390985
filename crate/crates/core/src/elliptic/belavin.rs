use std::f64::consts::PI;

use num_traits::Zero;

use crate::elliptic::kronecker::kronecker_sigma;
use crate::elliptic::theta::ThetaContext;
use crate::error::{Result, YbeError};
use crate::lie::{casimir, cybe_lhs, unitarity_defect, GlTensor2, HeisenbergBasis};
use crate::scalar::Cplx;

/// Which difference of spectral parameters enters r_{k,l}(v).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum VSign {
    YMinusX,
    XMinusY,
}

impl VSign {
    pub fn as_str(self) -> &'static str {
        match self {
            VSign::YMinusX => "y-x",
            VSign::XMinusY => "x-y",
        }
    }

    pub fn apply(self, x: Cplx, y: Cplx) -> Cplx {
        match self {
            VSign::YMinusX => y - x,
            VSign::XMinusY => x - y,
        }
    }
}

/// Outcome of the CYBE self-test over both sign candidates.
#[derive(Clone, Debug)]
pub struct VSignResolution {
    pub chosen: VSign,
    pub residuals: Vec<(VSign, f64)>,
    pub tol: f64,
}

pub const V_SIGN_POINTS: [f64; 3] = [0.1, 0.25, 0.4];
pub const V_SIGN_TOL: f64 = 1e-9;

/// r(x, y) = Σ_{(k,l)≠(0,0)} exp(−2πi d k v / n) σ((d/n)(l − kτ), v) Z^∨_{k,l}⊗Z_{k,l}.
#[derive(Clone, Debug)]
pub struct BelavinR {
    pub n: usize,
    pub d: usize,
    pub ctx: ThetaContext,
    pub basis: HeisenbergBasis,
    pub v_sign: VSign,
}

impl BelavinR {
    /// Uses the v = y − x reading; see [`resolve_v_sign`] for the checked variant.
    pub fn new(n: usize, d: usize, ctx: ThetaContext) -> Result<Self> {
        Self::with_sign(n, d, ctx, VSign::YMinusX)
    }

    pub fn with_sign(n: usize, d: usize, ctx: ThetaContext, v_sign: VSign) -> Result<Self> {
        Ok(BelavinR { n, d, ctx, basis: HeisenbergBasis::new(n, d)?, v_sign })
    }

    /// r_{k,l}(v).
    pub fn coefficient(&self, k: usize, l: usize, v: Cplx) -> Result<Cplx> {
        let (nf, df) = (self.n as f64, self.d as f64);
        let phase = (Cplx::new(0.0, -2.0 * PI * df * k as f64 / nf) * v).exp();
        let u = (self.ctx.tau * -(k as f64) + l as f64) * (df / nf);
        Ok(phase * kronecker_sigma(u, v, &self.ctx)?)
    }

    /// The tensor as a function of v alone.
    pub fn at_v(&self, v: Cplx) -> Result<GlTensor2<Cplx>> {
        let mut acc = GlTensor2::zero(self.n);
        for (idx, ((k, l), _, _)) in self.basis.elements.iter().enumerate() {
            let c = self.coefficient(*k, *l, v)?;
            acc.add_scaled(&self.basis.dual_outer(idx), &c)?;
        }
        Ok(acc)
    }

    pub fn at(&self, x: Cplx, y: Cplx) -> Result<GlTensor2<Cplx>> {
        self.at_v(self.v_sign.apply(x, y))
    }

    /// Symmetric two-radius estimate (v r(v) + (−v) r(−v)) / 2 of the residue at v = 0.
    pub fn residue_fit(&self, v0: f64) -> Result<GlTensor2<Cplx>> {
        let v = Cplx::new(v0, 0.0);
        let plus = self.at_v(v)?.scale(&v);
        let minus = self.at_v(-v)?.scale(&-v);
        Ok(plus.add(&minus)?.scale(&Cplx::new(0.5, 0.0)))
    }

    /// max |residue_fit − c|.
    pub fn residue_error(&self, v0: f64) -> Result<f64> {
        let c = casimir(self.n).to_complex();
        Ok(self.residue_fit(v0)?.sub(&c)?.max_norm())
    }

    pub fn cybe_residual(&self, x1: f64, x2: f64, x3: f64) -> Result<f64> {
        let p = |a: f64, b: f64| self.at(Cplx::new(a, 0.0), Cplx::new(b, 0.0));
        Ok(cybe_lhs(&p(x1, x2)?, &p(x1, x3)?, &p(x2, x3)?)?.max_norm())
    }

    pub fn unitarity_residual(&self, x: f64, y: f64) -> Result<f64> {
        let (x, y) = (Cplx::new(x, 0.0), Cplx::new(y, 0.0));
        Ok(unitarity_defect(&self.at(x, y)?, &self.at(y, x)?)?.max_norm())
    }

    /// Largest coefficient change when the theta series length is doubled.
    pub fn truncation_drift(&self, v: Cplx) -> Result<f64> {
        let wide = BelavinR { ctx: self.ctx.doubled(), ..self.clone() };
        let mut worst: f64 = 0.0;
        for ((k, l), _, _) in &self.basis.elements {
            worst = worst.max((self.coefficient(*k, *l, v)? - wide.coefficient(*k, *l, v)?).norm());
        }
        Ok(worst)
    }
}

/// Evaluates the CYBE residual for v = y − x and v = x − y at (0.1, 0.25, 0.4) and
/// keeps the first candidate under tolerance.
pub fn resolve_v_sign(n: usize, d: usize, ctx: &ThetaContext) -> Result<VSignResolution> {
    let [x1, x2, x3] = V_SIGN_POINTS;
    let mut residuals = Vec::new();
    for sign in [VSign::YMinusX, VSign::XMinusY] {
        let r = BelavinR::with_sign(n, d, *ctx, sign)?;
        residuals.push((sign, r.cybe_residual(x1, x2, x3)?));
    }
    let chosen = residuals
        .iter()
        .find(|(_, res)| *res < V_SIGN_TOL)
        .map(|(s, _)| *s)
        .ok_or_else(|| YbeError::Verification(format!("no sign of v solves CYBE: {residuals:?}")))?;
    Ok(VSignResolution { chosen, residuals, tol: V_SIGN_TOL })
}

/// belavin_r(n, d) at (x, y) with the v-sign fixed by the self-test.
pub fn belavin_r(n: usize, d: usize, ctx: &ThetaContext, x: Cplx, y: Cplx) -> Result<GlTensor2<Cplx>> {
    if (x - y).is_zero() {
        return Err(YbeError::CoincidentPoints);
    }
    let sign = resolve_v_sign(n, d, ctx)?.chosen;
    BelavinR::with_sign(n, d, *ctx, sign)?.at(x, y)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn n2_cybe_unitarity_residue() {
        let ctx = ThetaContext::new(Cplx::new(0.3, 1.0)).unwrap();
        let r = BelavinR::new(2, 1, ctx).unwrap();
        assert!(r.cybe_residual(0.1, 0.25, 0.4).unwrap() < 1e-9);
        assert!(r.unitarity_residual(0.1, 0.37).unwrap() < 1e-9);
        assert!(r.residue_error(1e-4).unwrap() < 1e-5);
        assert!(r.truncation_drift(Cplx::new(0.2, 0.05)).unwrap() < 1e-12);
    }

    #[test]
    fn sign_resolution_prefers_y_minus_x() {
        let ctx = ThetaContext::new(Cplx::new(0.0, 1.0)).unwrap();
        let res = resolve_v_sign(3, 1, &ctx).unwrap();
        assert_eq!(res.chosen, VSign::YMinusX);
        assert_eq!(res.residuals.len(), 2);
    }

    #[test]
    fn lattice_point_is_a_pole() {
        let ctx = ThetaContext::new(Cplx::new(0.0, 1.0)).unwrap();
        let r = BelavinR::new(2, 1, ctx).unwrap();
        assert!(matches!(r.at_v(Cplx::new(1.0, 0.0)), Err(YbeError::Pole(_))));
        assert!(belavin_r(2, 1, &ctx, Cplx::new(0.3, 0.0), Cplx::new(0.3, 0.0)).is_err());
        assert!(BelavinR::new(4, 2, ctx).is_err());
    }
}
