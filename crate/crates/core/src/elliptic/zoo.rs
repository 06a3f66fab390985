use std::ops::Add;

use num_traits::One;

use crate::elliptic::jacobi::jacobi_sn_cn_dn;
use crate::elliptic::theta::ThetaContext;
use crate::error::{Result, YbeError};
use crate::lie::{cybe_lhs, GlTensor2, GlTensor3};
use crate::linalg::Matrix;
use crate::scalar::{rat, Cplx, Rat, Scalar};

fn h<S: Scalar>() -> Matrix<S> {
    crate::lie::cartan_h(2, 1)
}

fn e<S: Scalar>() -> Matrix<S> {
    Matrix::unit(2, 1, 2)
}

fn f<S: Scalar>() -> Matrix<S> {
    Matrix::unit(2, 2, 1)
}

fn guard(v: Cplx, what: &str) -> Result<()> {
    if v.norm() < 1e-12 {
        return Err(YbeError::Pole(format!("{what} vanishes")));
    }
    Ok(())
}

/// (cn/sn) h⊗h + ((1+dn)/sn)(e⊗f + f⊗e) + ((1−dn)/sn)(e⊗e + f⊗f), modulus from ctx.
pub fn zoo_baxter(z: Cplx, ctx: &ThetaContext) -> Result<GlTensor2<Cplx>> {
    let j = jacobi_sn_cn_dn(z, ctx)?;
    guard(j.sn, "sn")?;
    let one = Cplx::one();
    let mut r = GlTensor2::zero(2);
    r.add_outer(&h(), &h(), &(j.cn / j.sn));
    r.add_outer(&e(), &f(), &((one + j.dn) / j.sn));
    r.add_outer(&f(), &e(), &((one + j.dn) / j.sn));
    r.add_outer(&e(), &e(), &((one - j.dn) / j.sn));
    r.add_outer(&f(), &f(), &((one - j.dn) / j.sn));
    Ok(r)
}

/// ½ cot z h⊗h + (1/sin z)(e⊗f + f⊗e) + sin z e⊗e.
pub fn zoo_cherednik(z: Cplx) -> Result<GlTensor2<Cplx>> {
    let s = z.sin();
    guard(s, "sin z")?;
    let mut r = GlTensor2::zero(2);
    r.add_outer(&h(), &h(), &(z.cos() / s * 0.5));
    r.add_outer(&e(), &f(), &s.inv());
    r.add_outer(&f(), &e(), &s.inv());
    r.add_outer(&e(), &e(), &s);
    Ok(r)
}

/// (1/z)(½ h⊗h + e⊗f + f⊗e) + z(f⊗h + h⊗f) − z³ f⊗f.
pub fn zoo_stolin_rat(z: &Rat) -> Result<GlTensor2<Rat>> {
    if num_traits::Zero::is_zero(z) {
        return Err(YbeError::Pole("rational solution has a pole at z = 0".into()));
    }
    let inv = Rat::one() / z;
    let mut r = GlTensor2::zero(2);
    r.add_outer(&h(), &h(), &(&inv * rat(1, 2)));
    r.add_outer(&e(), &f(), &inv);
    r.add_outer(&f(), &e(), &inv);
    r.add_outer(&f(), &h(), z);
    r.add_outer(&h(), &f(), z);
    r.add_outer(&f(), &f(), &-(z * z * z));
    Ok(r)
}

/// [r¹²(x), r¹³(x+y)] + [r¹³(x+y), r²³(y)] + [r¹²(x), r²³(y)].
pub fn cybe_one_variable<P, S, F>(r: F, x: &P, y: &P) -> Result<GlTensor3<S>>
where
    P: Clone + Add<Output = P>,
    S: Scalar,
    F: Fn(&P) -> Result<GlTensor2<S>>,
{
    let xy = x.clone() + y.clone();
    cybe_lhs(&r(x)?, &r(&xy)?, &r(y)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_is_exact_solution() {
        let res = cybe_one_variable(|z: &Rat| zoo_stolin_rat(z), &rat(1, 3), &rat(1, 5)).unwrap();
        assert!(res.is_zero());
    }

    #[test]
    fn cherednik_solution() {
        let res = cybe_one_variable(|z: &Cplx| zoo_cherednik(*z), &Cplx::new(0.2, 0.0), &Cplx::new(0.3, 0.0)).unwrap();
        assert!(res.max_norm() < 1e-9);
    }

    #[test]
    fn baxter_solution() {
        let ctx = ThetaContext::new(Cplx::new(0.0, 1.1)).unwrap();
        for (x, y) in [(0.2, 0.3), (0.37, 0.55)] {
            let res = cybe_one_variable(|z: &Cplx| zoo_baxter(*z, &ctx), &Cplx::new(x, 0.0), &Cplx::new(y, 0.0)).unwrap();
            assert!(res.max_norm() < 1e-8, "{x} {y}: {}", res.max_norm());
        }
    }
}
