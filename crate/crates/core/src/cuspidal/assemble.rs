use num_traits::One;

use crate::cuspidal::sol::{g_elements, GElements};
use crate::error::{Result, YbeError};
use crate::lie::{cartan_duals, casimir, BasisIndex, GlTensor2};
use crate::linalg::Matrix;
use crate::scalar::Rat;

/// r_(E,(n,d))(x, ·) for a fixed x: the G-elements are solved once and the
/// tensor is then evaluated at any y ≠ x.
#[derive(Clone, Debug)]
pub struct CuspidalR {
    pub e: usize,
    pub d: usize,
    pub x: Rat,
    g: GElements,
    casimir: GlTensor2<Rat>,
    duals: Vec<Matrix<Rat>>,
}

impl CuspidalR {
    pub fn new(e: usize, d: usize, x: &Rat) -> Result<Self> {
        let n = e + d;
        Ok(CuspidalR {
            e,
            d,
            x: x.clone(),
            g: g_elements(e, d, x)?,
            casimir: casimir(n),
            duals: cartan_duals(n)?,
        })
    }

    pub fn n(&self) -> usize {
        self.e + self.d
    }

    pub fn g_elements(&self) -> &GElements {
        &self.g
    }

    /// Σ_{i≠j} e_{j,i}⊗G_{i,j}(y) + Σ_l ȟ_l⊗G_l(y).
    fn g_part(&self, y: &Rat) -> GlTensor2<Rat> {
        let n = self.n();
        let mut t = GlTensor2::zero(n);
        for (idx, g) in &self.g.map {
            if g.is_zero() {
                continue;
            }
            let left = match *idx {
                BasisIndex::Unit(i, j) => Matrix::unit(n, j, i),
                BasisIndex::Cartan(l) => self.duals[l - 1].clone(),
            };
            t.add_outer(&left, &g.eval(y), &Rat::one());
        }
        t
    }

    /// (1/(y−x))·[c + Σ e_{j,i}⊗G_{i,j}(y) + Σ ȟ_l⊗G_l(y)].
    pub fn at(&self, y: &Rat) -> Result<GlTensor2<Rat>> {
        if *y == self.x {
            return Err(YbeError::CoincidentPoints);
        }
        let mut t = self.casimir.clone();
        t.add_scaled(&self.g_part(y), &Rat::one())?;
        Ok(t.scale(&(Rat::one() / (y - &self.x))))
    }

    /// r(x,y) − c/(y−x).
    pub fn regular_part(&self, y: &Rat) -> Result<GlTensor2<Rat>> {
        if *y == self.x {
            return Err(YbeError::CoincidentPoints);
        }
        Ok(self.g_part(y).scale(&(Rat::one() / (y - &self.x))))
    }
}

pub fn assemble_r(e: usize, d: usize, x: &Rat, y: &Rat) -> Result<GlTensor2<Rat>> {
    if x == y {
        return Err(YbeError::CoincidentPoints);
    }
    CuspidalR::new(e, d, x)?.at(y)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::{cybe_lhs, unitarity_defect};
    use crate::scalar::rat;

    #[test]
    fn coincident_points_rejected() {
        assert_eq!(assemble_r(1, 1, &rat(1, 1), &rat(1, 1)).unwrap_err(), YbeError::CoincidentPoints);
    }

    #[test]
    fn pole_part_is_casimir() {
        let r = CuspidalR::new(2, 1, &rat(1, 3)).unwrap();
        let y = rat(5, 2);
        let diff = r.at(&y).unwrap().sub(&r.regular_part(&y).unwrap()).unwrap();
        assert_eq!(diff, casimir(3).scale(&(Rat::one() / (&y - rat(1, 3)))));
    }

    #[test]
    fn cybe_and_unitarity_21() {
        let (x1, x2, x3) = (rat(0, 1), rat(1, 2), rat(-3, 1));
        let r = |a: &Rat, b: &Rat| assemble_r(2, 1, a, b);
        assert!(cybe_lhs(&r(&x1, &x2).unwrap(), &r(&x1, &x3).unwrap(), &r(&x2, &x3).unwrap()).unwrap().is_zero());
        assert!(unitarity_defect(&r(&x1, &x2).unwrap(), &r(&x2, &x1).unwrap()).unwrap().is_zero());
    }
}
