use num_traits::One;

use crate::cuspidal::{assemble_r, build_j};
use crate::error::{Result, YbeError};
use crate::lie::{apply_gauge, cartan_duals, casimir, sl_basis, BasisIndex, GlTensor2, LinearMapGl};
use crate::linalg::{rank, Matrix};
use crate::require_coprime;
use crate::scalar::Rat;
use crate::stolin::dec::{solve_dec, WElementSet};

/// A Stolin triple (𝔩, e, ω_K) with 𝔩 = 𝔤 = sl(n).
#[derive(Clone, Debug)]
pub struct StolinTriple {
    pub n: usize,
    pub e: usize,
    pub k: Matrix<Rat>,
}

impl StolinTriple {
    pub fn new(n: usize, e: usize, k: Matrix<Rat>) -> Result<Self> {
        if e == 0 || e >= n {
            return Err(YbeError::IndexOutOfRange(format!("parabolic index {e} for n={n}")));
        }
        require_coprime(n, e)?;
        if k.rows() != n || k.cols() != n {
            return Err(YbeError::SizeMismatch(n, k.rows()));
        }
        Ok(StolinTriple { n, e, k })
    }

    /// Triples over a subalgebra 𝔩 spanned by `generators`; only 𝔩 = 𝔤 is supported.
    pub fn with_subalgebra(n: usize, e: usize, k: Matrix<Rat>, generators: &[Matrix<Rat>]) -> Result<Self> {
        let span = Matrix::from_fn(n * n, generators.len(), |r, c| generators[c].get(r / n, r % n).clone());
        if generators.is_empty() || rank(&span) < n * n - 1 {
            return Err(YbeError::Unsupported("Stolin triples with a proper subalgebra l".into()));
        }
        Self::new(n, e, k)
    }

    pub fn d(&self) -> usize {
        self.n - self.e
    }
}

/// r_(𝔤,e,ω_K)(x,y) = c/(y−x) + Σ e_{i,j}⊗w_{(i,j;0)}(y) + Σ ȟ_l⊗w_{(l;0)}(y) + x·Σ e_{i,j}⊗w_{(i,j;1)}(y).
#[derive(Clone, Debug)]
pub struct StolinR {
    pub w: WElementSet,
    casimir: GlTensor2<Rat>,
    duals: Vec<Matrix<Rat>>,
}

impl StolinR {
    pub fn new(e: usize, d: usize, k: &Matrix<Rat>) -> Result<Self> {
        let n = e + d;
        Ok(StolinR { w: solve_dec(e, d, k)?, casimir: casimir(n), duals: cartan_duals(n)? })
    }

    pub fn from_triple(t: &StolinTriple) -> Result<Self> {
        Self::new(t.e, t.d(), &t.k)
    }

    pub fn n(&self) -> usize {
        self.w.n()
    }

    /// Everything except the pole term.
    pub fn polynomial_part(&self, x: &Rat, y: &Rat) -> GlTensor2<Rat> {
        let n = self.n();
        let mut t = GlTensor2::zero(n);
        for idx in sl_basis(n) {
            let left = match idx {
                BasisIndex::Unit(i, j) => Matrix::unit(n, i, j),
                BasisIndex::Cartan(l) => self.duals[l - 1].clone(),
            };
            let w0 = self.w.get(idx, 0);
            if !w0.is_zero() {
                t.add_outer(&left, &w0.eval(y), &Rat::one());
            }
            let w1 = self.w.get(idx, 1);
            if !w1.is_zero() {
                t.add_outer(&left, &w1.eval(y), x);
            }
        }
        t
    }

    pub fn at(&self, x: &Rat, y: &Rat) -> Result<GlTensor2<Rat>> {
        if x == y {
            return Err(YbeError::CoincidentPoints);
        }
        let mut t = self.casimir.scale(&(Rat::one() / (y - x)));
        t.add_scaled(&self.polynomial_part(x, y), &Rat::one())?;
        Ok(t)
    }
}

pub fn assemble_stolin_r(e: usize, d: usize, k: &Matrix<Rat>, x: &Rat, y: &Rat) -> Result<GlTensor2<Rat>> {
    if x == y {
        return Err(YbeError::CoincidentPoints);
    }
    StolinR::new(e, d, k)?.at(x, y)
}

/// (φ̃⊗φ̃)·assemble_r(e,d,x,y) == assemble_stolin_r(e,d,K,x,y) with φ̃(A) = −Aᵗ.
pub fn compare_with_k(e: usize, d: usize, k: &Matrix<Rat>, x: &Rat, y: &Rat) -> Result<bool> {
    let phi = LinearMapGl::neg_transpose(e + d);
    let lhs = apply_gauge(&phi, &phi, &assemble_r(e, d, x, y)?)?;
    let rhs = match assemble_stolin_r(e, d, k, x, y) {
        Ok(r) => r,
        Err(YbeError::Degenerate) => return Ok(false),
        Err(err) => return Err(err),
    };
    Ok(lhs == rhs)
}

/// The comparison theorem at one point, with K = −J_(e,d).
pub fn compare_theorem_c(e: usize, d: usize, x: &Rat, y: &Rat) -> Result<bool> {
    let k = build_j(e, d)?.m.scale(&-Rat::one());
    compare_with_k(e, d, &k, x, y)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat;

    #[test]
    fn theorem_c_small() {
        assert!(compare_theorem_c(1, 1, &rat(0, 1), &rat(1, 1)).unwrap());
        assert!(compare_theorem_c(2, 1, &rat(1, 3), &rat(-2, 5)).unwrap());
    }

    #[test]
    fn negative_control() {
        let k = build_j(2, 1).unwrap().m;
        assert!(!compare_with_k(2, 1, &k, &rat(1, 3), &rat(-2, 5)).unwrap());
    }

    #[test]
    fn proper_subalgebra_rejected() {
        let k = build_j(1, 1).unwrap().m;
        let gens = vec![Matrix::unit(2, 1, 2)];
        assert!(matches!(StolinTriple::with_subalgebra(2, 1, k.clone(), &gens), Err(YbeError::Unsupported(_))));
        let all: Vec<Matrix<Rat>> = sl_basis(2).iter().map(|b| b.matrix(2).unwrap()).collect();
        assert!(StolinTriple::with_subalgebra(2, 1, k, &all).is_ok());
    }
}
