use num_traits::{One, Zero};

use crate::error::{Result, YbeError};
use crate::lie::tensor::GlTensor2;
use crate::linalg::{determinant, Matrix};
use crate::scalar::{Rat, Scalar};

/// Linear endomorphism of gl(n) as an n²×n² matrix on row-major coordinates:
/// column `(i−1)·n + (j−1)` holds the image of e_{i,j}.
#[derive(Clone, Debug, PartialEq)]
pub struct LinearMapGl {
    n: usize,
    action: Matrix<Rat>,
}

impl LinearMapGl {
    pub fn from_action(n: usize, action: Matrix<Rat>) -> Result<Self> {
        if action.rows() != n * n || action.cols() != n * n {
            return Err(YbeError::SizeMismatch(n * n, action.rows()));
        }
        Ok(LinearMapGl { n, action })
    }

    /// Builds the map from the images of the units e_{i,j} (1-based).
    pub fn from_images(n: usize, image: impl Fn(usize, usize) -> Matrix<Rat>) -> Self {
        let mut action = Matrix::zeros(n * n, n * n);
        for i in 1..=n {
            for j in 1..=n {
                let col = (i - 1) * n + (j - 1);
                for (r, c, v) in image(i, j).nonzero() {
                    action[(r * n + c, col)] = v.clone();
                }
            }
        }
        LinearMapGl { n, action }
    }

    pub fn identity(n: usize) -> Self {
        LinearMapGl { n, action: Matrix::identity(n * n) }
    }

    /// A ↦ −Aᵗ.
    pub fn neg_transpose(n: usize) -> Self {
        Self::from_images(n, |i, j| Matrix::unit(n, j, i).scale(&-Rat::one()))
    }

    /// e_{i,j} ↦ e_{n+1−i, n+1−j}.
    pub fn index_reversal(n: usize) -> Self {
        Self::from_images(n, |i, j| Matrix::unit(n, n + 1 - i, n + 1 - j))
    }

    /// e_{i,j} ↦ e_{n+1−j, n+1−i}, the transpose along the anti-diagonal.
    pub fn anti_transpose(n: usize) -> Self {
        Self::from_images(n, |i, j| Matrix::unit(n, n + 1 - j, n + 1 - i))
    }

    /// A ↦ g·A·g⁻¹.
    pub fn conjugation(g: &Matrix<Rat>, g_inv: &Matrix<Rat>) -> Result<Self> {
        let n = g.rows();
        if &g.matmul(g_inv)? != &Matrix::identity(n) {
            return Err(YbeError::Verification("conjugation: g·g⁻¹ ≠ 1".into()));
        }
        Ok(Self::from_images(n, |i, j| g.matmul(&Matrix::unit(n, i, j)).and_then(|m| m.matmul(g_inv)).expect("square")))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn action(&self) -> &Matrix<Rat> {
        &self.action
    }

    pub fn scale(&self, s: &Rat) -> Self {
        LinearMapGl { n: self.n, action: self.action.scale(s) }
    }

    /// self ∘ other.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        if self.n != other.n {
            return Err(YbeError::SizeMismatch(self.n, other.n));
        }
        Ok(LinearMapGl { n: self.n, action: self.action.matmul(&other.action)? })
    }

    pub fn apply(&self, a: &Matrix<Rat>) -> Result<Matrix<Rat>> {
        self.apply_generic(a)
    }

    pub fn apply_generic<S: Scalar>(&self, a: &Matrix<S>) -> Result<Matrix<S>> {
        if a.rows() != self.n || a.cols() != self.n {
            return Err(YbeError::SizeMismatch(self.n, a.rows()));
        }
        let coords = a.to_vec();
        let mut out = vec![S::zero(); self.n * self.n];
        for (r, c, v) in self.action.nonzero() {
            if !coords[c].is_zero() {
                out[r] = out[r].clone() + S::from_rat(v) * coords[c].clone();
            }
        }
        Matrix::from_vec(self.n, self.n, out)
    }

    /// Sparse image of e_{i,j} (1-based) as (row, col, value) with 1-based row/col.
    fn unit_image(&self, i: usize, j: usize) -> Vec<(usize, usize, Rat)> {
        let n = self.n;
        let col = (i - 1) * n + (j - 1);
        (0..n * n)
            .filter_map(|r| {
                let v = self.action.get(r, col);
                (!v.is_zero()).then(|| (r / n + 1, r % n + 1, v.clone()))
            })
            .collect()
    }

    pub fn is_invertible(&self) -> bool {
        determinant(&self.action).map(|d| !d.is_zero()).unwrap_or(false)
    }

    pub fn is_involution(&self) -> bool {
        self.compose(self).map(|m| m == Self::identity(self.n)).unwrap_or(false)
    }

    /// φ([a,b]) = [φ(a), φ(b)] on all pairs of units.
    pub fn is_lie_homomorphism(&self) -> bool {
        let n = self.n;
        let units: Vec<Matrix<Rat>> =
            (1..=n).flat_map(|i| (1..=n).map(move |j| Matrix::unit(n, i, j))).collect();
        let images: Vec<Matrix<Rat>> = units.iter().map(|u| self.apply(u).expect("size")).collect();
        for (a, fa) in units.iter().zip(&images) {
            for (b, fb) in units.iter().zip(&images) {
                let lhs = self.apply(&a.commutator(b).expect("square")).expect("size");
                if lhs != fa.commutator(fb).expect("square") {
                    return false;
                }
            }
        }
        true
    }
}

/// (φ⊗ψ)(r), applied coefficient-wise.
pub fn apply_gauge<S: Scalar>(phi: &LinearMapGl, psi: &LinearMapGl, r: &GlTensor2<S>) -> Result<GlTensor2<S>> {
    let n = r.n();
    for m in [phi.n, psi.n] {
        if m != n {
            return Err(YbeError::SizeMismatch(n, m));
        }
    }
    let mut out = GlTensor2::zero(n);
    for (&[i, j, k, l], v) in r.terms() {
        let left = phi.unit_image(i, j);
        let right = psi.unit_image(k, l);
        for (a, b, u) in &left {
            for (c, d, w) in &right {
                out.add_term([*a, *b, *c, *d], v.clone() * S::from_rat(&(u * w)))?;
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::{cartan_h, casimir};
    use crate::scalar::rat;

    #[test]
    fn identity_gauge_is_noop() {
        let c = casimir(3);
        let id = LinearMapGl::identity(3);
        assert_eq!(apply_gauge(&id, &id, &c).unwrap(), c);
    }

    #[test]
    fn neg_transpose_fixes_casimir() {
        for n in 2..5 {
            let phi = LinearMapGl::neg_transpose(n);
            assert_eq!(apply_gauge(&phi, &phi, &casimir(n)).unwrap(), casimir(n));
        }
    }

    #[test]
    fn index_reversal_image_n3() {
        let n = 3;
        let psi = LinearMapGl::index_reversal(n);
        let r = GlTensor2::outer(&Matrix::<Rat>::unit(n, 1, 2), &cartan_h(n, 1));
        let expect = GlTensor2::outer(&Matrix::unit(n, 3, 2), &cartan_h(n, 2).scale(&rat(-1, 1)));
        assert_eq!(apply_gauge(&psi, &psi, &r).unwrap(), expect);
    }

    #[test]
    fn involutions_and_automorphisms() {
        for n in 2..5 {
            for m in [LinearMapGl::neg_transpose(n), LinearMapGl::index_reversal(n), LinearMapGl::anti_transpose(n)] {
                assert!(m.is_involution());
                assert!(m.is_invertible());
            }
            assert!(LinearMapGl::neg_transpose(n).is_lie_homomorphism());
            assert!(LinearMapGl::index_reversal(n).is_lie_homomorphism());
            // the anti-transpose is an anti-automorphism; its negative is an automorphism
            assert!(!LinearMapGl::anti_transpose(n).is_lie_homomorphism());
            assert!(LinearMapGl::anti_transpose(n).scale(&rat(-1, 1)).is_lie_homomorphism());
        }
    }

    #[test]
    fn size_mismatch() {
        let c = casimir(2);
        assert!(apply_gauge(&LinearMapGl::identity(3), &LinearMapGl::identity(3), &c).is_err());
    }
}
