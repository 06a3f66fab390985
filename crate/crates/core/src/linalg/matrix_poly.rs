use num_traits::Zero;

use crate::error::{Result, YbeError};
use crate::linalg::{Matrix, Poly};
use crate::scalar::Rat;

/// n×n matrix with polynomial entries in z, stored as a list of constant
/// matrices indexed by degree. With a block split `(e, d)` the per-entry degree
/// bound of V_{e,d} is enforced: 1 on the diagonal blocks, 0 on the upper-right
/// e×d block, 2 on the lower-left d×e block.
#[derive(Clone, PartialEq, Debug)]
pub struct MatrixPoly {
    n: usize,
    coeffs: Vec<Matrix<Rat>>,
    split: Option<(usize, usize)>,
}

impl MatrixPoly {
    pub fn zero(n: usize) -> Self {
        MatrixPoly { n, coeffs: Vec::new(), split: None }
    }

    pub fn constant(m: Matrix<Rat>) -> Self {
        Self::from_coeffs(m.rows(), vec![m]).expect("square constant")
    }

    pub fn from_coeffs(n: usize, coeffs: Vec<Matrix<Rat>>) -> Result<Self> {
        for c in &coeffs {
            if c.rows() != n || c.cols() != n {
                return Err(YbeError::SizeMismatch(n, c.rows()));
            }
        }
        let mut out = MatrixPoly { n, coeffs, split: None };
        out.trim();
        Ok(out)
    }

    /// Attaches the V_{e,d} shape tag after checking the degree mask.
    pub fn with_split(mut self, e: usize, d: usize) -> Result<Self> {
        if e + d != self.n {
            return Err(YbeError::Shape(format!("split {e}+{d} does not match size {}", self.n)));
        }
        self.split = Some((e, d));
        for (deg, m) in self.coeffs.iter().enumerate() {
            for (r, c, _) in m.nonzero() {
                let bound = self.degree_bound(r, c).expect("split set");
                if deg > bound {
                    return Err(YbeError::Shape(format!(
                        "entry ({},{}) has degree {deg} above bound {bound} for V_({e},{d})",
                        r + 1,
                        c + 1
                    )));
                }
            }
        }
        Ok(self)
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(Matrix::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn split(&self) -> Option<(usize, usize)> {
        self.split
    }

    /// Degree bound of the 0-based entry (r, c) under the shape tag.
    pub fn degree_bound(&self, r: usize, c: usize) -> Option<usize> {
        let (e, _) = self.split?;
        Some(match (r < e, c < e) {
            (true, false) => 0,
            (false, true) => 2,
            _ => 1,
        })
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Coefficient matrix of z^k (zero beyond the degree).
    pub fn coeff(&self, k: usize) -> Matrix<Rat> {
        self.coeffs.get(k).cloned().unwrap_or_else(|| Matrix::zeros(self.n, self.n))
    }

    pub fn coeffs(&self) -> &[Matrix<Rat>] {
        &self.coeffs
    }

    /// The polynomial in the 0-based entry (r, c).
    pub fn entry(&self, r: usize, c: usize) -> Poly {
        Poly::new(self.coeffs.iter().map(|m| m.get(r, c).clone()).collect())
    }

    pub fn eval(&self, x: &Rat) -> Matrix<Rat> {
        let mut acc = Matrix::zeros(self.n, self.n);
        for m in self.coeffs.iter().rev() {
            acc = &acc.scale(x) + m;
        }
        acc
    }

    pub fn add(&self, other: &Self) -> Self {
        let len = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..len).map(|k| &self.coeff(k) + &other.coeff(k)).collect();
        let mut out = MatrixPoly { n: self.n, coeffs, split: common_split(self, other) };
        out.trim();
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&-Rat::from_integer(1.into())))
    }

    pub fn scale(&self, s: &Rat) -> Self {
        let mut out = MatrixPoly {
            n: self.n,
            coeffs: self.coeffs.iter().map(|m| m.scale(s)).collect(),
            split: self.split,
        };
        out.trim();
        out
    }

    /// Multiplies by z^k.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut coeffs = vec![Matrix::zeros(self.n, self.n); k];
        coeffs.extend(self.coeffs.iter().cloned());
        MatrixPoly { n: self.n, coeffs, split: None }
    }

    pub fn trace_coeffs(&self) -> Vec<Rat> {
        self.coeffs.iter().map(Matrix::trace).collect()
    }

    pub fn is_traceless(&self) -> bool {
        self.coeffs.iter().all(|m| m.trace().is_zero())
    }
}

fn common_split(a: &MatrixPoly, b: &MatrixPoly) -> Option<(usize, usize)> {
    match (a.split, b.split) {
        (Some(x), Some(y)) if x == y => Some(x),
        (Some(x), None) if b.is_zero() => Some(x),
        (None, Some(y)) if a.is_zero() => Some(y),
        _ => None,
    }
}

/// Entry-wise evaluation F(x).
pub fn eval_matrix_poly(f: &MatrixPoly, x: &Rat) -> Matrix<Rat> {
    f.eval(x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat;

    #[test]
    fn constant_evaluates_to_itself() {
        let m = Matrix::<Rat>::unit(3, 1, 2);
        assert_eq!(eval_matrix_poly(&MatrixPoly::constant(m.clone()), &rat(7, 3)), m);
    }

    #[test]
    fn z_squared_lower_left() {
        let f = MatrixPoly::constant(Matrix::unit(2, 2, 1)).shift(2);
        assert_eq!(f.eval(&rat(3, 1)), Matrix::unit(2, 2, 1).scale(&rat(9, 1)));
        assert!(f.clone().with_split(1, 1).is_ok());
        let bad = MatrixPoly::constant(Matrix::unit(2, 1, 2)).shift(1);
        assert!(bad.with_split(1, 1).is_err());
    }

    #[test]
    fn entry_reads_polynomial() {
        let f = MatrixPoly::constant(Matrix::unit(2, 1, 1))
            .add(&MatrixPoly::constant(Matrix::unit(2, 1, 1).scale(&rat(3, 1))).shift(1));
        assert_eq!(f.entry(0, 0), Poly::new(vec![rat(1, 1), rat(3, 1)]));
        assert!(f.entry(1, 1).is_zero());
    }
}
