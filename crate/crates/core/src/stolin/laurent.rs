use num_traits::Zero;

use crate::error::{Result, YbeError};
use crate::linalg::Matrix;
use crate::scalar::Rat;

/// A gl(n)-valued Laurent series Σ_{p=lo}^{hi} a_p zᵖ.
///
/// Coefficients outside `[lo, hi]` are zero, except that a series flagged
/// `truncated_below` may have unknown coefficients below `lo`.
#[derive(Clone, Debug, PartialEq)]
pub struct LaurentMatrixSeries {
    n: usize,
    lo: i64,
    hi: i64,
    coeffs: Vec<Matrix<Rat>>,
    truncated_below: bool,
}

impl LaurentMatrixSeries {
    pub fn zero(n: usize, lo: i64, hi: i64) -> Result<Self> {
        if lo > hi {
            return Err(YbeError::Shape(format!("empty Laurent window [{lo}, {hi}]")));
        }
        let len = (hi - lo + 1) as usize;
        Ok(LaurentMatrixSeries { n, lo, hi, coeffs: vec![Matrix::zeros(n, n); len], truncated_below: false })
    }

    /// a·zᵖ in the window [lo, hi].
    pub fn monomial(a: &Matrix<Rat>, p: i64, lo: i64, hi: i64) -> Result<Self> {
        let mut s = Self::zero(a.rows(), lo, hi)?;
        s.set(p, a.clone())?;
        Ok(s)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn window(&self) -> (i64, i64) {
        (self.lo, self.hi)
    }

    pub fn is_truncated_below(&self) -> bool {
        self.truncated_below
    }

    pub fn mark_truncated_below(mut self) -> Self {
        self.truncated_below = true;
        self
    }

    /// Coefficient of zᵖ; zero outside the window.
    pub fn coeff(&self, p: i64) -> Matrix<Rat> {
        if p < self.lo || p > self.hi {
            Matrix::zeros(self.n, self.n)
        } else {
            self.coeffs[(p - self.lo) as usize].clone()
        }
    }

    pub fn set(&mut self, p: i64, a: Matrix<Rat>) -> Result<()> {
        if p < self.lo || p > self.hi {
            return Err(YbeError::Truncation(format!("degree {p} outside window [{}, {}]", self.lo, self.hi)));
        }
        if a.rows() != self.n || a.cols() != self.n {
            return Err(YbeError::SizeMismatch(self.n, a.rows()));
        }
        self.coeffs[(p - self.lo) as usize] = a;
        Ok(())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Matrix::is_zero)
    }

    /// Degrees carrying a nonzero coefficient, ascending.
    pub fn support(&self) -> Vec<i64> {
        (self.lo..=self.hi).filter(|&p| !self.coeff(p).is_zero()).collect()
    }

    fn same_window(&self, other: &Self) -> Result<()> {
        if self.n != other.n {
            return Err(YbeError::SizeMismatch(self.n, other.n));
        }
        if (self.lo, self.hi) != (other.lo, other.hi) {
            return Err(YbeError::Shape("Laurent windows differ".into()));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.same_window(other)?;
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect();
        Ok(LaurentMatrixSeries { coeffs, truncated_below: self.truncated_below || other.truncated_below, ..*self })
    }

    pub fn scale(&self, s: &Rat) -> Self {
        LaurentMatrixSeries { coeffs: self.coeffs.iter().map(|a| a.scale(s)).collect(), ..*self }
    }

    /// Entrywise map A ↦ g(p, A) on every degree p.
    pub fn map_coeffs(&self, g: impl Fn(i64, &Matrix<Rat>) -> Matrix<Rat>) -> Self {
        let coeffs = (self.lo..=self.hi).zip(&self.coeffs).map(|(p, a)| g(p, a)).collect();
        LaurentMatrixSeries { coeffs, ..*self }
    }

    /// Part of nonnegative degree as coefficients [a_0, a_1, ...].
    pub fn nonnegative_part(&self) -> Vec<Matrix<Rat>> {
        (0..=self.hi.max(-1)).map(|p| self.coeff(p)).collect()
    }

    /// Evaluation at a nonzero rational point, valid only for untruncated series.
    pub fn eval(&self, z: &Rat) -> Result<Matrix<Rat>> {
        if self.truncated_below {
            return Err(YbeError::Truncation("cannot evaluate a series truncated below".into()));
        }
        if z.is_zero() && self.lo < 0 && self.coeffs.iter().take((-self.lo) as usize).any(|a| !a.is_zero()) {
            return Err(YbeError::Pole("series has a pole at z = 0".into()));
        }
        let mut acc = Matrix::zeros(self.n, self.n);
        for p in self.lo..=self.hi {
            let a = self.coeff(p);
            if a.is_zero() {
                continue;
            }
            let zp = if p >= 0 { pow(z, p as u32) } else { Rat::from_integer(1.into()) / pow(z, (-p) as u32) };
            acc = &acc + &a.scale(&zp);
        }
        Ok(acc)
    }
}

fn pow(z: &Rat, k: u32) -> Rat {
    num_traits::pow(z.clone(), k as usize)
}

/// res_{z=0} tr(a·b) = Σ_p tr(a_p · b_{−1−p}).
///
/// Fails when a truncated tail of one factor could meet a nonzero coefficient
/// of the other.
pub fn kac_pairing(a: &LaurentMatrixSeries, b: &LaurentMatrixSeries) -> Result<Rat> {
    if a.n != b.n {
        return Err(YbeError::SizeMismatch(a.n, b.n));
    }
    certify(a, b)?;
    certify(b, a)?;
    let mut acc = Rat::zero();
    for p in a.lo..=a.hi {
        let q = -1 - p;
        if q < b.lo || q > b.hi {
            continue;
        }
        let (ap, bq) = (&a.coeffs[(p - a.lo) as usize], &b.coeffs[(q - b.lo) as usize]);
        if ap.is_zero() || bq.is_zero() {
            continue;
        }
        acc += ap.matmul(bq)?.trace();
    }
    Ok(acc)
}

fn certify(t: &LaurentMatrixSeries, other: &LaurentMatrixSeries) -> Result<()> {
    if !t.truncated_below {
        return Ok(());
    }
    // unknown t_p for p < lo meets other_q with q = −1 − p ≥ −lo
    if let Some(q) = other.support().into_iter().find(|&q| q >= -t.lo) {
        return Err(YbeError::Truncation(format!(
            "residue not certified: coefficient at z^{q} meets a tail truncated below z^{}",
            t.lo
        )));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat;

    fn e(n: usize, i: usize, j: usize) -> Matrix<Rat> {
        Matrix::unit(n, i, j)
    }

    #[test]
    fn unit_pairing() {
        let a = LaurentMatrixSeries::monomial(&e(2, 1, 2), -1, -3, 1).unwrap();
        let b = LaurentMatrixSeries::monomial(&e(2, 2, 1), 0, -3, 1).unwrap();
        assert_eq!(kac_pairing(&a, &b).unwrap(), rat(1, 1));
        assert_eq!(kac_pairing(&b, &a).unwrap(), rat(1, 1));
    }

    #[test]
    fn polynomials_pair_to_zero() {
        let a = LaurentMatrixSeries::monomial(&e(2, 1, 2), 1, 0, 2).unwrap();
        let b = LaurentMatrixSeries::monomial(&e(2, 2, 1), 0, 0, 2).unwrap();
        assert!(kac_pairing(&a, &b).unwrap().is_zero());
    }

    #[test]
    fn truncation_is_reported() {
        let a = LaurentMatrixSeries::monomial(&e(2, 1, 2), -1, -2, 1).unwrap().mark_truncated_below();
        let ok = LaurentMatrixSeries::monomial(&e(2, 2, 1), 1, -2, 1).unwrap();
        assert!(kac_pairing(&a, &ok).is_ok());
        let bad = LaurentMatrixSeries::monomial(&e(2, 2, 1), 2, -2, 2).unwrap();
        assert!(matches!(kac_pairing(&a, &bad), Err(YbeError::Truncation(_))));
    }

    #[test]
    fn eval_and_parts() {
        let mut s = LaurentMatrixSeries::monomial(&e(2, 1, 2), -1, -2, 1).unwrap();
        s.set(1, e(2, 2, 1)).unwrap();
        let v = s.eval(&rat(2, 1)).unwrap();
        assert_eq!(v.get(0, 1), &rat(1, 2));
        assert_eq!(v.get(1, 0), &rat(2, 1));
        assert_eq!(s.support(), vec![-1, 1]);
        assert_eq!(s.nonnegative_part().len(), 2);
        assert!(s.eval(&rat(0, 1)).is_err());
    }
}
