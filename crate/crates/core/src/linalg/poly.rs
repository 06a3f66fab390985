use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::error::{Result, YbeError};
use crate::scalar::Rat;

/// Univariate polynomial over the rationals, coefficients in ascending degree.
/// The zero polynomial has no coefficients and there is never a trailing zero.
#[derive(Clone, PartialEq, Eq, Debug, Default, Hash)]
pub struct Poly {
    coeffs: Vec<Rat>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn constant(c: Rat) -> Self {
        Self::new(vec![c])
    }

    /// The variable itself.
    pub fn var() -> Self {
        Self::monomial(Rat::one(), 1)
    }

    pub fn monomial(c: Rat, degree: usize) -> Self {
        let mut coeffs = vec![Rat::zero(); degree + 1];
        coeffs[degree] = c;
        Self::new(coeffs)
    }

    pub fn new(mut coeffs: Vec<Rat>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Rat {
        self.coeffs.get(k).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn eval(&self, x: &Rat) -> Rat {
        self.coeffs.iter().rev().fold(Rat::zero(), |acc, c| acc * x + c)
    }

    pub fn scale(&self, s: &Rat) -> Self {
        Self::new(self.coeffs.iter().map(|c| c * s).collect())
    }

    /// Euclidean division; errors on a zero divisor.
    pub fn div_rem(&self, divisor: &Poly) -> Result<(Poly, Poly)> {
        let dd = divisor.degree().ok_or_else(|| YbeError::Singular("division by zero polynomial".into()))?;
        let lead = &divisor.coeffs[dd];
        let mut rem = self.coeffs.clone();
        let mut quot = vec![Rat::zero(); self.coeffs.len().saturating_sub(dd).max(1)];
        while rem.len() > dd && !rem.is_empty() {
            let k = rem.len() - 1;
            let c = &rem[k] / lead;
            if !c.is_zero() {
                for (i, dc) in divisor.coeffs.iter().enumerate() {
                    rem[k - dd + i] -= &c * dc;
                }
                quot[k - dd] = c;
            }
            rem.pop();
        }
        Ok((Poly::new(quot), Poly::new(rem)))
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..len).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..len).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![Rat::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Poly::new(out)
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| match k {
                0 => format!("{c}"),
                1 => format!("({c})z"),
                _ => format!("({c})z^{k}"),
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat;

    fn p(v: &[i64]) -> Poly {
        Poly::new(v.iter().map(|&c| rat(c, 1)).collect())
    }

    #[test]
    fn trailing_zeros_are_dropped() {
        assert_eq!(p(&[1, 2, 0, 0]).coeffs().len(), 2);
        assert!(p(&[0, 0]).is_zero());
        assert_eq!(p(&[0]).degree(), None);
    }

    #[test]
    fn eval_horner() {
        assert_eq!(p(&[1, 0, 2]).eval(&rat(3, 1)), rat(19, 1));
    }

    #[test]
    fn division() {
        let a = p(&[-1, 0, 0, 1]);
        let b = p(&[-1, 1]);
        let (q, r) = a.div_rem(&b).unwrap();
        assert_eq!(q, p(&[1, 1, 1]));
        assert!(r.is_zero());
        let (q, r) = p(&[5]).div_rem(&p(&[1, 1])).unwrap();
        assert!(q.is_zero());
        assert_eq!(r, p(&[5]));
    }
}
