use std::fmt;

use num_traits::{One, Zero};

use crate::error::{Result, YbeError};
use crate::linalg::{solve_many, Matrix};
use crate::scalar::{Rat, Scalar};

/// A basis element of gl(n) used to index sl(n): the matrix unit e_{i,j}
/// (1-based) or h_l = e_{l,l} − e_{l+1,l+1}.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum BasisIndex {
    Unit(usize, usize),
    Cartan(usize),
}

impl BasisIndex {
    pub fn validate(&self, n: usize) -> Result<()> {
        let ok = match *self {
            BasisIndex::Unit(i, j) => (1..=n).contains(&i) && (1..=n).contains(&j),
            BasisIndex::Cartan(l) => l >= 1 && l < n,
        };
        if ok {
            Ok(())
        } else {
            Err(YbeError::IndexOutOfRange(format!("{self} for n={n}")))
        }
    }

    pub fn matrix<S: Scalar>(&self, n: usize) -> Result<Matrix<S>> {
        self.validate(n)?;
        Ok(match *self {
            BasisIndex::Unit(i, j) => Matrix::unit(n, i, j),
            BasisIndex::Cartan(l) => cartan_h(n, l),
        })
    }
}

impl fmt::Display for BasisIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BasisIndex::Unit(i, j) => write!(f, "e_({i},{j})"),
            BasisIndex::Cartan(l) => write!(f, "h_{l}"),
        }
    }
}

/// h_l = e_{l,l} − e_{l+1,l+1}.
pub fn cartan_h<S: Scalar>(n: usize, l: usize) -> Matrix<S> {
    assert!(l >= 1 && l < n, "cartan index {l} outside 1..{n}");
    let mut m = Matrix::zeros(n, n);
    m[(l - 1, l - 1)] = S::one();
    m[(l, l)] = -S::one();
    m
}

/// Off-diagonal units in lexicographic order followed by h_1..h_{n−1}.
pub fn sl_basis(n: usize) -> Vec<BasisIndex> {
    let mut out = Vec::with_capacity(n * n - 1);
    for i in 1..=n {
        for j in 1..=n {
            if i != j {
                out.push(BasisIndex::Unit(i, j));
            }
        }
    }
    out.extend((1..n).map(BasisIndex::Cartan));
    out
}

/// tr(a·b).
pub fn trace_form<S: Scalar>(a: &Matrix<S>, b: &Matrix<S>) -> Result<S> {
    if a.rows() != b.cols() || a.cols() != b.rows() {
        return Err(YbeError::SizeMismatch(a.rows(), b.rows()));
    }
    let mut acc = S::zero();
    for (r, c, v) in a.nonzero() {
        let w = b.get(c, r);
        if !w.is_zero() {
            acc = acc + v.clone() * w.clone();
        }
    }
    Ok(acc)
}

/// All duals ȟ_1..ȟ_{n−1} from one Gram solve.
pub fn cartan_duals(n: usize) -> Result<Vec<Matrix<Rat>>> {
    if n < 2 {
        return Err(YbeError::IndexOutOfRange(format!("n={n} has no Cartan elements")));
    }
    let hs: Vec<Matrix<Rat>> = (1..n).map(|l| cartan_h(n, l)).collect();
    let gram = Matrix::from_fn(n - 1, n - 1, |a, b| trace_form(&hs[a], &hs[b]).expect("square"));
    let rhs: Vec<Vec<Rat>> = (0..n - 1)
        .map(|l| (0..n - 1).map(|m| if m == l { Rat::one() } else { Rat::zero() }).collect())
        .collect();
    let coeffs = solve_many(&gram, &rhs)?;
    let duals: Vec<Matrix<Rat>> = coeffs
        .iter()
        .map(|c| c.iter().zip(&hs).fold(Matrix::zeros(n, n), |acc, (ci, h)| &acc + &h.scale(ci)))
        .collect();
    for (l, dual) in duals.iter().enumerate() {
        for (m, h) in hs.iter().enumerate() {
            let expect = if l == m { Rat::one() } else { Rat::zero() };
            if trace_form(dual, h)? != expect {
                return Err(YbeError::Verification(format!("dual of h_{} failed", l + 1)));
            }
        }
    }
    Ok(duals)
}

/// ȟ_l, the Cartan element with tr(ȟ_l·h_m) = δ_{lm}.
pub fn cartan_dual(l: usize, n: usize) -> Result<Matrix<Rat>> {
    if l == 0 || l >= n {
        return Err(YbeError::IndexOutOfRange(format!("cartan dual {l} for n={n}")));
    }
    Ok(cartan_duals(n)?.swap_remove(l - 1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat;

    #[test]
    fn trace_form_examples() {
        let e12 = Matrix::<Rat>::unit(2, 1, 2);
        let e21 = Matrix::<Rat>::unit(2, 2, 1);
        assert_eq!(trace_form(&e12, &e21).unwrap(), rat(1, 1));
        assert_eq!(trace_form(&e12, &e12).unwrap(), rat(0, 1));
        let h = cartan_h::<Rat>(2, 1);
        assert_eq!(trace_form(&h, &h).unwrap(), rat(2, 1));
        assert!(trace_form(&e12, &Matrix::<Rat>::identity(3)).is_err());
    }

    #[test]
    fn cartan_dual_n2_is_half_h() {
        assert_eq!(cartan_dual(1, 2).unwrap(), cartan_h::<Rat>(2, 1).scale(&rat(1, 2)));
    }

    #[test]
    fn cartan_dual_n3() {
        let d1 = cartan_dual(1, 3).unwrap();
        assert_eq!(trace_form(&d1, &cartan_h(3, 2)).unwrap(), rat(0, 1));
        assert_eq!(trace_form(&d1, &cartan_h(3, 1)).unwrap(), rat(1, 1));
    }

    #[test]
    fn cartan_dual_range() {
        assert!(cartan_dual(0, 3).is_err());
        assert!(cartan_dual(3, 3).is_err());
    }

    #[test]
    fn sl_basis_size() {
        for n in 2..6 {
            assert_eq!(sl_basis(n).len(), n * n - 1);
        }
    }
}
