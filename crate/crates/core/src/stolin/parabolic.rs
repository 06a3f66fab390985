use num_traits::{One, Zero};

use crate::cuspidal::{region, Region};
use crate::error::{Result, YbeError};
use crate::lie::BasisIndex;
use crate::linalg::{determinant, solve, LinSystem, Matrix};
use crate::scalar::Rat;

/// Ordered basis of 𝔭_e (block-upper-triangular traceless matrices for the
/// split n = e + (n−e)): h_1..h_{n−1}, then the off-diagonal units outside
/// the lower-left block in lexicographic order.
#[derive(Clone, Debug, PartialEq)]
pub struct ParabolicBasis {
    pub n: usize,
    pub e: usize,
    pub elements: Vec<BasisIndex>,
}

impl ParabolicBasis {
    pub fn new(n: usize, e: usize) -> Result<Self> {
        if e == 0 || e >= n {
            return Err(YbeError::IndexOutOfRange(format!("parabolic index {e} for n={n}")));
        }
        let mut elements: Vec<BasisIndex> = (1..n).map(BasisIndex::Cartan).collect();
        for i in 1..=n {
            for j in 1..=n {
                if i != j && region(i, j, e) != Region::III {
                    elements.push(BasisIndex::Unit(i, j));
                }
            }
        }
        Ok(ParabolicBasis { n, e, elements })
    }

    pub fn dim(&self) -> usize {
        self.elements.len()
    }

    pub fn matrices(&self) -> Vec<Matrix<Rat>> {
        self.elements.iter().map(|b| b.matrix(self.n).expect("in range")).collect()
    }

    /// Zero lower-left block and zero trace.
    pub fn contains(&self, a: &Matrix<Rat>) -> bool {
        a.trace().is_zero() && a.nonzero().all(|(r, c, _)| region(r + 1, c + 1, self.e) != Region::III)
    }
}

/// ω_K(a, b) = tr(Kᵗ·[a, b]).
pub fn omega(k: &Matrix<Rat>, a: &Matrix<Rat>, b: &Matrix<Rat>) -> Result<Rat> {
    let br = a.commutator(b)?;
    Ok(k.transpose().matmul(&br)?.trace())
}

/// Gram matrix of ω_K on the ordered basis of 𝔭_e.
#[derive(Clone, Debug)]
pub struct FrobeniusForm {
    pub k: Matrix<Rat>,
    pub basis: ParabolicBasis,
    pub gram: Matrix<Rat>,
    pub det: Rat,
}

impl FrobeniusForm {
    pub fn is_nondegenerate(&self) -> bool {
        !self.det.is_zero()
    }

    pub fn is_skew(&self) -> bool {
        self.gram == (&Matrix::zeros(self.gram.rows(), self.gram.cols()) - &self.gram.transpose())
    }
}

pub fn frobenius_gram(k: &Matrix<Rat>, e: usize, n: usize) -> Result<FrobeniusForm> {
    if k.rows() != n || k.cols() != n {
        return Err(YbeError::SizeMismatch(n, k.rows()));
    }
    let basis = ParabolicBasis::new(n, e)?;
    let mats = basis.matrices();
    let kt = k.transpose();
    // ω(a,b) = tr([Kᵗ,a]·b), so one commutator per basis element suffices
    let chi: Vec<Matrix<Rat>> = mats.iter().map(|a| kt.commutator(a).expect("square")).collect();
    let gram = Matrix::from_fn(mats.len(), mats.len(), |r, c| {
        chi[r].matmul(&mats[c]).expect("square").trace()
    });
    let det = determinant(&gram)?;
    Ok(FrobeniusForm { k: k.clone(), basis, gram, det })
}

/// The unique (P, N) with G = [Kᵗ, P] + N, P ∈ 𝔭_e traceless and N in the upper-right block.
pub fn frobenius_split(g: &Matrix<Rat>, k: &Matrix<Rat>, e: usize) -> Result<(Matrix<Rat>, Matrix<Rat>)> {
    let n = k.rows();
    if g.rows() != n || !g.is_square() || !k.is_square() {
        return Err(YbeError::SizeMismatch(n, g.rows()));
    }
    if e == 0 || e >= n {
        return Err(YbeError::IndexOutOfRange(format!("parabolic index {e} for n={n}")));
    }
    let kt = k.transpose();
    // unknowns: P on regions I, II, IV (all entries) then N on region I
    let mut unknowns: Vec<(bool, usize, usize)> = Vec::new();
    for r in 0..n {
        for c in 0..n {
            if region(r + 1, c + 1, e) != Region::III {
                unknowns.push((true, r, c));
            }
        }
    }
    for r in 0..n {
        for c in 0..n {
            if region(r + 1, c + 1, e) == Region::I {
                unknowns.push((false, r, c));
            }
        }
    }
    let mut a = Matrix::zeros(n * n + 1, unknowns.len());
    for (col, &(is_p, r, c)) in unknowns.iter().enumerate() {
        let unit = Matrix::<Rat>::unit(n, r + 1, c + 1);
        let image = if is_p { kt.commutator(&unit)? } else { unit };
        for (rr, cc, v) in image.nonzero() {
            a[(rr * n + cc, col)] = v.clone();
        }
        if is_p && r == c {
            a[(n * n, col)] = Rat::one();
        }
    }
    let mut b = g.to_vec();
    b.push(Rat::zero());
    let x = solve(&LinSystem::new(a, b)?).map_err(|err| match err {
        YbeError::Singular(_) | YbeError::Inconsistent(_) => YbeError::Degenerate,
        other => other,
    })?;
    let mut p = Matrix::zeros(n, n);
    let mut nn = Matrix::zeros(n, n);
    for (&(is_p, r, c), v) in unknowns.iter().zip(x) {
        if is_p {
            p[(r, c)] = v;
        } else {
            nn[(r, c)] = v;
        }
    }
    if &(&kt.commutator(&p)? + &nn) != g {
        return Err(YbeError::Verification("Frobenius split does not reconstruct G".into()));
    }
    Ok((p, nn))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cuspidal::build_j;
    use crate::scalar::rat;

    #[test]
    fn n2_gram() {
        let j = build_j(1, 1).unwrap();
        let f = frobenius_gram(&j.m, 1, 2).unwrap();
        assert_eq!(f.basis.elements, vec![BasisIndex::Cartan(1), BasisIndex::Unit(1, 2)]);
        let expect = Matrix::from_rows(vec![vec![rat(0, 1), rat(2, 1)], vec![rat(-2, 1), rat(0, 1)]]).unwrap();
        assert_eq!(f.gram, expect);
        assert!(f.is_skew());
    }

    #[test]
    fn zero_k_degenerate() {
        let f = frobenius_gram(&Matrix::zeros(3, 3), 1, 3).unwrap();
        assert!(f.det.is_zero());
        assert!(!f.is_nondegenerate());
    }

    #[test]
    fn parabolic_dimension() {
        for n in 2..7 {
            for e in 1..n {
                assert_eq!(ParabolicBasis::new(n, e).unwrap().dim(), n * n - e * (n - e) - 1);
            }
        }
    }

    #[test]
    fn split_of_nilradical_element() {
        let j = build_j(2, 1).unwrap();
        let g = Matrix::unit(3, 1, 3);
        let (p, nn) = frobenius_split(&g, &j.m, 2).unwrap();
        assert!(p.is_zero());
        assert_eq!(nn, g);
    }

    #[test]
    fn split_n2_lower_unit() {
        let j = build_j(1, 1).unwrap();
        let g = Matrix::unit(2, 2, 1);
        let (p, nn) = frobenius_split(&g, &j.m, 1).unwrap();
        assert_eq!(&j.m.transpose().commutator(&p).unwrap() + &nn, g);
    }

    #[test]
    fn split_degenerate_k() {
        let g = Matrix::unit(2, 2, 1);
        assert_eq!(frobenius_split(&g, &Matrix::zeros(2, 2), 1).unwrap_err(), YbeError::Degenerate);
    }
}
