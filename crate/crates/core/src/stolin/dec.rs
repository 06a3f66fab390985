use std::collections::BTreeMap;

use num_traits::Zero;

use crate::cuspidal::{region, Region};
use crate::error::{Result, YbeError};
use crate::lie::{cartan_h, BasisIndex};
use crate::linalg::{Matrix, MatrixPoly};
use crate::require_coprime;
use crate::scalar::Rat;
use crate::stolin::parabolic::{frobenius_gram, frobenius_split};

/// Which of the four printed decomposition equations a solution satisfies.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DecEquation {
    /// e_{j,i} − [Kᵗ, P] + B = 0, (i,j) in II ∪ IV.
    Dec1,
    /// h_l − [Kᵗ, P] + B = 0.
    Dec2,
    /// [Kᵗ, e_{j,i} + P] = B, (i,j) in I, order 0.
    Dec3,
    /// e_{j,i} − [Kᵗ, P] + B = 0, (i,j) in I, order 1.
    Dec4,
}

/// One solved equation. `p` holds the blocks (A B̃; 0 D) ∈ 𝔭 and `b` the
/// upper-right block B, both as full n×n matrices.
#[derive(Clone, Debug)]
pub struct DecSolution {
    pub index: BasisIndex,
    pub order: u8,
    pub equation: DecEquation,
    pub p: Matrix<Rat>,
    pub b: Matrix<Rat>,
}

impl DecSolution {
    fn block(&self, m: &Matrix<Rat>, e: usize, want: Region) -> Matrix<Rat> {
        let n = m.rows();
        Matrix::from_fn(n, n, |r, c| {
            if region(r + 1, c + 1, e) == want {
                m.get(r, c).clone()
            } else {
                Rat::zero()
            }
        })
    }

    pub fn a_block(&self, e: usize) -> Matrix<Rat> {
        self.block(&self.p, e, Region::IV)
    }

    pub fn d_block(&self, e: usize) -> Matrix<Rat> {
        self.block(&self.p, e, Region::II)
    }

    pub fn b_tilde(&self, e: usize) -> Matrix<Rat> {
        self.block(&self.p, e, Region::I)
    }

    /// Left-hand side of the printed equation; zero for a valid solution.
    pub fn residual(&self, k: &Matrix<Rat>) -> Result<Matrix<Rat>> {
        let n = k.rows();
        let kt = k.transpose();
        let target = match self.index {
            BasisIndex::Unit(i, j) => Matrix::unit(n, j, i),
            BasisIndex::Cartan(l) => cartan_h(n, l),
        };
        Ok(match self.equation {
            DecEquation::Dec3 => &kt.commutator(&(&target + &self.p))? - &self.b,
            _ => &(&target - &kt.commutator(&self.p)?) + &self.b,
        })
    }

    /// (A B; 0 D) + z·(0 B̃; 0 0).
    pub fn w_element(&self, e: usize) -> MatrixPoly {
        let constant = &(&self.a_block(e) + &self.d_block(e)) + &self.b;
        MatrixPoly::constant(constant).add(&MatrixPoly::constant(self.b_tilde(e)).shift(1))
    }
}

/// All w_{(i,j;k)} and w_{(l;0)}, including the prescribed zeros.
#[derive(Clone, Debug)]
pub struct WElementSet {
    pub e: usize,
    pub d: usize,
    pub k: Matrix<Rat>,
    pub w: BTreeMap<(BasisIndex, u8), MatrixPoly>,
    pub solutions: Vec<DecSolution>,
}

impl WElementSet {
    pub fn n(&self) -> usize {
        self.e + self.d
    }

    pub fn get(&self, idx: BasisIndex, order: u8) -> MatrixPoly {
        self.w.get(&(idx, order)).cloned().unwrap_or_else(|| MatrixPoly::zero(self.n()))
    }

    /// Zeros where prescribed (region III, order 1 outside region I, Cartan
    /// order 1) and every element inside 𝔭 ∔ z𝔫.
    pub fn check_invariants(&self) -> Result<()> {
        let (n, e) = (self.n(), self.e);
        for (&(idx, order), w) in &self.w {
            let must_vanish = match idx {
                BasisIndex::Unit(i, j) => {
                    region(i, j, e) == Region::III || (order == 1 && region(i, j, e) != Region::I)
                }
                BasisIndex::Cartan(_) => order != 0,
            };
            if must_vanish && !w.is_zero() {
                return Err(YbeError::Verification(format!("w for {idx}, order {order} should vanish")));
            }
            if w.degree().unwrap_or(0) > 1 || !w.is_traceless() {
                return Err(YbeError::Verification(format!("w for {idx} not in p + z n")));
            }
            let c0 = w.coeff(0);
            let c1 = w.coeff(1);
            let bad0 = c0.nonzero().any(|(r, c, _)| region(r + 1, c + 1, e) == Region::III);
            let bad1 = c1.nonzero().any(|(r, c, _)| region(r + 1, c + 1, e) != Region::I);
            if bad0 || bad1 || c0.rows() != n {
                return Err(YbeError::Verification(format!("w for {idx} not in p + z n")));
            }
        }
        Ok(())
    }
}

fn solve_one(
    index: BasisIndex,
    order: u8,
    equation: DecEquation,
    g: &Matrix<Rat>,
    k: &Matrix<Rat>,
    e: usize,
) -> Result<DecSolution> {
    let (p, nn) = frobenius_split(g, k, e).map_err(|err| YbeError::NotUnique(format!("{index} order {order}: {err}")))?;
    let sol = DecSolution { index, order, equation, p, b: nn.scale(&-Rat::from_integer(1.into())) };
    if !sol.residual(k)?.is_zero() {
        return Err(YbeError::Verification(format!("{index} order {order}: residual nonzero")));
    }
    Ok(sol)
}

/// Solves the decomposition equations for every basis index and assembles the w-elements.
pub fn solve_dec(e: usize, d: usize, k: &Matrix<Rat>) -> Result<WElementSet> {
    require_coprime(e, d)?;
    let n = e + d;
    if !frobenius_gram(k, e, n)?.is_nondegenerate() {
        return Err(YbeError::Degenerate);
    }
    let kt = k.transpose();
    let mut w = BTreeMap::new();
    let mut solutions = Vec::new();
    for i in 1..=n {
        for j in 1..=n {
            if i == j {
                continue;
            }
            let idx = BasisIndex::Unit(i, j);
            let eji = Matrix::unit(n, j, i);
            match region(i, j, e) {
                Region::III => {
                    w.insert((idx, 0), MatrixPoly::zero(n));
                    w.insert((idx, 1), MatrixPoly::zero(n));
                }
                Region::II | Region::IV => {
                    let s = solve_one(idx, 0, DecEquation::Dec1, &eji, k, e)?;
                    w.insert((idx, 0), s.w_element(e));
                    w.insert((idx, 1), MatrixPoly::zero(n));
                    solutions.push(s);
                }
                Region::I => {
                    let g0 = kt.commutator(&eji)?.scale(&-Rat::from_integer(1.into()));
                    let s0 = solve_one(idx, 0, DecEquation::Dec3, &g0, k, e)?;
                    let s1 = solve_one(idx, 1, DecEquation::Dec4, &eji, k, e)?;
                    w.insert((idx, 0), s0.w_element(e));
                    w.insert((idx, 1), s1.w_element(e));
                    solutions.push(s0);
                    solutions.push(s1);
                }
            }
        }
    }
    for l in 1..n {
        let idx = BasisIndex::Cartan(l);
        let s = solve_one(idx, 0, DecEquation::Dec2, &cartan_h(n, l), k, e)?;
        w.insert((idx, 0), s.w_element(e));
        solutions.push(s);
    }
    let set = WElementSet { e, d, k: k.clone(), w, solutions };
    set.check_invariants()?;
    Ok(set)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cuspidal::build_j;

    #[test]
    fn region_three_is_zero() {
        let j = build_j(2, 1).unwrap();
        let set = solve_dec(2, 1, &j.m).unwrap();
        assert!(set.get(BasisIndex::Unit(3, 1), 0).is_zero());
        assert!(set.get(BasisIndex::Unit(3, 2), 1).is_zero());
    }

    #[test]
    fn every_solution_resubstitutes() {
        for (e, d) in [(1, 1), (2, 1), (1, 2), (3, 2)] {
            let j = build_j(e, d).unwrap();
            let set = solve_dec(e, d, &j.m).unwrap();
            for s in &set.solutions {
                assert!(s.residual(&j.m).unwrap().is_zero());
            }
        }
    }

    #[test]
    fn degenerate_k_rejected() {
        assert_eq!(solve_dec(1, 1, &Matrix::zeros(2, 2)).unwrap_err(), YbeError::Degenerate);
    }
}
