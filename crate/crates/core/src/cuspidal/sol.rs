use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::cuspidal::jmatrix::{build_j, JMatrix};
use crate::cuspidal::ved::VedShape;
use crate::error::{Result, YbeError};
use crate::lie::{sl_basis, BasisIndex};
use crate::linalg::{kernel, solve_many, Matrix, MatrixPoly};
use crate::scalar::Rat;

/// Basis of Sol((e,d),x) = { F ∈ V_{e,d} : [F₀,J] + x·F₀ + F_ε = 0 }.
#[derive(Clone, Debug)]
pub struct SolBasis {
    pub e: usize,
    pub d: usize,
    pub x: Rat,
    pub j: JMatrix,
    pub basis: Vec<MatrixPoly>,
}

fn constraint(shape: &VedShape, j: &Matrix<Rat>, x: &Rat, f: &MatrixPoly) -> Matrix<Rat> {
    let (f0, feps) = shape.f0_feps_raw(f);
    let bracket = f0.commutator(j).expect("square");
    &(&bracket + &f0.scale(x)) + &feps
}

impl SolBasis {
    pub fn n(&self) -> usize {
        self.e + self.d
    }

    pub fn shape(&self) -> VedShape {
        VedShape::new(self.e, self.d)
    }

    /// Membership test: shape, trace conditions and the defining equation.
    pub fn contains(&self, f: &MatrixPoly) -> bool {
        let shape = self.shape();
        shape.check(f).is_ok() && constraint(&shape, &self.j.m, &self.x, f).is_zero()
    }
}

/// Exact kernel of the defining constraint inside V_{e,d}. A dimension other
/// than n²−1 is a hard error.
pub fn sol_space(e: usize, d: usize, x: &Rat) -> Result<SolBasis> {
    let j = build_j(e, d)?;
    let n = e + d;
    let shape = VedShape::new(e, d);
    let slots = shape.slots();
    // n² equation entries, then the traces of the constant and z parts
    let rows = n * n + 2;
    let mut a = Matrix::zeros(rows, slots.len());
    for (col, s) in slots.iter().enumerate() {
        let mut coeffs = vec![Matrix::zeros(n, n); s.deg + 1];
        coeffs[s.deg][(s.row, s.col)] = Rat::one();
        let f = MatrixPoly::from_coeffs(n, coeffs)?;
        for (r, c, v) in constraint(&shape, &j.m, x, &f).nonzero() {
            a[(r * n + c, col)] = v.clone();
        }
        if s.row == s.col && s.deg < 2 {
            a[(n * n + s.deg, col)] = Rat::one();
        }
    }
    let ker = kernel(&a)?;
    if ker.len() != n * n - 1 {
        return Err(YbeError::DimensionMismatch {
            expected: n * n - 1,
            found: ker.len(),
            context: format!("Sol(({e},{d}), x={x})"),
        });
    }
    let mut basis = Vec::with_capacity(ker.len());
    for v in ker {
        let mut coeffs = vec![Matrix::zeros(n, n); 3];
        for (s, c) in slots.iter().zip(v) {
            coeffs[s.deg][(s.row, s.col)] = c;
        }
        basis.push(MatrixPoly::from_coeffs(n, coeffs)?.with_split(e, d)?);
    }
    let sol = SolBasis { e, d, x: x.clone(), j, basis };
    if let Some(bad) = sol.basis.iter().position(|f| !sol.contains(f)) {
        return Err(YbeError::Verification(format!("kernel vector {bad} not in Sol")));
    }
    Ok(sol)
}

/// res_x(F) = F(x).
pub fn res_map(f: &MatrixPoly, x: &Rat) -> Matrix<Rat> {
    f.eval(x)
}

/// ev_y(F) = F(y)/(y − x).
pub fn ev_map(f: &MatrixPoly, x: &Rat, y: &Rat) -> Result<Matrix<Rat>> {
    if x == y {
        return Err(YbeError::CoincidentPoints);
    }
    Ok(f.eval(y).scale(&(Rat::one() / (y - x))))
}

/// G^x_B for every sl basis element B: the unique G with B + G ∈ Sol((e,d),x) and G(x) = 0.
#[derive(Clone, Debug)]
pub struct GElements {
    pub e: usize,
    pub d: usize,
    pub x: Rat,
    pub map: BTreeMap<BasisIndex, MatrixPoly>,
}

impl GElements {
    pub fn get(&self, idx: &BasisIndex) -> Option<&MatrixPoly> {
        self.map.get(idx)
    }
}

pub fn g_elements(e: usize, d: usize, x: &Rat) -> Result<GElements> {
    let sol = sol_space(e, d, x)?;
    let n = sol.n();
    let images: Vec<Matrix<Rat>> = sol.basis.iter().map(|f| res_map(f, x)).collect();
    let r = Matrix::from_fn(n * n, images.len(), |row, col| images[col].get(row / n, row % n).clone());
    let targets = sl_basis(n);
    let rhs: Vec<Vec<Rat>> = targets.iter().map(|b| b.matrix::<Rat>(n).expect("in range").to_vec()).collect();
    let coeffs = solve_many(&r, &rhs).map_err(|err| match err {
        YbeError::Singular(m) | YbeError::Inconsistent(m) => {
            YbeError::NotUnique(format!("G-elements for ({e},{d}) at x={x}: {m}"))
        }
        other => other,
    })?;
    let mut map = BTreeMap::new();
    for (b, c) in targets.iter().zip(coeffs) {
        let f = c
            .iter()
            .zip(&sol.basis)
            .filter(|(ci, _)| !ci.is_zero())
            .fold(MatrixPoly::zero(n), |acc, (ci, bi)| acc.add(&bi.scale(ci)));
        let bm = b.matrix::<Rat>(n)?;
        let g = f.sub(&MatrixPoly::constant(bm));
        if !g.eval(x).is_zero() || !sol.contains(&f) {
            return Err(YbeError::Verification(format!("G-element for {b} fails its defining conditions")));
        }
        map.insert(*b, g);
    }
    Ok(GElements { e, d, x: x.clone(), map })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::rank;
    use crate::scalar::rat;

    #[test]
    fn dimensions() {
        assert_eq!(sol_space(1, 1, &rat(1, 1)).unwrap().basis.len(), 3);
        assert_eq!(sol_space(2, 1, &rat(0, 1)).unwrap().basis.len(), 8);
        assert_eq!(sol_space(2, 3, &rat(-5, 7)).unwrap().basis.len(), 24);
    }

    #[test]
    fn e21_in_every_sol_11() {
        for x in [rat(0, 1), rat(3, 4), rat(-2, 1)] {
            let sol = sol_space(1, 1, &x).unwrap();
            assert!(sol.contains(&MatrixPoly::constant(Matrix::unit(2, 2, 1))));
        }
    }

    #[test]
    fn res_spans_sl2() {
        let x = rat(1, 1);
        let sol = sol_space(1, 1, &x).unwrap();
        let images: Vec<_> = sol.basis.iter().map(|f| res_map(f, &x)).collect();
        let m = Matrix::from_fn(4, 3, |r, c| images[c].get(r / 2, r % 2).clone());
        assert_eq!(rank(&m), 3);
    }

    #[test]
    fn ev_and_res_on_constants() {
        let f = MatrixPoly::constant(Matrix::unit(2, 1, 2));
        assert_eq!(res_map(&f, &rat(4, 1)), Matrix::unit(2, 1, 2));
        assert_eq!(ev_map(&f, &rat(2, 1), &rat(3, 1)).unwrap(), Matrix::unit(2, 1, 2));
        assert_eq!(ev_map(&f, &rat(2, 1), &rat(2, 1)).unwrap_err(), YbeError::CoincidentPoints);
    }

    #[test]
    fn g_elements_11() {
        let g = g_elements(1, 1, &rat(1, 2)).unwrap();
        assert!(g.get(&BasisIndex::Unit(2, 1)).unwrap().is_zero());
        assert_eq!(g.map.len(), 3);
    }

    #[test]
    fn region_three_vanishes() {
        let g = g_elements(2, 1, &rat(2, 3)).unwrap();
        assert!(g.get(&BasisIndex::Unit(3, 1)).unwrap().is_zero());
        assert!(g.get(&BasisIndex::Unit(3, 2)).unwrap().is_zero());
    }
}
