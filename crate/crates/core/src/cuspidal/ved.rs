use num_traits::Zero;

use crate::error::{Result, YbeError};
use crate::linalg::{Matrix, MatrixPoly};
use crate::scalar::Rat;

/// Degree mask of V_{e,d}: the constant part is a full matrix, the z-part
/// vanishes on the upper-right e×d block and the z²-part lives only on the
/// lower-left d×e block. Members are traceless in the constant and z parts.
///
/// Writing F = (W X; Y Z) + z(W' 0; Y' Z') + z²(0 0; Y'' 0), the matrices
/// entering the defining equation are F₀ = (W' X; Y'' Z') and F_ε = (W 0; Y' Z).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct VedShape {
    pub e: usize,
    pub d: usize,
}

/// One free coordinate of V_{e,d}: coefficient of z^deg at 0-based (row, col).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Slot {
    pub deg: usize,
    pub row: usize,
    pub col: usize,
}

impl VedShape {
    pub fn new(e: usize, d: usize) -> Self {
        VedShape { e, d }
    }

    pub fn n(&self) -> usize {
        self.e + self.d
    }

    fn upper_right(&self, r: usize, c: usize) -> bool {
        r < self.e && c >= self.e
    }

    fn lower_left(&self, r: usize, c: usize) -> bool {
        r >= self.e && c < self.e
    }

    pub fn allows(&self, deg: usize, r: usize, c: usize) -> bool {
        match deg {
            0 => true,
            1 => !self.upper_right(r, c),
            2 => self.lower_left(r, c),
            _ => false,
        }
    }

    /// All coordinates in (degree, row, col) order.
    pub fn slots(&self) -> Vec<Slot> {
        let n = self.n();
        let mut out = Vec::new();
        for deg in 0..3 {
            for row in 0..n {
                for col in 0..n {
                    if self.allows(deg, row, col) {
                        out.push(Slot { deg, row, col });
                    }
                }
            }
        }
        out
    }

    /// Degree mask and trace conditions.
    pub fn check(&self, f: &MatrixPoly) -> Result<()> {
        if f.n() != self.n() {
            return Err(YbeError::SizeMismatch(self.n(), f.n()));
        }
        for (deg, m) in f.coeffs().iter().enumerate() {
            for (r, c, _) in m.nonzero() {
                if !self.allows(deg, r, c) {
                    return Err(YbeError::Shape(format!(
                        "z^{deg} coefficient at ({},{}) outside V_({},{})",
                        r + 1,
                        c + 1,
                        self.e,
                        self.d
                    )));
                }
            }
        }
        if !f.coeff(0).trace().is_zero() || !f.coeff(1).trace().is_zero() {
            return Err(YbeError::Shape("constant or z part has nonzero trace".into()));
        }
        Ok(())
    }

    /// (F₀, F_ε) read off the blocks without any conformity check.
    pub(crate) fn f0_feps_raw(&self, f: &MatrixPoly) -> (Matrix<Rat>, Matrix<Rat>) {
        let n = self.n();
        let (c0, c1, c2) = (f.coeff(0), f.coeff(1), f.coeff(2));
        let mut f0 = Matrix::zeros(n, n);
        let mut feps = Matrix::zeros(n, n);
        for r in 0..n {
            for c in 0..n {
                if self.upper_right(r, c) {
                    f0[(r, c)] = c0.get(r, c).clone();
                } else if self.lower_left(r, c) {
                    f0[(r, c)] = c2.get(r, c).clone();
                    feps[(r, c)] = c1.get(r, c).clone();
                } else {
                    f0[(r, c)] = c1.get(r, c).clone();
                    feps[(r, c)] = c0.get(r, c).clone();
                }
            }
        }
        (f0, feps)
    }
}

/// (F₀, F_ε) of a member of V_{e,d}; shape violations are errors.
pub fn extract_f0_feps(shape: &VedShape, f: &MatrixPoly) -> Result<(Matrix<Rat>, Matrix<Rat>)> {
    shape.check(f)?;
    Ok(shape.f0_feps_raw(f))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::cartan_h;

    fn constant(n: usize, i: usize, j: usize) -> MatrixPoly {
        MatrixPoly::constant(Matrix::unit(n, i, j))
    }

    #[test]
    fn lower_left_constant_enters_neither() {
        let (f0, fe) = extract_f0_feps(&VedShape::new(1, 1), &constant(2, 2, 1)).unwrap();
        assert!(f0.is_zero() && fe.is_zero());
    }

    #[test]
    fn upper_right_constant_lands_in_f0() {
        let (f0, fe) = extract_f0_feps(&VedShape::new(1, 1), &constant(2, 1, 2)).unwrap();
        assert_eq!(f0, Matrix::unit(2, 1, 2));
        assert!(fe.is_zero());
    }

    #[test]
    fn z_times_h() {
        let f = MatrixPoly::constant(cartan_h(2, 1)).shift(1);
        let (f0, fe) = extract_f0_feps(&VedShape::new(1, 1), &f).unwrap();
        assert_eq!(f0, cartan_h(2, 1));
        assert!(fe.is_zero());
    }

    #[test]
    fn violations() {
        let shape = VedShape::new(1, 1);
        assert!(extract_f0_feps(&shape, &constant(2, 1, 2).shift(1)).is_err());
        assert!(extract_f0_feps(&shape, &constant(2, 1, 1)).is_err());
        assert!(extract_f0_feps(&shape, &constant(2, 2, 1).shift(3)).is_err());
    }

    #[test]
    fn slot_count() {
        // n² + (n² − e·d) + e·d
        let s = VedShape::new(2, 3);
        assert_eq!(s.slots().len(), 50);
    }
}
