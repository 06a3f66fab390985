use std::fmt;

use num_traits::Zero;

use crate::error::Result;
use crate::linalg::Matrix;
use crate::require_coprime;
use crate::scalar::Rat;

/// The 0/1 matrix J_(e,d) of size e+d.
#[derive(Clone, Debug, PartialEq)]
pub struct JMatrix {
    pub e: usize,
    pub d: usize,
    pub m: Matrix<Rat>,
}

impl JMatrix {
    pub fn n(&self) -> usize {
        self.e + self.d
    }

    /// Positions of the ones, 1-based, row-major.
    pub fn ones(&self) -> Vec<(usize, usize)> {
        self.m.nonzero().map(|(r, c, _)| (r + 1, c + 1)).collect()
    }

    pub fn grid(&self) -> Vec<Vec<u8>> {
        (0..self.n()).map(|r| (0..self.n()).map(|c| u8::from(!self.m.get(r, c).is_zero())).collect()).collect()
    }
}

impl fmt::Display for JMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in self.grid() {
            let cells: Vec<String> = row.iter().map(u8::to_string).collect();
            writeln!(f, "{}", cells.join(" "))?;
        }
        Ok(())
    }
}

/// J_(e,d) from the Euclidean descent (e,d) → … → (1,1), starting at
/// J_(1,1) = e_{1,2} and undoing one subtraction step at a time:
///
/// - (a, a+b) from J_(a,b) = (A1 A2; 0 A3) with blocks a, a, b:
///   ( 0 1 0 ; 0 A1 A2 ; 0 0 A3 );
/// - (a+b, b) from J_(a,b) with blocks a, b, b:
///   ( A1 A2 0 ; 0 A3 1 ; 0 0 0 ).
pub fn build_j(e: usize, d: usize) -> Result<JMatrix> {
    require_coprime(e, d)?;
    let mut chain = vec![(e, d)];
    while *chain.last().expect("nonempty") != (1, 1) {
        let (a, b) = *chain.last().expect("nonempty");
        chain.push(if a > b { (a - b, b) } else { (a, b - a) });
    }
    let mut j = Matrix::<Rat>::unit(2, 1, 2);
    for &(p, q) in chain.iter().rev().skip(1) {
        let (a, b) = if p > q { (p - q, q) } else { (p, q - p) };
        let n = p + q;
        let mut m = Matrix::zeros(n, n);
        let one = Rat::from_integer(1.into());
        if p == a {
            for i in 0..a {
                m[(i, a + i)] = one.clone();
            }
            for (r, c, v) in j.nonzero() {
                m[(a + r, a + c)] = v.clone();
            }
        } else {
            for (r, c, v) in j.nonzero() {
                m[(r, c)] = v.clone();
            }
            for i in 0..b {
                m[(a + i, a + b + i)] = one.clone();
            }
        }
        j = m;
    }
    Ok(JMatrix { e, d, m: j })
}

/// Block regions for the split n = e + d (1-based indices): I upper-right,
/// II lower-right, III lower-left, IV upper-left.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Region {
    I,
    II,
    III,
    IV,
}

pub fn region(i: usize, j: usize, e: usize) -> Region {
    match (i <= e, j <= e) {
        (true, false) => Region::I,
        (false, false) => Region::II,
        (false, true) => Region::III,
        (true, true) => Region::IV,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::YbeError;

    #[test]
    fn base_case() {
        assert_eq!(build_j(1, 1).unwrap().ones(), vec![(1, 2)]);
    }

    #[test]
    fn worked_examples() {
        assert_eq!(build_j(1, 2).unwrap().ones(), vec![(1, 2), (2, 3)]);
        assert_eq!(build_j(2, 1).unwrap().ones(), vec![(1, 2), (2, 3)]);
        assert_eq!(build_j(3, 2).unwrap().ones(), vec![(1, 2), (2, 3), (2, 4), (3, 5)]);
    }

    #[test]
    fn non_coprime() {
        assert_eq!(build_j(2, 2).unwrap_err(), YbeError::NotCoprime(2, 2));
        assert!(build_j(0, 1).is_err());
    }

    #[test]
    fn regions() {
        assert_eq!(region(1, 3, 2), Region::I);
        assert_eq!(region(3, 3, 2), Region::II);
        assert_eq!(region(3, 1, 2), Region::III);
        assert_eq!(region(2, 1, 2), Region::IV);
    }
}
