use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Result, YbeError};
use crate::linalg::Matrix;
use crate::scalar::Rat;

/// A·x = b over the rationals. Overdetermined systems are fine as long as they are consistent.
#[derive(Clone, Debug)]
pub struct LinSystem {
    pub a: Matrix<Rat>,
    pub b: Vec<Rat>,
}

impl LinSystem {
    pub fn new(a: Matrix<Rat>, b: Vec<Rat>) -> Result<Self> {
        if a.rows() != b.len() {
            return Err(YbeError::SizeMismatch(a.rows(), b.len()));
        }
        Ok(LinSystem { a, b })
    }
}

/// Integer row-echelon form produced by fraction-free elimination.
struct Echelon {
    rows: Vec<Vec<BigInt>>,
    /// (row, column) of each pivot, columns strictly increasing.
    pivots: Vec<(usize, usize)>,
    /// Product of the row scalings used to clear denominators, and the permutation sign.
    row_scale: BigInt,
    sign: i32,
}

fn integer_rows(a: &Matrix<Rat>, extra: &[Vec<Rat>]) -> (Vec<Vec<BigInt>>, BigInt) {
    let mut scale = BigInt::one();
    let rows = (0..a.rows())
        .map(|r| {
            let mut row: Vec<Rat> = a.row(r).to_vec();
            row.extend(extra.iter().map(|col| col[r].clone()));
            let l = row.iter().fold(BigInt::one(), |acc, v| acc.lcm(v.denom()));
            scale *= &l;
            row.iter().map(|v| (v * Rat::from_integer(l.clone())).to_integer()).collect()
        })
        .collect();
    (rows, scale)
}

/// Bareiss elimination restricted to the first `elim_cols` columns. Among the
/// candidate rows the pivot of smallest magnitude is taken.
fn bareiss(mut rows: Vec<Vec<BigInt>>, elim_cols: usize) -> (Vec<Vec<BigInt>>, Vec<(usize, usize)>, i32) {
    let m = rows.len();
    let width = rows.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut prev = BigInt::one();
    let mut sign = 1;
    let mut r = 0;
    for c in 0..elim_cols {
        if r == m {
            break;
        }
        let best = (r..m)
            .filter(|&i| !rows[i][c].is_zero())
            .min_by(|&i, &j| rows[i][c].abs().cmp(&rows[j][c].abs()));
        let Some(p) = best else { continue };
        if p != r {
            rows.swap(p, r);
            sign = -sign;
        }
        let (head, tail) = rows.split_at_mut(r + 1);
        let pivot_row = &head[r];
        let pv = pivot_row[c].clone();
        for row in tail.iter_mut() {
            let f = row[c].clone();
            for k in c..width {
                let v = &pv * &row[k] - &f * &pivot_row[k];
                debug_assert!((&v % &prev).is_zero(), "Bareiss division must be exact");
                row[k] = v / &prev;
            }
        }
        // rows above the pivot band keep their scale; the bound for the next step is the pivot
        prev = pv;
        pivots.push((r, c));
        r += 1;
    }
    (rows, pivots, sign)
}

fn echelon(a: &Matrix<Rat>, extra: &[Vec<Rat>]) -> Echelon {
    let (rows, row_scale) = integer_rows(a, extra);
    let (rows, pivots, sign) = bareiss(rows, a.cols());
    Echelon { rows, pivots, row_scale, sign }
}

/// Back-substitution on the echelon rows for right-hand side column `rhs`
/// (None for the homogeneous system) with the given free-variable assignment.
fn back_substitute(ech: &Echelon, ncols: usize, rhs: Option<usize>, free: &[(usize, Rat)]) -> Vec<Rat> {
    let mut x = vec![Rat::zero(); ncols];
    for (c, v) in free {
        x[*c] = v.clone();
    }
    for &(r, c) in ech.pivots.iter().rev() {
        let row = &ech.rows[r];
        let mut acc = match rhs {
            Some(k) => Rat::from_integer(row[ncols + k].clone()),
            None => Rat::zero(),
        };
        for k in c + 1..ncols {
            if !row[k].is_zero() && !x[k].is_zero() {
                acc -= Rat::from_integer(row[k].clone()) * &x[k];
            }
        }
        x[c] = acc / Rat::from_integer(row[c].clone());
    }
    x
}

fn residual_is_zero(a: &Matrix<Rat>, x: &[Rat], b: &[Rat]) -> bool {
    a.mat_vec(x).map(|ax| ax.iter().zip(b).all(|(u, v)| u == v)).unwrap_or(false)
}

/// Unique exact solution of A·x = b, re-verified by substitution.
pub fn solve(sys: &LinSystem) -> Result<Vec<Rat>> {
    let mut out = solve_many(&sys.a, &[sys.b.clone()])?;
    Ok(out.pop().expect("one right-hand side"))
}

/// Solves A·x = b_k for every right-hand side with a single elimination.
pub fn solve_many(a: &Matrix<Rat>, rhs: &[Vec<Rat>]) -> Result<Vec<Vec<Rat>>> {
    for b in rhs {
        if b.len() != a.rows() {
            return Err(YbeError::SizeMismatch(a.rows(), b.len()));
        }
    }
    let ncols = a.cols();
    let ech = echelon(a, rhs);
    let rank = ech.pivots.len();
    for (k, _) in rhs.iter().enumerate() {
        if ech.rows[rank..].iter().any(|row| !row[ncols + k].is_zero()) {
            return Err(YbeError::Inconsistent(format!("right-hand side {k} not in the column space")));
        }
    }
    if rank < ncols {
        return Err(YbeError::Singular(format!("rank {rank} < {ncols} unknowns")));
    }
    let mut sols = Vec::with_capacity(rhs.len());
    for (k, b) in rhs.iter().enumerate() {
        let x = back_substitute(&ech, ncols, Some(k), &[]);
        if !residual_is_zero(a, &x, b) {
            return Err(YbeError::Verification("solution failed re-substitution".into()));
        }
        sols.push(x);
    }
    Ok(sols)
}

/// Basis of the null space, one vector per free column (that column set to 1).
pub fn kernel(a: &Matrix<Rat>) -> Result<Vec<Vec<Rat>>> {
    let ncols = a.cols();
    let ech = echelon(a, &[]);
    let pivot_cols: Vec<usize> = ech.pivots.iter().map(|p| p.1).collect();
    let zero = vec![Rat::zero(); a.rows()];
    let mut basis = Vec::new();
    for f in (0..ncols).filter(|c| !pivot_cols.contains(c)) {
        let v = back_substitute(&ech, ncols, None, &[(f, Rat::one())]);
        if !residual_is_zero(a, &v, &zero) {
            return Err(YbeError::Verification("kernel vector failed re-substitution".into()));
        }
        basis.push(v);
    }
    Ok(basis)
}

pub fn rank(a: &Matrix<Rat>) -> usize {
    echelon(a, &[]).pivots.len()
}

pub fn determinant(a: &Matrix<Rat>) -> Result<Rat> {
    if !a.is_square() {
        return Err(YbeError::SizeMismatch(a.rows(), a.cols()));
    }
    let n = a.rows();
    if n == 0 {
        return Ok(Rat::one());
    }
    let ech = echelon(a, &[]);
    if ech.pivots.len() < n {
        return Ok(Rat::zero());
    }
    let last = ech.rows[n - 1][n - 1].clone() * BigInt::from(ech.sign);
    Ok(Rat::new(last, ech.row_scale))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat;

    fn m(rows: &[&[i64]]) -> Matrix<Rat> {
        Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&v| rat(v, 1)).collect()).collect()).unwrap()
    }

    #[test]
    fn identity_system() {
        let b = vec![rat(3, 2), rat(-1, 1), rat(0, 1)];
        let sys = LinSystem::new(Matrix::identity(3), b.clone()).unwrap();
        assert_eq!(solve(&sys).unwrap(), b);
    }

    #[test]
    fn two_by_two() {
        let sys = LinSystem::new(m(&[&[1, 1], &[1, -1]]), vec![rat(2, 1), rat(0, 1)]).unwrap();
        assert_eq!(solve(&sys).unwrap(), vec![rat(1, 1), rat(1, 1)]);
    }

    #[test]
    fn singular_and_inconsistent_are_distinct() {
        let a = m(&[&[1, 1], &[2, 2]]);
        let err = solve(&LinSystem::new(a.clone(), vec![rat(1, 1), rat(2, 1)]).unwrap()).unwrap_err();
        assert!(matches!(err, YbeError::Singular(_)));
        let err = solve(&LinSystem::new(a, vec![rat(1, 1), rat(3, 1)]).unwrap()).unwrap_err();
        assert!(matches!(err, YbeError::Inconsistent(_)));
    }

    #[test]
    fn overdetermined_consistent() {
        let a = m(&[&[1, 0], &[0, 1], &[1, 1]]);
        let x = solve(&LinSystem::new(a, vec![rat(1, 3), rat(1, 2), rat(5, 6)]).unwrap()).unwrap();
        assert_eq!(x, vec![rat(1, 3), rat(1, 2)]);
    }

    #[test]
    fn kernels() {
        assert_eq!(kernel(&Matrix::zeros(3, 3)).unwrap().len(), 3);
        assert!(kernel(&m(&[&[2, 1], &[1, 1]])).unwrap().is_empty());
        let k = kernel(&m(&[&[1, 2, 3], &[2, 4, 6]])).unwrap();
        assert_eq!(k.len(), 2);
    }

    #[test]
    fn determinants() {
        assert_eq!(determinant(&m(&[&[0, 2], &[-2, 0]])).unwrap(), rat(4, 1));
        assert_eq!(determinant(&m(&[&[1, 2], &[2, 4]])).unwrap(), rat(0, 1));
        let a = Matrix::from_rows(vec![
            vec![rat(1, 2), rat(1, 3), rat(0, 1)],
            vec![rat(0, 1), rat(2, 1), rat(1, 5)],
            vec![rat(1, 1), rat(0, 1), rat(3, 1)],
        ])
        .unwrap();
        // 1/2(6 - 0) - 1/3(0 - 1/5) + 0
        assert_eq!(determinant(&a).unwrap(), rat(3, 1) + rat(1, 15));
        assert_eq!(determinant(&m(&[&[0, 1], &[1, 0]])).unwrap(), rat(-1, 1));
    }
}
