use num_traits::{One, Zero};

use crate::lie::basis::{cartan_duals, cartan_h};
use crate::lie::tensor::GlTensor2;
use crate::linalg::{rank, Matrix};
use crate::scalar::{Cplx, Rat, Scalar};

/// c = Σ_{i≠j} e_{i,j}⊗e_{j,i} + Σ_l ȟ_l⊗h_l.
pub fn casimir(n: usize) -> GlTensor2<Rat> {
    assert!(n >= 2, "casimir needs n >= 2");
    let mut c = GlTensor2::zero(n);
    for i in 1..=n {
        for j in 1..=n {
            if i != j {
                c.add_term([i, j, j, i], Rat::one()).expect("in range");
            }
        }
    }
    let duals = cartan_duals(n).expect("Cartan Gram matrix is invertible");
    for (l, dual) in duals.iter().enumerate() {
        c.add_outer(dual, &cartan_h(n, l + 1), &Rat::one());
    }
    c
}

/// Matrix of a ↦ Σ c_{ijkl} tr(a·e_{i,j}) e_{k,l} on row-major coordinates.
pub fn induced_map<S: Scalar>(r: &GlTensor2<S>) -> Matrix<S> {
    let n = r.n();
    let mut m = Matrix::<S>::zeros(n * n, n * n);
    for (&[i, j, k, l], v) in r.terms() {
        // tr(a e_{ij}) = a_{ji}
        let row = (k - 1) * n + (l - 1);
        let col = (j - 1) * n + (i - 1);
        m[(row, col)] = m.get(row, col).clone() + v.clone();
    }
    m
}

fn full_rank_target(n: usize, sl: bool) -> usize {
    if sl {
        n * n - 1
    } else {
        n * n
    }
}

/// Whether the induced map 𝔤→𝔤 is invertible (exact rank). Tensors in
/// sl⊗sl are judged on sl, anything else on gl.
pub fn nondegenerate(r: &GlTensor2<Rat>) -> bool {
    if r.is_zero() {
        return false;
    }
    rank(&induced_map(r)) == full_rank_target(r.n(), r.is_sl())
}

/// Numeric variant with a relative pivot tolerance.
pub fn nondegenerate_numeric(r: &GlTensor2<Cplx>, tol: f64) -> bool {
    if r.is_zero() {
        return false;
    }
    let target = full_rank_target(r.n(), numeric_is_sl(r, tol));
    numeric_rank(&induced_map(r), tol) == target
}

fn numeric_is_sl(r: &GlTensor2<Cplx>, tol: f64) -> bool {
    let n = r.n();
    let mut left = vec![Cplx::zero(); n * n];
    let mut right = vec![Cplx::zero(); n * n];
    for (&[i, j, k, l], v) in r.terms() {
        if i == j {
            left[(k - 1) * n + l - 1] += v;
        }
        if k == l {
            right[(i - 1) * n + j - 1] += v;
        }
    }
    let scale = r.max_norm().max(1.0);
    left.iter().chain(&right).all(|v| v.norm() <= tol * scale)
}

/// Rank by Gaussian elimination with partial pivoting.
pub(crate) fn numeric_rank(m: &Matrix<Cplx>, tol: f64) -> usize {
    let mut a: Vec<Vec<Cplx>> = (0..m.rows()).map(|r| m.row(r).to_vec()).collect();
    let scale = m.max_magnitude().max(f64::MIN_POSITIVE);
    let (rows, cols) = (m.rows(), m.cols());
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let p = (r..rows).max_by(|&i, &j| a[i][c].norm().total_cmp(&a[j][c].norm())).expect("rows left");
        if a[p][c].norm() <= tol * scale {
            continue;
        }
        a.swap(p, r);
        for i in r + 1..rows {
            let f = a[i][c] / a[r][c];
            if f.norm() == 0.0 {
                continue;
            }
            for k in c..cols {
                let t = a[r][k];
                a[i][k] -= f * t;
            }
        }
        r += 1;
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::trace_form;
    use crate::scalar::rat;

    #[test]
    fn casimir_n2_matches_printed_pole() {
        let h = cartan_h::<Rat>(2, 1);
        let mut expect = GlTensor2::outer(&h, &h).scale(&rat(1, 2));
        expect.add_term([1, 2, 2, 1], rat(1, 1)).unwrap();
        expect.add_term([2, 1, 1, 2], rat(1, 1)).unwrap();
        assert_eq!(casimir(2), expect);
    }

    #[test]
    fn casimir_equals_units_minus_trace_part() {
        for n in 2..6 {
            let mut t = GlTensor2::zero(n);
            for i in 1..=n {
                for j in 1..=n {
                    t.add_term([i, j, j, i], rat(1, 1)).unwrap();
                    t.add_term([i, i, j, j], rat(-1, n as i64)).unwrap();
                }
            }
            assert_eq!(casimir(n), t);
        }
    }

    #[test]
    fn casimir_is_symmetric_and_reproducing() {
        for n in 2..5 {
            let c = casimir(n);
            assert_eq!(c.swap(), c);
            // contracting against a traceless a reproduces a
            let a = Matrix::from_fn(n, n, |r, s| if r == s { rat(0, 1) } else { rat((r * n + s) as i64, 3) });
            let mut image = Matrix::<Rat>::zeros(n, n);
            for (&[i, j, k, l], v) in c.terms() {
                let t = trace_form(&a, &Matrix::unit(n, i, j)).unwrap();
                image[(k - 1, l - 1)] = image.get(k - 1, l - 1).clone() + t * v;
            }
            assert_eq!(image, a);
        }
    }

    #[test]
    fn nondegeneracy_examples() {
        assert!(nondegenerate(&casimir(3)));
        assert!(!nondegenerate(&GlTensor2::zero(3)));
        let single = GlTensor2::from_terms(2, [([1, 2, 2, 1], rat(1, 1))]).unwrap();
        assert!(!nondegenerate(&single));
        assert!(nondegenerate_numeric(&casimir(3).to_complex(), 1e-12));
    }
}
