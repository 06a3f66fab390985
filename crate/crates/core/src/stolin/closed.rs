use num_traits::One;

use crate::error::{Result, YbeError};
use crate::lie::{cartan_dual, cartan_h, casimir, GlTensor2};
use crate::linalg::Matrix;
use crate::scalar::{rat, Rat};

fn e(n: usize, i: usize, j: usize) -> Matrix<Rat> {
    Matrix::unit(n, i, j)
}

fn sum_units(n: usize, pairs: impl Iterator<Item = (usize, usize)>) -> Matrix<Rat> {
    pairs.fold(Matrix::zeros(n, n), |acc, (i, j)| &acc + &e(n, i, j))
}

/// Direct transcription of the closed formula for K = J_(n−1,1):
///
/// c/(y−x)
/// + x[e_{1,2}⊗ȟ_1 − Σ_{j=3}^{n} e_{1,j}⊗S_j] − y[ȟ_1⊗e_{1,2} − Σ_{j=3}^{n} S_j⊗e_{1,j}]
/// + Σ_{j=2}^{n−1} e_{1,j}⊗T_j + Σ_{i=2}^{n−1} e_{i,i+1}⊗ȟ_i − Σ_{j=2}^{n−1} T_j⊗e_{1,j} − Σ_{i=2}^{n−1} ȟ_i⊗e_{i,i+1}
/// + Σ_{i=2}^{n−2} Σ_{k=2}^{n−i} [U_{i,k}⊗e_{i,i+k} − e_{i,i+k}⊗U_{i,k}]
///
/// with S_j = Σ_{k=1}^{n−j+1} e_{j+k−1,k+1}, T_j = Σ_{k=1}^{n−j} e_{j+k,k+1},
/// U_{i,k} = Σ_{l=1}^{n−i−k+1} e_{i+k+l−1,l+i}.
pub fn closed_form_d1(n: usize, x: &Rat, y: &Rat) -> Result<GlTensor2<Rat>> {
    if n < 2 {
        return Err(YbeError::IndexOutOfRange(format!("closed form needs n >= 2, got {n}")));
    }
    if x == y {
        return Err(YbeError::CoincidentPoints);
    }
    let one = Rat::one();
    let neg = -Rat::one();
    let s_j = |j: usize| sum_units(n, (1..=n + 1 - j).map(move |k| (j + k - 1, k + 1)));
    let t_j = |j: usize| sum_units(n, (1..=n - j).map(move |k| (j + k, k + 1)));
    let u_ik = |i: usize, k: usize| sum_units(n, (1..=n + 1 - i - k).map(move |l| (i + k + l - 1, l + i)));
    let hc = |l: usize| cartan_dual(l, n).expect("1 <= l < n");

    let mut r = casimir(n).scale(&(Rat::one() / (y - x)));
    r.add_outer(&e(n, 1, 2), &hc(1), x);
    for j in 3..=n {
        r.add_outer(&e(n, 1, j), &s_j(j), &-x);
    }
    r.add_outer(&hc(1), &e(n, 1, 2), &-y);
    for j in 3..=n {
        r.add_outer(&s_j(j), &e(n, 1, j), y);
    }
    for j in 2..n {
        r.add_outer(&e(n, 1, j), &t_j(j), &one);
        r.add_outer(&t_j(j), &e(n, 1, j), &neg);
    }
    for i in 2..n {
        r.add_outer(&e(n, i, i + 1), &hc(i), &one);
        r.add_outer(&hc(i), &e(n, i, i + 1), &neg);
    }
    for i in 2..n.saturating_sub(1) {
        for k in 2..=n - i {
            r.add_outer(&u_ik(i, k), &e(n, i, i + k), &one);
            r.add_outer(&e(n, i, i + k), &u_ik(i, k), &neg);
        }
    }
    Ok(r)
}

/// The short n = 2 form as printed:
/// c/(y−x) + (x/2)·e_{1,2}⊗h − (y/2)·h⊗e_{2,1}.
pub fn printed_n2_form(x: &Rat, y: &Rat) -> Result<GlTensor2<Rat>> {
    if x == y {
        return Err(YbeError::CoincidentPoints);
    }
    let h = cartan_h(2, 1);
    let mut r = casimir(2).scale(&(Rat::one() / (y - x)));
    r.add_outer(&e(2, 1, 2), &h, &(x * rat(1, 2)));
    r.add_outer(&h, &e(2, 2, 1), &(-y * rat(1, 2)));
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::{cybe_lhs, unitarity_defect};

    #[test]
    fn n2_closed_form_differs_from_printed_short_form_only_in_last_term() {
        let (x, y) = (rat(1, 3), rat(2, 1));
        let closed = closed_form_d1(2, &x, &y).unwrap();
        let printed = printed_n2_form(&x, &y).unwrap();
        let h = cartan_h(2, 1);
        let mut corrected = printed.clone();
        corrected.add_outer(&h, &e(2, 2, 1), &(&y * rat(1, 2)));
        corrected.add_outer(&h, &e(2, 1, 2), &(-&y * rat(1, 2)));
        assert_eq!(closed, corrected);
        assert_ne!(closed, printed);
    }

    #[test]
    fn closed_form_is_unitary_with_casimir_pole() {
        for n in 2..6 {
            let (x, y) = (rat(-1, 2), rat(3, 7));
            let a = closed_form_d1(n, &x, &y).unwrap();
            let b = closed_form_d1(n, &y, &x).unwrap();
            assert!(unitarity_defect(&a, &b).unwrap().is_zero(), "n={n}");
        }
    }

    #[test]
    fn closed_form_solves_cybe() {
        for n in 2..5 {
            let (x1, x2, x3) = (rat(0, 1), rat(1, 1), rat(5, 2));
            let r = |a: &Rat, b: &Rat| closed_form_d1(n, a, b).unwrap();
            assert!(cybe_lhs(&r(&x1, &x2), &r(&x1, &x3), &r(&x2, &x3)).unwrap().is_zero(), "n={n}");
        }
    }

    #[test]
    fn printed_short_form_is_not_a_solution() {
        let (x1, x2, x3) = (rat(0, 1), rat(1, 1), rat(5, 2));
        let r = |a: &Rat, b: &Rat| printed_n2_form(a, b).unwrap();
        assert!(!cybe_lhs(&r(&x1, &x2), &r(&x1, &x3), &r(&x2, &x3)).unwrap().is_zero());
        assert!(!unitarity_defect(&r(&x1, &x2), &r(&x2, &x1)).unwrap().is_zero());
    }
}
