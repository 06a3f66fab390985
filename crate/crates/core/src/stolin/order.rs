use num_traits::{One, Zero};

use crate::cuspidal::{region, Region};
use crate::error::{Result, YbeError};
use crate::lie::{cartan_duals, cartan_h, casimir, GlTensor2};
use crate::linalg::{rank, solve_many, Matrix};
use crate::scalar::Rat;
use crate::stolin::laurent::{kac_pairing, LaurentMatrixSeries};

#[derive(Clone, Debug, PartialEq)]
pub enum OrderKind {
    /// z⁻¹𝔤[[z⁻¹]].
    Yang,
    /// η⁻¹(z⁻²𝔤[[z⁻¹]] ∔ V_ω)η for the triple (𝔤, e, ω_K).
    Stolin { e: usize, k: Matrix<Rat> },
}

/// Basis of W_lo = {w ∈ W : supp w ⊂ [lo, hi]}.
#[derive(Clone, Debug)]
pub struct OrderBasis {
    pub n: usize,
    pub kind: OrderKind,
    pub window: (i64, i64),
    pub elements: Vec<LaurentMatrixSeries>,
}

/// α-basis of 𝔤 (e_{i,j} then ȟ_l) with its trace duals (e_{j,i} then h_l).
fn alpha_basis(n: usize) -> Result<(Vec<Matrix<Rat>>, Vec<Matrix<Rat>>)> {
    let mut alpha = Vec::new();
    let mut dual = Vec::new();
    for i in 1..=n {
        for j in 1..=n {
            if i != j {
                alpha.push(Matrix::unit(n, i, j));
                dual.push(Matrix::unit(n, j, i));
            }
        }
    }
    for (l, hc) in cartan_duals(n)?.into_iter().enumerate() {
        alpha.push(hc);
        dual.push(cartan_h(n, l + 1));
    }
    Ok((alpha, dual))
}

fn sl_units(n: usize) -> Vec<Matrix<Rat>> {
    let mut out = Vec::new();
    for i in 1..=n {
        for j in 1..=n {
            if i != j {
                out.push(Matrix::unit(n, i, j));
            }
        }
    }
    out.extend((1..n).map(|l| cartan_h(n, l)));
    out
}

fn check_window(window: (i64, i64)) -> Result<()> {
    if window.0 > -3 || window.1 < 1 {
        return Err(YbeError::Truncation(format!(
            "order window [{}, {}] must contain [-3, 1]",
            window.0, window.1
        )));
    }
    Ok(())
}

/// Yang's order z⁻¹𝔤[[z⁻¹]] restricted to the window.
pub fn build_yang_order(n: usize, window: (i64, i64)) -> Result<OrderBasis> {
    check_window(window)?;
    let (lo, hi) = window;
    let mut elements = Vec::new();
    for m in 1..=-lo {
        for a in sl_units(n) {
            elements.push(LaurentMatrixSeries::monomial(&a, -m, lo, hi)?);
        }
    }
    Ok(OrderBasis { n, kind: OrderKind::Yang, window, elements })
}

/// η⁻¹Aη with η = diag(1_e, z·1_{n−e}): region I gains a factor z, region III loses one.
fn eta_shift(i: usize, j: usize, e: usize) -> i64 {
    match region(i, j, e) {
        Region::I => 1,
        Region::III => -1,
        _ => 0,
    }
}

fn conjugate_by_eta(terms: &[(i64, Matrix<Rat>)], e: usize, window: (i64, i64)) -> Result<LaurentMatrixSeries> {
    let n = terms[0].1.rows();
    let mut s = LaurentMatrixSeries::zero(n, window.0, window.1)?;
    for (p, a) in terms {
        for (r, c, v) in a.nonzero() {
            let q = p + eta_shift(r + 1, c + 1, e);
            let mut m = s.coeff(q);
            m = &m + &Matrix::unit(n, r + 1, c + 1).scale(v);
            s.set(q, m)?;
        }
    }
    Ok(s)
}

/// Basis of W = η⁻¹(z⁻²𝔤[[z⁻¹]] ∔ V_ω)η supported in `window`, where
/// V_ω = {b + z⁻¹[Kᵗ, b] : b ∈ 𝔤}.
pub fn build_order(k: &Matrix<Rat>, e: usize, n: usize, window: (i64, i64)) -> Result<OrderBasis> {
    check_window(window)?;
    if e == 0 || e >= n {
        return Err(YbeError::IndexOutOfRange(format!("parabolic index {e} for n={n}")));
    }
    if k.rows() != n || k.cols() != n {
        return Err(YbeError::SizeMismatch(n, k.rows()));
    }
    let (lo, _) = window;
    let kt = k.transpose();
    let mut elements = Vec::new();
    for b in sl_units(n) {
        let a = kt.commutator(&b)?;
        elements.push(conjugate_by_eta(&[(0, b), (-1, a)], e, window)?);
    }
    for m in 2..=(-lo + 1) {
        for u in sl_units(n) {
            let s = conjugate_by_eta(&[(-m, u.clone())], e, window);
            // units pushed below the window are not in W_lo
            match s {
                Ok(s) => elements.push(s),
                Err(YbeError::Truncation(_)) => continue,
                Err(err) => return Err(err),
            }
        }
    }
    let basis = OrderBasis { n, kind: OrderKind::Stolin { e, k: k.clone() }, window, elements };
    if basis.elements.len() as i64 != (-lo) * (n * n - 1) as i64 {
        return Err(YbeError::DimensionMismatch {
            expected: (-lo) as usize * (n * n - 1),
            found: basis.elements.len(),
            context: "order basis in window".into(),
        });
    }
    Ok(basis)
}

impl OrderBasis {
    pub fn dim(&self) -> usize {
        self.elements.len()
    }

    /// Every element lies in z⁻¹𝔫̄[[z⁻¹]] ⊕ 𝔩[[z⁻¹]] ⊕ z𝔫[[z⁻¹]] (𝔩 the block-diagonal Levi part).
    pub fn check_sandwich(&self) -> Result<()> {
        let e = match &self.kind {
            OrderKind::Stolin { e, .. } => *e,
            OrderKind::Yang => return self.check_max_degree(|_, _| -1),
        };
        self.check_max_degree(|i, j| match region(i, j, e) {
            Region::I => 1,
            Region::III => -1,
            _ => 0,
        })
    }

    fn check_max_degree(&self, bound: impl Fn(usize, usize) -> i64) -> Result<()> {
        for (idx, s) in self.elements.iter().enumerate() {
            for p in s.support() {
                for (r, c, _) in s.coeff(p).nonzero() {
                    if p > bound(r + 1, c + 1) {
                        return Err(YbeError::Verification(format!(
                            "order element {idx} has entry ({}, {}) at z^{p}",
                            r + 1,
                            c + 1
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    /// kac_pairing(u, v) = 0 for all basis pairs.
    pub fn check_isotropic(&self) -> Result<()> {
        for (a, u) in self.elements.iter().enumerate() {
            for (b, v) in self.elements.iter().enumerate().skip(a) {
                let p = kac_pairing(u, v)?;
                if !p.is_zero() {
                    return Err(YbeError::Verification(format!("order elements {a}, {b} pair to {p}")));
                }
            }
        }
        Ok(())
    }

    /// W_lo together with 𝔤 ⊗ {1, z} spans every traceless element of the window.
    pub fn check_complement(&self) -> Result<()> {
        let (lo, hi) = self.window;
        let n = self.n;
        let mut cols: Vec<LaurentMatrixSeries> = self.elements.clone();
        for p in 0..=hi {
            for u in sl_units(n) {
                cols.push(LaurentMatrixSeries::monomial(&u, p, lo, hi)?);
            }
        }
        let len = (hi - lo + 1) as usize;
        let rows = len * n * n;
        let m = Matrix::from_fn(rows, cols.len(), |r, c| {
            let p = lo + (r / (n * n)) as i64;
            let q = r % (n * n);
            cols[c].coeff(p).get(q / n, q % n).clone()
        });
        let expected = len * (n * n - 1);
        let found = rank(&m);
        if found != expected || cols.len() != expected {
            return Err(YbeError::DimensionMismatch { expected, found, context: "W + g[z] in window".into() });
        }
        Ok(())
    }

    /// β_{l,k} for k = 0..=k_max: the elements of W_lo with ⟨β_{l,k}, α_{l'} z^{k'}⟩ = δ_{ll'}δ_{kk'}.
    pub fn dual_elements(&self, k_max: usize) -> Result<Vec<Vec<LaurentMatrixSeries>>> {
        let (lo, _) = self.window;
        let levels = (-lo) as usize;
        if k_max + 1 > levels {
            return Err(YbeError::Truncation(format!("dual element z^-{} not in window starting at {lo}", k_max + 1)));
        }
        let (alpha, _) = alpha_basis(self.n)?;
        let dim = alpha.len();
        let probes: Vec<LaurentMatrixSeries> = (0..levels)
            .flat_map(|kp| alpha.iter().map(move |a| (kp, a)))
            .map(|(kp, a)| LaurentMatrixSeries::monomial(a, kp as i64, 0, levels as i64))
            .collect::<Result<_>>()?;
        let mut gram = Matrix::zeros(probes.len(), self.elements.len());
        for (r, probe) in probes.iter().enumerate() {
            for (c, w) in self.elements.iter().enumerate() {
                let v = kac_pairing(w, probe)?;
                if !v.is_zero() {
                    gram = set_entry(gram, r, c, v);
                }
            }
        }
        let rhs: Vec<Vec<Rat>> = (0..=k_max)
            .flat_map(|k| (0..dim).map(move |l| k * dim + l))
            .map(|row| (0..probes.len()).map(|r| if r == row { Rat::one() } else { Rat::zero() }).collect())
            .collect();
        let sols = solve_many(&gram, &rhs).map_err(|err| match err {
            YbeError::Singular(_) | YbeError::Inconsistent(_) => {
                YbeError::NotUnique(format!("pairing system between W and g[z] in window: {err}"))
            }
            other => other,
        })?;
        let (lo, hi) = self.window;
        let mut out = vec![Vec::with_capacity(dim); k_max + 1];
        for (row, coeffs) in sols.iter().enumerate() {
            let mut beta = LaurentMatrixSeries::zero(self.n, lo, hi)?;
            for (c, w) in coeffs.iter().zip(&self.elements) {
                if !c.is_zero() {
                    beta = beta.add(&w.scale(c))?;
                }
            }
            out[row / dim].push(beta);
        }
        Ok(out)
    }
}

fn set_entry(m: Matrix<Rat>, r: usize, c: usize, v: Rat) -> Matrix<Rat> {
    let (rows, cols) = (m.rows(), m.cols());
    let mut data = m.to_vec();
    data[r * cols + c] = v;
    Matrix::from_vec(rows, cols, data).expect("same shape")
}

/// Truncated r_W(x, y) = Σ_{k ≤ k_max} xᵏ Σ_l α_l ⊗ β_{l,k}(y), split as
/// β_{l,k} = z^{−k−1}α_l^∨ + w_{l,k}.
#[derive(Clone, Debug)]
pub struct SeriesR {
    /// Σ_k xᵏ Σ_l α_l ⊗ w_{l,k}(y).
    pub polynomial: GlTensor2<Rat>,
    /// Tensor coefficient of xᵏ y^{−k−1}, for k = 0..=k_max.
    pub pole_coeffs: Vec<GlTensor2<Rat>>,
    pub partial_sum: GlTensor2<Rat>,
    /// w_{l,k} as coefficient lists [w_0, w_1, ...] in z.
    pub w: Vec<Vec<Vec<Matrix<Rat>>>>,
}

pub fn series_r(order: &OrderBasis, k_max: usize, x: &Rat, y: &Rat) -> Result<SeriesR> {
    if y.is_zero() {
        return Err(YbeError::Pole("series evaluated at y = 0".into()));
    }
    let n = order.n;
    let (alpha, dual) = alpha_basis(n)?;
    let betas = order.dual_elements(k_max)?;
    let mut polynomial = GlTensor2::zero(n);
    let mut pole_coeffs = Vec::with_capacity(k_max + 1);
    let mut w_all = Vec::with_capacity(k_max + 1);
    let mut xk = Rat::one();
    for (k, row) in betas.iter().enumerate() {
        let mut pole = GlTensor2::zero(n);
        let mut w_row = Vec::with_capacity(row.len());
        for (l, beta) in row.iter().enumerate() {
            let (lo, _) = beta.window();
            for p in lo..0 {
                let expect = if p == -(k as i64) - 1 { dual[l].clone() } else { Matrix::zeros(n, n) };
                if beta.coeff(p) != expect {
                    return Err(YbeError::Verification(format!(
                        "dual element ({l}, {k}) has unexpected principal part at z^{p}"
                    )));
                }
            }
            pole.add_outer(&alpha[l], &beta.coeff(-(k as i64) - 1), &Rat::one());
            let w = beta.nonnegative_part();
            let mut wy = Matrix::zeros(n, n);
            let mut yp = Rat::one();
            for c in &w {
                wy = &wy + &c.scale(&yp);
                yp *= y;
            }
            polynomial.add_outer(&alpha[l], &wy, &xk);
            w_row.push(w);
        }
        pole_coeffs.push(pole);
        w_all.push(w_row);
        xk *= x;
    }
    let mut partial_sum = polynomial.clone();
    let mut xk = Rat::one();
    let mut yk = Rat::one() / y;
    for pole in &pole_coeffs {
        partial_sum.add_scaled(pole, &(&xk * &yk))?;
        xk *= x;
        yk /= y;
    }
    Ok(SeriesR { polynomial, pole_coeffs, partial_sum, w: w_all })
}

impl SeriesR {
    /// w_{l,k} vanishes for every k ≥ 2.
    pub fn w_vanishes_beyond_first_order(&self) -> bool {
        self.w.iter().skip(2).all(|row| row.iter().all(|w| w.iter().all(Matrix::is_zero)))
    }

    /// Every pole coefficient equals the Casimir element.
    pub fn pole_is_casimir(&self) -> bool {
        let c = casimir(self.polynomial.n());
        self.pole_coeffs.iter().all(|p| *p == c)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cuspidal::build_j;
    use crate::scalar::rat;
    use crate::stolin::assemble::StolinR;

    #[test]
    fn yang_order_gives_yang_solution() {
        let order = build_yang_order(2, (-5, 1)).unwrap();
        order.check_isotropic().unwrap();
        order.check_complement().unwrap();
        order.check_sandwich().unwrap();
        let s = series_r(&order, 3, &rat(1, 3), &rat(2, 1)).unwrap();
        assert!(s.polynomial.is_zero());
        assert!(s.pole_is_casimir());
    }

    #[test]
    fn stolin_order_n2() {
        let k = build_j(1, 1).unwrap().m;
        let order = build_order(&k, 1, 2, (-5, 1)).unwrap();
        order.check_isotropic().unwrap();
        order.check_complement().unwrap();
        order.check_sandwich().unwrap();
        let (x, y) = (rat(1, 3), rat(2, 1));
        let s = series_r(&order, 2, &x, &y).unwrap();
        assert!(s.pole_is_casimir());
        assert!(s.w_vanishes_beyond_first_order());
        let direct = StolinR::new(1, 1, &k).unwrap().polynomial_part(&x, &y);
        assert_eq!(s.polynomial, direct);
    }

    #[test]
    fn window_too_small() {
        assert!(matches!(build_yang_order(2, (-2, 1)), Err(YbeError::Truncation(_))));
        let order = build_yang_order(2, (-3, 1)).unwrap();
        assert!(matches!(series_r(&order, 3, &rat(1, 1), &rat(2, 1)), Err(YbeError::Truncation(_))));
    }
}
