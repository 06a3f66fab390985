use std::collections::BTreeMap;
use std::f64::consts::PI;

use num_traits::{One, Zero};

use crate::error::{Result, YbeError};
use crate::lie::basis::trace_form;
use crate::lie::casimir::{casimir, numeric_rank};
use crate::lie::tensor::GlTensor2;
use crate::linalg::{Matrix, Poly};
use crate::require_coprime;
use crate::scalar::{Cplx, Rat};

const CHECK_TOL: f64 = 1e-10;

/// X = diag(1, ε, …, ε^{n−1}), Y the cyclic shift, ε = exp(2πi d/n), and the
/// families Z_{k,l} = Yᵏ X^{−l}, Z^∨_{k,l} = (1/n) Xˡ Y^{−k} over (k,l) ≠ (0,0).
#[derive(Clone, Debug)]
pub struct HeisenbergBasis {
    pub n: usize,
    pub d: usize,
    pub eps: Cplx,
    pub x: Matrix<Cplx>,
    pub y: Matrix<Cplx>,
    /// ((k, l), Z_{k,l}, Z^∨_{k,l})
    pub elements: Vec<((usize, usize), Matrix<Cplx>, Matrix<Cplx>)>,
}

fn root_power(n: usize, d: usize, m: i64) -> Cplx {
    let e = (d as i64 * m).rem_euclid(n as i64) as f64;
    Cplx::from_polar(1.0, 2.0 * PI * e / n as f64)
}

impl HeisenbergBasis {
    /// Builds the basis and validates the eigenvalue relations, linear
    /// independence and trace duality.
    pub fn new(n: usize, d: usize) -> Result<Self> {
        if d == 0 || d >= n {
            return Err(YbeError::IndexOutOfRange(format!("need 0 < d < n, got d={d}, n={n}")));
        }
        require_coprime(n, d)?;
        let eps = root_power(n, d, 1);
        let x = Matrix::from_fn(n, n, |r, c| if r == c { root_power(n, d, r as i64) } else { Cplx::zero() });
        let y = Matrix::from_fn(n, n, |r, c| if c == (r + 1) % n { Cplx::one() } else { Cplx::zero() });
        let inv_n = Cplx::new(1.0 / n as f64, 0.0);
        let mut elements = Vec::with_capacity(n * n - 1);
        for k in 0..n {
            for l in 0..n {
                if (k, l) == (0, 0) {
                    continue;
                }
                // Z[i, i+k] = ε^{−l(i+k)},  Z^∨[i, i−k] = ε^{l i}/n
                let z = Matrix::from_fn(n, n, |r, c| {
                    if c == (r + k) % n {
                        root_power(n, d, -((l * c) as i64))
                    } else {
                        Cplx::zero()
                    }
                });
                let zd = Matrix::from_fn(n, n, |r, c| {
                    if c == (r + n - k) % n {
                        root_power(n, d, (l * r) as i64) * inv_n
                    } else {
                        Cplx::zero()
                    }
                });
                elements.push(((k, l), z, zd));
            }
        }
        let basis = HeisenbergBasis { n, d, eps, x, y, elements };
        basis.validate()?;
        Ok(basis)
    }

    fn x_inv(&self) -> Matrix<Cplx> {
        self.x.map(|v| if v.is_zero() { *v } else { v.inv() })
    }

    fn y_inv(&self) -> Matrix<Cplx> {
        self.y.transpose()
    }

    /// g⁻¹·Z·g, the adjoint action under which the eigenvalue relations hold.
    pub fn ad(g: &Matrix<Cplx>, g_inv: &Matrix<Cplx>, z: &Matrix<Cplx>) -> Matrix<Cplx> {
        g_inv.matmul(z).and_then(|m| m.matmul(g)).expect("square")
    }

    fn validate(&self) -> Result<()> {
        let (n, d) = (self.n, self.d);
        let (xi, yi) = (self.x_inv(), self.y_inv());
        let close = |a: &Matrix<Cplx>, b: &Matrix<Cplx>| (a - b).max_magnitude() < CHECK_TOL;
        // the definitions as printed
        for ((k, l), z, zd) in &self.elements {
            let direct = self.y.pow(*k).matmul(&xi.pow(*l))?;
            let dual = self.x.pow(*l).matmul(&yi.pow(*k))?.scale(&Cplx::new(1.0 / n as f64, 0.0));
            if !close(&direct, z) || !close(&dual, zd) {
                return Err(YbeError::Verification(format!("Z_({k},{l}) construction")));
            }
            let ax = Self::ad(&self.x, &xi, z);
            let ay = Self::ad(&self.y, &yi, z);
            if !close(&ax, &z.scale(&root_power(n, d, *k as i64))) {
                return Err(YbeError::Verification(format!("ad(X) eigenvalue on Z_({k},{l})")));
            }
            if !close(&ay, &z.scale(&root_power(n, d, *l as i64))) {
                return Err(YbeError::Verification(format!("ad(Y) eigenvalue on Z_({k},{l})")));
            }
        }
        // ad(X), ad(Y) commute
        for (_, z, _) in &self.elements {
            let xy = Self::ad(&self.x, &xi, &Self::ad(&self.y, &yi, z));
            let yx = Self::ad(&self.y, &yi, &Self::ad(&self.x, &xi, z));
            if !close(&xy, &yx) {
                return Err(YbeError::Verification("ad(X), ad(Y) do not commute".into()));
            }
        }
        // duality tr(Z^∨_{k,l} Z_{k',l'}) = δ
        for (a, (_, _, zd)) in self.elements.iter().enumerate() {
            for (b, (_, z, _)) in self.elements.iter().enumerate() {
                let t = trace_form(zd, z)?;
                let expect = if a == b { 1.0 } else { 0.0 };
                if (t - Cplx::new(expect, 0.0)).norm() > CHECK_TOL {
                    return Err(YbeError::Verification("Heisenberg duality".into()));
                }
            }
        }
        // independence
        let coords = Matrix::from_fn(n * n, self.elements.len(), |r, c| self.elements[c].1.get(r / n, r % n).clone());
        if numeric_rank(&coords, CHECK_TOL) != n * n - 1 {
            return Err(YbeError::Verification("Z family not independent".into()));
        }
        for (_, z, _) in &self.elements {
            if z.trace().norm() > CHECK_TOL {
                return Err(YbeError::Verification("Z not traceless".into()));
            }
        }
        Ok(())
    }

    /// Z^∨_{k,l}⊗Z_{k,l}.
    pub fn dual_outer(&self, idx: usize) -> GlTensor2<Cplx> {
        let (_, z, zd) = &self.elements[idx];
        GlTensor2::outer(zd, z)
    }

    /// Σ Z^∨⊗Z in floating point; equals the Casimir up to rounding.
    pub fn casimir_sum(&self) -> GlTensor2<Cplx> {
        let mut acc = GlTensor2::zero(self.n);
        for idx in 0..self.elements.len() {
            acc.add_scaled(&self.dual_outer(idx), &Cplx::one()).expect("same n");
        }
        acc
    }
}

/// n-th cyclotomic polynomial over the rationals, by dividing tⁿ − 1 by Φ_m for m | n, m < n.
fn cyclotomic(n: usize) -> Poly {
    let mut p = Poly::monomial(Rat::one(), n);
    p = &p - &Poly::constant(Rat::one());
    for m in (1..n).filter(|m| n % m == 0) {
        let (q, r) = p.div_rem(&cyclotomic(m)).expect("nonzero divisor");
        debug_assert!(r.is_zero());
        p = q;
    }
    p
}

/// Exact check of Σ_{(k,l)} Z^∨_{k,l}⊗Z_{k,l} = casimir(n) in Q(ε) = Q[t]/Φ_n(t).
/// Every entry of Z and Z^∨ is a monomial in ε, so each tensor coefficient is a
/// rational combination of powers of ε that is reduced modulo Φ_n.
pub fn casimir_identity_exact(n: usize, d: usize) -> Result<bool> {
    if d == 0 || d >= n {
        return Err(YbeError::IndexOutOfRange(format!("need 0 < d < n, got d={d}, n={n}")));
    }
    require_coprime(n, d)?;
    let phi = cyclotomic(n);
    let inv_n = Rat::new(1.into(), (n as i64).into());
    // exponents of ε (mod n) with rational weights, per tensor key
    let mut acc: BTreeMap<[usize; 4], Vec<Rat>> = BTreeMap::new();
    for k in 0..n {
        for l in 0..n {
            if (k, l) == (0, 0) {
                continue;
            }
            for i in 0..n {
                let zd_col = (i + n - k) % n;
                let zd_pow = l * i;
                for r in 0..n {
                    let z_col = (r + k) % n;
                    // ε^{l i} · ε^{−l (r+k)} with ε = ζ^d, ζ = t
                    let pow = (d as i64 * (zd_pow as i64 - (l * z_col) as i64)).rem_euclid(n as i64) as usize;
                    let key = [i + 1, zd_col + 1, r + 1, z_col + 1];
                    let slot = acc.entry(key).or_insert_with(|| vec![Rat::zero(); n]);
                    slot[pow] += &inv_n;
                }
            }
        }
    }
    let target = casimir(n);
    let mut seen = 0usize;
    for (key, weights) in &acc {
        let (_, reduced) = Poly::new(weights.clone()).div_rem(&phi)?;
        let expect = target.coeff(key);
        let ok = match reduced.degree() {
            None => expect.is_zero(),
            Some(0) => reduced.coeff(0) == expect,
            Some(_) => false,
        };
        if !ok {
            return Ok(false);
        }
        if !expect.is_zero() {
            seen += 1;
        }
    }
    Ok(seen == target.len())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn n2_matrices() {
        let hb = HeisenbergBasis::new(2, 1).unwrap();
        assert!((hb.x.get(0, 0) - Cplx::one()).norm() < 1e-15);
        assert!((hb.x.get(1, 1) + Cplx::one()).norm() < 1e-15);
        assert_eq!(hb.y.get(0, 1), &Cplx::one());
        assert_eq!(hb.y.get(1, 0), &Cplx::one());
    }

    #[test]
    fn eigen_relations_n3() {
        let hb = HeisenbergBasis::new(3, 1).unwrap();
        let (xi, _) = (hb.x_inv(), ());
        for ((k, _), z, _) in &hb.elements {
            let lhs = HeisenbergBasis::ad(&hb.x, &xi, z);
            assert!((&lhs - &z.scale(&hb.eps.powi(*k as i32))).max_magnitude() < 1e-12);
        }
    }

    #[test]
    fn non_coprime_rejected() {
        assert_eq!(HeisenbergBasis::new(4, 2).unwrap_err(), YbeError::NotCoprime(4, 2));
        assert!(casimir_identity_exact(6, 3).is_err());
    }

    #[test]
    fn cyclotomic_polys() {
        assert_eq!(cyclotomic(1).coeffs().len(), 2);
        assert_eq!(cyclotomic(4), Poly::new(vec![Rat::one(), Rat::zero(), Rat::one()]));
        assert_eq!(cyclotomic(6).degree(), Some(2));
    }

    #[test]
    fn casimir_sum_exact_and_float() {
        for (n, d) in [(2, 1), (3, 1), (3, 2), (4, 3), (5, 2)] {
            assert!(casimir_identity_exact(n, d).unwrap(), "({n},{d})");
            let hb = HeisenbergBasis::new(n, d).unwrap();
            let diff = hb.casimir_sum().sub(&casimir(n).to_complex()).unwrap();
            assert!(diff.max_norm() < 1e-12);
        }
    }
}
