use std::collections::{BTreeMap, BTreeSet};

use num_traits::{One, Zero};

use crate::cuspidal::assemble::CuspidalR;
use crate::error::{Result, YbeError};
use crate::lie::GlTensor2;
use crate::linalg::{interpolate, Poly};
use crate::require_coprime;
use crate::scalar::{rat, Rat};

const MAX_DEGREE: usize = 8;

/// Certified polynomial part s(x,y) = r(x,y) − c/(y−x). For each tensor key
/// the entry at index a is the coefficient of xᵃ, a polynomial in y.
#[derive(Clone, Debug)]
pub struct AnsatzCertificate {
    pub e: usize,
    pub d: usize,
    pub degree_bound: usize,
    pub s: BTreeMap<[usize; 4], Vec<Poly>>,
    pub checked_at: (Rat, Rat),
}

impl AnsatzCertificate {
    pub fn n(&self) -> usize {
        self.e + self.d
    }

    pub fn eval(&self, x: &Rat, y: &Rat) -> GlTensor2<Rat> {
        let mut t = GlTensor2::zero(self.n());
        for (key, by_x) in &self.s {
            let mut xp = Rat::one();
            let mut acc = Rat::zero();
            for p in by_x {
                acc += &xp * p.eval(y);
                xp *= x;
            }
            t.add_term(*key, acc).expect("keys come from a valid tensor");
        }
        t
    }

    /// Largest x-degree and y-degree over all coefficients.
    pub fn degrees(&self) -> (usize, usize) {
        let mut dx = 0;
        let mut dy = 0;
        for by_x in self.s.values() {
            for (a, p) in by_x.iter().enumerate() {
                if let Some(b) = p.degree() {
                    dx = dx.max(a);
                    dy = dy.max(b);
                }
            }
        }
        (dx, dy)
    }
}

fn try_bound(e: usize, d: usize, bound: usize) -> Result<BTreeMap<[usize; 4], Vec<Poly>>> {
    let count = bound + 2;
    let xs: Vec<Rat> = (0..count).map(|k| rat(k as i64, 1)).collect();
    let ys: Vec<Rat> = (0..count).map(|k| rat(2 * k as i64 + 1, 2)).collect();
    let mut grid: Vec<Vec<GlTensor2<Rat>>> = Vec::with_capacity(count);
    let mut keys = BTreeSet::new();
    for x in &xs {
        let r = CuspidalR::new(e, d, x)?;
        let row = ys.iter().map(|y| r.regular_part(y)).collect::<Result<Vec<_>>>()?;
        for t in &row {
            keys.extend(t.terms().keys().copied());
        }
        grid.push(row);
    }
    let mut s = BTreeMap::new();
    for key in keys {
        // y-polynomial for each sample x
        let mut in_y = Vec::with_capacity(count);
        for row in &grid {
            let samples: Vec<(Rat, Rat)> = ys.iter().cloned().zip(row.iter().map(|t| t.coeff(&key))).collect();
            in_y.push(interpolate(&samples, bound)?);
        }
        // each y-coefficient as a polynomial in x
        let mut xy = vec![vec![Rat::zero(); bound + 1]; bound + 1];
        for b in 0..=bound {
            let samples: Vec<(Rat, Rat)> = xs.iter().cloned().zip(in_y.iter().map(|p| p.coeff(b))).collect();
            let px = interpolate(&samples, bound)?;
            for (a, row) in xy.iter_mut().enumerate() {
                row[b] = px.coeff(a);
            }
        }
        let mut by_x: Vec<Poly> = xy.into_iter().map(Poly::new).collect();
        while by_x.last().is_some_and(Poly::is_zero) {
            by_x.pop();
        }
        s.insert(key, by_x);
    }
    Ok(s)
}

/// Reconstructs s(x,y) by interpolation on integer x and half-integer y,
/// doubling the degree bound until the spare samples validate, then checks the
/// reconstruction against a direct evaluation at an unused point.
pub fn r_ansatz(e: usize, d: usize) -> Result<AnsatzCertificate> {
    require_coprime(e, d)?;
    let mut bound = 1;
    loop {
        match try_bound(e, d, bound) {
            Ok(s) => {
                let cert = AnsatzCertificate { e, d, degree_bound: bound, s, checked_at: (rat(-7, 3), rat(11, 5)) };
                let (x, y) = &cert.checked_at;
                let direct = CuspidalR::new(e, d, x)?.regular_part(y)?;
                if cert.eval(x, y) != direct {
                    return Err(YbeError::NotPolynomial(bound));
                }
                return Ok(cert);
            }
            Err(YbeError::NotPolynomial(_)) if bound < MAX_DEGREE => bound *= 2,
            Err(err) => return Err(err),
        }
    }
}
