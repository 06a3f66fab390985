use std::collections::BTreeMap;

use crate::error::{Result, YbeError};
use crate::linalg::Matrix;
use crate::scalar::{Cplx, Rat, Scalar};

/// Element of gl(n)⊗gl(n): the key (i,j,k,l) (1-based) carries the coefficient
/// of e_{i,j}⊗e_{k,l}. Zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq)]
pub struct GlTensor2<S> {
    n: usize,
    terms: BTreeMap<[usize; 4], S>,
}

/// Element of gl(n)⊗gl(n)⊗gl(n), keyed by six 1-based indices.
#[derive(Clone, Debug, PartialEq)]
pub struct GlTensor3<S> {
    n: usize,
    terms: BTreeMap<[usize; 6], S>,
}

fn check_range<const K: usize>(n: usize, key: &[usize; K]) -> Result<()> {
    if key.iter().all(|&i| i >= 1 && i <= n) {
        Ok(())
    } else {
        Err(YbeError::IndexOutOfRange(format!("{key:?} for n={n}")))
    }
}

impl<S: Scalar> GlTensor2<S> {
    pub fn zero(n: usize) -> Self {
        GlTensor2 { n, terms: BTreeMap::new() }
    }

    pub fn from_terms(n: usize, terms: impl IntoIterator<Item = ([usize; 4], S)>) -> Result<Self> {
        let mut t = Self::zero(n);
        for (k, v) in terms {
            t.add_term(k, v)?;
        }
        Ok(t)
    }

    /// a⊗b.
    pub fn outer(a: &Matrix<S>, b: &Matrix<S>) -> Self {
        let mut t = Self::zero(a.rows());
        t.add_outer(a, b, &S::one());
        t
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn terms(&self) -> &BTreeMap<[usize; 4], S> {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, key: &[usize; 4]) -> S {
        self.terms.get(key).cloned().unwrap_or_else(S::zero)
    }

    pub fn add_term(&mut self, key: [usize; 4], c: S) -> Result<()> {
        check_range(self.n, &key)?;
        accumulate(&mut self.terms, key, c);
        Ok(())
    }

    /// self += coeff·(a⊗b).
    pub fn add_outer(&mut self, a: &Matrix<S>, b: &Matrix<S>, coeff: &S) {
        assert_eq!(a.rows(), self.n, "outer product size");
        assert_eq!(b.rows(), self.n, "outer product size");
        for (i, j, u) in a.nonzero() {
            let cu = coeff.clone() * u.clone();
            for (k, l, v) in b.nonzero() {
                accumulate(&mut self.terms, [i + 1, j + 1, k + 1, l + 1], cu.clone() * v.clone());
            }
        }
    }

    pub fn add_scaled(&mut self, other: &Self, s: &S) -> Result<()> {
        if other.n != self.n {
            return Err(YbeError::SizeMismatch(self.n, other.n));
        }
        for (k, v) in &other.terms {
            accumulate(&mut self.terms, *k, v.clone() * s.clone());
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        let mut out = self.clone();
        out.add_scaled(other, &S::one())?;
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        let mut out = self.clone();
        out.add_scaled(other, &-S::one())?;
        Ok(out)
    }

    pub fn scale(&self, s: &S) -> Self {
        let mut out = Self::zero(self.n);
        for (k, v) in &self.terms {
            accumulate(&mut out.terms, *k, v.clone() * s.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        self.scale(&-S::one())
    }

    /// τ(a⊗b) = b⊗a.
    pub fn swap(&self) -> Self {
        GlTensor2 {
            n: self.n,
            terms: self.terms.iter().map(|(&[i, j, k, l], v)| ([k, l, i, j], v.clone())).collect(),
        }
    }

    /// Largest coefficient magnitude.
    pub fn max_norm(&self) -> f64 {
        self.terms.values().map(Scalar::magnitude).fold(0.0, f64::max)
    }

    pub fn map<T: Scalar>(&self, f: impl Fn(&S) -> T) -> GlTensor2<T> {
        let mut out = GlTensor2::zero(self.n);
        for (k, v) in &self.terms {
            accumulate(&mut out.terms, *k, f(v));
        }
        out
    }

    /// Both partial traces vanish, i.e. the tensor lies in sl(n)⊗sl(n).
    pub fn is_sl(&self) -> bool {
        let mut left: BTreeMap<[usize; 2], S> = BTreeMap::new();
        let mut right: BTreeMap<[usize; 2], S> = BTreeMap::new();
        for (&[i, j, k, l], v) in &self.terms {
            if i == j {
                accumulate(&mut left, [k, l], v.clone());
            }
            if k == l {
                accumulate(&mut right, [i, j], v.clone());
            }
        }
        left.is_empty() && right.is_empty()
    }
}

impl GlTensor2<Rat> {
    pub fn to_complex(&self) -> GlTensor2<Cplx> {
        self.map(Cplx::from_rat)
    }
}

impl<S: Scalar> GlTensor3<S> {
    pub fn zero(n: usize) -> Self {
        GlTensor3 { n, terms: BTreeMap::new() }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn terms(&self) -> &BTreeMap<[usize; 6], S> {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, key: &[usize; 6]) -> S {
        self.terms.get(key).cloned().unwrap_or_else(S::zero)
    }

    pub fn add_term(&mut self, key: [usize; 6], c: S) -> Result<()> {
        check_range(self.n, &key)?;
        accumulate(&mut self.terms, key, c);
        Ok(())
    }

    pub fn max_norm(&self) -> f64 {
        self.terms.values().map(Scalar::magnitude).fold(0.0, f64::max)
    }

    pub(crate) fn from_map(n: usize, terms: BTreeMap<[usize; 6], S>) -> Self {
        GlTensor3 { n, terms }
    }
}

pub(crate) fn accumulate<K: Ord, S: Scalar>(map: &mut BTreeMap<K, S>, key: K, c: S) {
    if c.is_zero() {
        return;
    }
    use std::collections::btree_map::Entry;
    match map.entry(key) {
        Entry::Vacant(slot) => {
            slot.insert(c);
        }
        Entry::Occupied(mut slot) => {
            let v = slot.get().clone() + c;
            if v.is_zero() {
                slot.remove();
            } else {
                *slot.get_mut() = v;
            }
        }
    }
}

/// τ(a⊗b) = b⊗a extended linearly.
pub fn swap_tensor<S: Scalar>(r: &GlTensor2<S>) -> GlTensor2<S> {
    r.swap()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat;

    #[test]
    fn zero_coefficients_never_stored() {
        let mut t = GlTensor2::<Rat>::zero(2);
        t.add_term([1, 2, 2, 1], rat(1, 2)).unwrap();
        t.add_term([1, 2, 2, 1], rat(-1, 2)).unwrap();
        assert!(t.is_zero());
        t.add_term([1, 1, 1, 1], rat(0, 1)).unwrap();
        assert!(t.is_zero());
    }

    #[test]
    fn out_of_range_rejected() {
        let mut t = GlTensor2::<Rat>::zero(2);
        assert!(t.add_term([0, 1, 1, 1], rat(1, 1)).is_err());
        assert!(t.add_term([1, 3, 1, 1], rat(1, 1)).is_err());
    }

    #[test]
    fn swap_unit_tensor() {
        let t = GlTensor2::from_terms(2, [([1, 2, 2, 1], rat(1, 1))]).unwrap();
        assert_eq!(swap_tensor(&t), GlTensor2::from_terms(2, [([2, 1, 1, 2], rat(1, 1))]).unwrap());
    }
}
