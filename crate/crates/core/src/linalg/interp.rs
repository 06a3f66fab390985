use num_traits::Zero;

use crate::error::{Result, YbeError};
use crate::linalg::Poly;
use crate::scalar::Rat;

/// Reconstructs the polynomial of degree ≤ `degree_bound` through the first
/// `degree_bound + 1` samples (Newton divided differences) and validates it on
/// every remaining sample. At least one spare sample is required.
pub fn interpolate(samples: &[(Rat, Rat)], degree_bound: usize) -> Result<Poly> {
    let needed = degree_bound + 2;
    if samples.len() < needed {
        return Err(YbeError::Shape(format!("{} samples, need at least {needed}", samples.len())));
    }
    let (fit, spare) = samples.split_at(degree_bound + 1);
    for (i, (xi, _)) in samples.iter().enumerate() {
        if samples[..i].iter().any(|(xj, _)| xj == xi) {
            return Err(YbeError::Shape("repeated sample point".into()));
        }
    }
    let xs: Vec<&Rat> = fit.iter().map(|(x, _)| x).collect();
    let mut dd: Vec<Rat> = fit.iter().map(|(_, y)| y.clone()).collect();
    for level in 1..fit.len() {
        for i in (level..fit.len()).rev() {
            dd[i] = (&dd[i] - &dd[i - 1]) / (xs[i] - xs[i - level]);
        }
    }
    // Newton form to monomial basis, innermost factor first
    let mut p = Poly::zero();
    for i in (0..fit.len()).rev() {
        let shift = Poly::new(vec![-xs[i].clone(), Rat::from_integer(1.into())]);
        p = &(&p * &shift) + &Poly::constant(dd[i].clone());
    }
    for (x, y) in spare {
        if &p.eval(x) != y {
            return Err(YbeError::NotPolynomial(degree_bound));
        }
    }
    debug_assert!(fit.iter().all(|(x, y)| (&p.eval(x) - y).is_zero()));
    Ok(p)
}

/// `count` distinct points `start, start + 1, ...`.
pub fn sample_points(start: &Rat, count: usize) -> Vec<Rat> {
    (0..count).map(|k| start + Rat::from_integer((k as i64).into())).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat;

    #[test]
    fn constant_samples() {
        let s: Vec<_> = (0..3).map(|k| (rat(k, 1), rat(5, 7))).collect();
        assert_eq!(interpolate(&s, 1).unwrap(), Poly::constant(rat(5, 7)));
    }

    #[test]
    fn square_with_spare_point() {
        let s: Vec<_> = (0..4).map(|k| (rat(k, 1), rat(k * k, 1))).collect();
        assert_eq!(interpolate(&s, 2).unwrap(), Poly::monomial(rat(1, 1), 2));
    }

    #[test]
    fn cubic_rejected_at_bound_two() {
        let s: Vec<_> = (0..4).map(|k| (rat(k, 1), rat(k * k * k, 1))).collect();
        assert_eq!(interpolate(&s, 2).unwrap_err(), YbeError::NotPolynomial(2));
    }

    #[test]
    fn too_few_samples() {
        let s = vec![(rat(0, 1), rat(1, 1)), (rat(1, 1), rat(1, 1))];
        assert!(interpolate(&s, 1).is_err());
    }
}
