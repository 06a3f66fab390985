use num_traits::{One, Zero};

use crate::cuspidal::jmatrix::build_j;
use crate::error::{Result, YbeError};
use crate::lie::LinearMapGl;
use crate::linalg::Matrix;
use crate::scalar::Rat;

/// The automorphism A ↦ −D·(w Aᵗ w)·D⁻¹ of sl(n), where w Aᵗ w is the
/// transpose along the anti-diagonal and D = diag(±1) alternates along the
/// edges of the support graph of J_(d,e). It sends J_(e,d) to J_(d,e).
pub fn reflection_gauge(e: usize, d: usize) -> Result<LinearMapGl> {
    let target = build_j(d, e)?;
    let n = e + d;
    let mut sign: Vec<Option<i64>> = vec![None; n];
    for start in 0..n {
        if sign[start].is_some() {
            continue;
        }
        sign[start] = Some(1);
        let mut stack = vec![start];
        while let Some(a) = stack.pop() {
            let sa = sign[a].expect("visited");
            for b in 0..n {
                if target.m.get(a, b).is_zero() && target.m.get(b, a).is_zero() {
                    continue;
                }
                match sign[b] {
                    None => {
                        sign[b] = Some(-sa);
                        stack.push(b);
                    }
                    Some(sb) if sb == sa => {
                        return Err(YbeError::Verification("support graph of J is not bipartite".into()))
                    }
                    Some(_) => {}
                }
            }
        }
    }
    let dm = Matrix::from_fn(n, n, |r, c| if r == c { Rat::from_integer(sign[r].expect("all visited").into()) } else { Rat::zero() });
    let conj = LinearMapGl::conjugation(&dm, &dm)?;
    let flip = LinearMapGl::anti_transpose(n).scale(&-Rat::one());
    conj.compose(&flip)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn maps_j_to_swapped_j() {
        for (e, d) in [(1, 1), (2, 1), (1, 3), (3, 2), (2, 5)] {
            let g = reflection_gauge(e, d).unwrap();
            assert_eq!(g.apply(&build_j(e, d).unwrap().m).unwrap(), build_j(d, e).unwrap().m);
            assert!(g.is_lie_homomorphism());
        }
    }
}
