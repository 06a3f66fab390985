//! The classical Yang–Baxter residual. This is the only place where the
//! slot conventions are fixed:
//!
//! - r¹² = a⊗b⊗1, r¹³ = a⊗1⊗b, r²³ = 1⊗a⊗b for r = a⊗b;
//! - [r¹²(x₁,x₂), r¹³(x₁,x₃)] = Σ [a,c]⊗b⊗d  for r¹² = a⊗b, r¹³ = c⊗d;
//! - [r¹³(x₁,x₃), r²³(x₂,x₃)] = Σ a⊗c⊗[b,d] for r¹³ = a⊗b, r²³ = c⊗d;
//! - [r¹²(x₁,x₂), r²³(x₂,x₃)] = Σ a⊗[b,c]⊗d for r¹² = a⊗b, r²³ = c⊗d.

use std::collections::{BTreeMap, HashMap};

use crate::error::{Result, YbeError};
use crate::lie::tensor::{accumulate, GlTensor2, GlTensor3};
use crate::scalar::Scalar;

type Key = [usize; 4];

/// Terms grouped by one index of one slot, so bracket partners are found by lookup.
fn index_by<S: Scalar>(r: &GlTensor2<S>, pos: usize) -> HashMap<usize, Vec<(Key, S)>> {
    let mut out: HashMap<usize, Vec<(Key, S)>> = HashMap::new();
    for (k, v) in r.terms() {
        out.entry(k[pos]).or_default().push((*k, v.clone()));
    }
    out
}

/// [r12, r13] + [r13, r23] + [r12, r23] in gl(n)⊗gl(n)⊗gl(n).
pub fn cybe_lhs<S: Scalar>(r12: &GlTensor2<S>, r13: &GlTensor2<S>, r23: &GlTensor2<S>) -> Result<GlTensor3<S>> {
    let n = r12.n();
    for other in [r13.n(), r23.n()] {
        if other != n {
            return Err(YbeError::SizeMismatch(n, other));
        }
    }
    let mut out: BTreeMap<[usize; 6], S> = BTreeMap::new();

    // [a,c]⊗b⊗d: [e_{a1 a2}, e_{c1 c2}] = δ(a2,c1) e_{a1 c2} − δ(c2,a1) e_{c1 a2}
    let r13_by_c1 = index_by(r13, 0);
    let r13_by_c2 = index_by(r13, 1);
    for (&[a1, a2, b1, b2], u) in r12.terms() {
        for ([_, c2, d1, d2], v) in r13_by_c1.get(&a2).into_iter().flatten() {
            accumulate(&mut out, [a1, *c2, b1, b2, *d1, *d2], u.clone() * v.clone());
        }
        for ([c1, _, d1, d2], v) in r13_by_c2.get(&a1).into_iter().flatten() {
            accumulate(&mut out, [*c1, a2, b1, b2, *d1, *d2], -(u.clone() * v.clone()));
        }
    }

    // a⊗c⊗[b,d]
    let r23_by_d1 = index_by(r23, 2);
    let r23_by_d2 = index_by(r23, 3);
    for (&[a1, a2, b1, b2], u) in r13.terms() {
        for ([c1, c2, _, d2], v) in r23_by_d1.get(&b2).into_iter().flatten() {
            accumulate(&mut out, [a1, a2, *c1, *c2, b1, *d2], u.clone() * v.clone());
        }
        for ([c1, c2, d1, _], v) in r23_by_d2.get(&b1).into_iter().flatten() {
            accumulate(&mut out, [a1, a2, *c1, *c2, *d1, b2], -(u.clone() * v.clone()));
        }
    }

    // a⊗[b,c]⊗d
    let r23_by_c1 = index_by(r23, 0);
    let r23_by_c2 = index_by(r23, 1);
    for (&[a1, a2, b1, b2], u) in r12.terms() {
        for ([_, c2, d1, d2], v) in r23_by_c1.get(&b2).into_iter().flatten() {
            accumulate(&mut out, [a1, a2, b1, *c2, *d1, *d2], u.clone() * v.clone());
        }
        for ([c1, _, d1, d2], v) in r23_by_c2.get(&b1).into_iter().flatten() {
            accumulate(&mut out, [a1, a2, *c1, b2, *d1, *d2], -(u.clone() * v.clone()));
        }
    }

    Ok(GlTensor3::from_map(n, out))
}

/// CYBE residual of a two-variable family at (x₁, x₂, x₃).
pub fn cybe_residual<P, S, F>(r: F, x1: &P, x2: &P, x3: &P) -> Result<GlTensor3<S>>
where
    S: Scalar,
    F: Fn(&P, &P) -> Result<GlTensor2<S>>,
{
    cybe_lhs(&r(x1, x2)?, &r(x1, x3)?, &r(x2, x3)?)
}

/// r(x,y) + τ(r(y,x)); zero for a unitary solution.
pub fn unitarity_defect<S: Scalar>(r_xy: &GlTensor2<S>, r_yx: &GlTensor2<S>) -> Result<GlTensor2<S>> {
    r_xy.add(&r_yx.swap())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::casimir;
    use crate::scalar::{rat, Rat};

    #[test]
    fn zero_inputs() {
        let z = GlTensor2::<Rat>::zero(3);
        assert!(cybe_lhs(&z, &z, &z).unwrap().is_zero());
    }

    #[test]
    fn yang_is_a_solution() {
        for n in 2..5 {
            let c = casimir(n);
            let yang = |x: &Rat, y: &Rat| Ok(c.scale(&(Rat::from_integer(1.into()) / (y - x))));
            let res = cybe_residual(yang, &rat(0, 1), &rat(1, 1), &rat(2, 1)).unwrap();
            assert!(res.is_zero(), "n={n}");
        }
    }

    #[test]
    fn constant_casimir_fails() {
        // c alone is not a solution: the three brackets of a constant symmetric tensor do not cancel
        let c = casimir(2);
        assert!(!cybe_lhs(&c, &c, &c).unwrap().is_zero());
    }
}
