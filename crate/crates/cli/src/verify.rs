//! Verification suites behind `ybe-forge verify`.

use std::f64::consts::PI;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use ybe_core::cuspidal::{assemble_r, build_j, reflection_gauge, CuspidalR};
use ybe_core::elliptic::{theta1, theta3, zoo_baxter, zoo_cherednik, zoo_stolin_rat, cybe_one_variable, BelavinR, ThetaContext};
use ybe_core::lie::{apply_gauge, casimir, casimir_identity_exact, cybe_lhs, swap_tensor};
use ybe_core::stolin::{compare_theorem_c, frobenius_gram, StolinR};
use ybe_core::{gcd, rat, Cplx, GlTensor2, GlTensor3, Rat, Result as CoreResult, Scalar};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Rational,
    Stolin,
    Elliptic,
    Zoo,
    All,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub status: Status,
    pub residual: f64,
    pub tolerance: f64,
    pub elapsed_ms: f64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct VerifyReport {
    pub suite: Suite,
    pub n_max: usize,
    pub status: Status,
    pub checks: Vec<Check>,
    pub elapsed_ms: f64,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

/// Outcome of one check body: (passed, residual, tolerance).
type Outcome = CoreResult<(bool, f64, f64)>;
type Task = (String, Box<dyn Fn() -> Outcome + Send + Sync>);

fn run(name: String, body: &(dyn Fn() -> Outcome + Send + Sync)) -> Check {
    let start = Instant::now();
    let out = body();
    let elapsed_ms = start.elapsed().as_secs_f64() * 1e3;
    match out {
        Ok((ok, residual, tolerance)) => Check {
            name,
            status: if ok { Status::Pass } else { Status::Fail },
            residual,
            tolerance,
            elapsed_ms,
            detail: None,
        },
        Err(err) => Check {
            name,
            status: Status::Fail,
            residual: f64::NAN,
            tolerance: 0.0,
            elapsed_ms,
            detail: Some(err.to_string()),
        },
    }
}

fn exact<S: Scalar>(t: &GlTensor2<S>) -> Outcome {
    Ok((t.is_zero(), t.max_norm(), 0.0))
}

fn exact3<S: Scalar>(t: &GlTensor3<S>) -> Outcome {
    Ok((t.is_zero(), t.max_norm(), 0.0))
}

fn numeric(residual: f64, tol: f64) -> Outcome {
    Ok((residual < tol, residual, tol))
}

/// r(x,y) + τ(r(y,x)); with the sign-flip hook, r(x,y) − τ(r(y,x)).
#[derive(Clone, Copy, Debug, Default)]
pub struct Verifier {
    pub sign_flip: bool,
}

impl Verifier {
    fn unitarity<S: Scalar>(&self, r_xy: &GlTensor2<S>, r_yx: &GlTensor2<S>) -> CoreResult<GlTensor2<S>> {
        let swapped = swap_tensor(r_yx);
        if self.sign_flip {
            r_xy.sub(&swapped)
        } else {
            r_xy.add(&swapped)
        }
    }

    pub fn run(&self, suite: Suite, n_max: usize) -> VerifyReport {
        let start = Instant::now();
        let tasks = match suite {
            Suite::Rational => self.rational(n_max),
            Suite::Stolin => self.stolin(n_max),
            Suite::Elliptic => self.elliptic(n_max),
            Suite::Zoo => self.zoo(),
            Suite::All => {
                let mut all = self.rational(n_max);
                all.extend(self.stolin(n_max));
                all.extend(self.elliptic(n_max));
                all.extend(self.zoo());
                all
            }
        };
        let checks: Vec<Check> = tasks.par_iter().map(|(name, body)| run(name.clone(), body.as_ref())).collect();
        let status = if checks.iter().all(|c| c.status == Status::Pass) { Status::Pass } else { Status::Fail };
        VerifyReport { suite, n_max, status, checks, elapsed_ms: start.elapsed().as_secs_f64() * 1e3 }
    }

    fn rational(&self, n_max: usize) -> Vec<Task> {
        let mut tasks: Vec<Task> = Vec::new();
        for (e, d) in coprime_pairs(n_max) {
            let v = *self;
            tasks.push((
                format!("rational({e},{d})/cybe"),
                Box::new(move || {
                    let (x1, x2, x3) = (rat(0, 1), rat(1, 2), rat(5, 3));
                    exact3(&cybe_lhs(&assemble_r(e, d, &x1, &x2)?, &assemble_r(e, d, &x1, &x3)?, &assemble_r(e, d, &x2, &x3)?)?)
                }),
            ));
            tasks.push((
                format!("rational({e},{d})/unitarity"),
                Box::new(move || {
                    let (x, y) = (rat(-1, 3), rat(2, 7));
                    exact(&v.unitarity(&assemble_r(e, d, &x, &y)?, &assemble_r(e, d, &y, &x)?)?)
                }),
            ));
            tasks.push((
                format!("rational({e},{d})/pole"),
                Box::new(move || {
                    let (x, y) = (rat(1, 4), rat(3, 2));
                    let r = CuspidalR::new(e, d, &x)?;
                    let pole = r.at(&y)?.sub(&r.regular_part(&y)?)?.scale(&(&y - &x));
                    exact(&pole.sub(&casimir(e + d))?)
                }),
            ));
            tasks.push((
                format!("rational({e},{d})/reflection"),
                Box::new(move || {
                    let (x, y) = (rat(2, 5), rat(-1, 2));
                    let g = reflection_gauge(e, d)?;
                    exact(&apply_gauge(&g, &g, &assemble_r(e, d, &x, &y)?)?.sub(&assemble_r(d, e, &x, &y)?)?)
                }),
            ));
        }
        tasks
    }

    fn stolin(&self, n_max: usize) -> Vec<Task> {
        let mut tasks: Vec<Task> = Vec::new();
        for (e, d) in coprime_pairs(n_max) {
            let v = *self;
            tasks.push((
                format!("stolin({e},{d})/frobenius"),
                Box::new(move || {
                    let form = frobenius_gram(&build_j(e, d)?.m, e, e + d)?;
                    Ok((form.is_nondegenerate(), ybe_core::scalar::rat_to_f64(&form.det), 0.0))
                }),
            ));
            tasks.push((
                format!("stolin({e},{d})/cybe"),
                Box::new(move || {
                    let r = StolinR::new(e, d, &build_j(e, d)?.m)?;
                    let (x1, x2, x3) = (rat(0, 1), rat(1, 2), rat(5, 3));
                    exact3(&cybe_lhs(&r.at(&x1, &x2)?, &r.at(&x1, &x3)?, &r.at(&x2, &x3)?)?)
                }),
            ));
            tasks.push((
                format!("stolin({e},{d})/unitarity"),
                Box::new(move || {
                    let r = StolinR::new(e, d, &build_j(e, d)?.m)?;
                    let (x, y) = (rat(-1, 3), rat(2, 7));
                    exact(&v.unitarity(&r.at(&x, &y)?, &r.at(&y, &x)?)?)
                }),
            ));
            tasks.push((
                format!("stolin({e},{d})/comparison"),
                Box::new(move || {
                    let ok = compare_theorem_c(e, d, &rat(1, 3), &rat(-2, 5))?;
                    Ok((ok, if ok { 0.0 } else { 1.0 }, 0.0))
                }),
            ));
        }
        tasks
    }

    fn elliptic(&self, n_max: usize) -> Vec<Task> {
        let mut tasks: Vec<Task> = Vec::new();
        let taus = [Cplx::new(0.0, 1.0), Cplx::new(0.3, 1.0)];
        for tau in taus {
            tasks.push((
                format!("elliptic(tau={tau})/theta-relation"),
                Box::new(move || {
                    let ctx = ThetaContext::new(tau)?;
                    let mut worst: f64 = 0.0;
                    for m in 0..10 {
                        let z = Cplx::new(-0.45 + 0.1 * m as f64, 0.2 - 0.04 * m as f64);
                        let lhs = theta3(z + (tau + 1.0) / 2.0, &ctx)?;
                        let rhs = Cplx::i() * (-Cplx::i() * PI * (z + tau / 4.0)).exp() * theta1(z, &ctx)?;
                        worst = worst.max((lhs - rhs).norm());
                    }
                    numeric(worst, 1e-12)
                }),
            ));
        }
        for (n, d) in [(2usize, 1usize), (3, 1), (3, 2)] {
            if n > n_max {
                continue;
            }
            tasks.push((
                format!("elliptic({n},{d})/casimir-exact"),
                Box::new(move || {
                    let ok = casimir_identity_exact(n, d)?;
                    Ok((ok, if ok { 0.0 } else { 1.0 }, 0.0))
                }),
            ));
            for tau in taus {
                let v = *self;
                tasks.push((
                    format!("elliptic({n},{d},tau={tau})/cybe"),
                    Box::new(move || numeric(BelavinR::new(n, d, ThetaContext::new(tau)?)?.cybe_residual(0.1, 0.25, 0.4)?, 1e-9)),
                ));
                tasks.push((
                    format!("elliptic({n},{d},tau={tau})/unitarity"),
                    Box::new(move || {
                        let r = BelavinR::new(n, d, ThetaContext::new(tau)?)?;
                        let (x, y) = (Cplx::new(0.1, 0.0), Cplx::new(0.37, 0.0));
                        numeric(v.unitarity(&r.at(x, y)?, &r.at(y, x)?)?.max_norm(), 1e-9)
                    }),
                ));
                tasks.push((
                    format!("elliptic({n},{d},tau={tau})/residue"),
                    Box::new(move || numeric(BelavinR::new(n, d, ThetaContext::new(tau)?)?.residue_error(1e-4)?, 1e-5)),
                ));
            }
        }
        tasks
    }

    fn zoo(&self) -> Vec<Task> {
        let v = *self;
        let baxter_ctx = || ThetaContext::new(Cplx::new(0.0, 1.1));
        vec![
            (
                "zoo/rational/cybe".into(),
                Box::new(|| exact3(&cybe_one_variable(|z: &Rat| zoo_stolin_rat(z), &rat(1, 3), &rat(1, 5))?)),
            ),
            (
                "zoo/rational/unitarity".into(),
                Box::new(move || {
                    let z = rat(2, 7);
                    exact(&v.unitarity(&zoo_stolin_rat(&z)?, &zoo_stolin_rat(&-z.clone())?)?)
                }),
            ),
            (
                "zoo/cherednik/cybe".into(),
                Box::new(|| {
                    let res = cybe_one_variable(|z: &Cplx| zoo_cherednik(*z), &Cplx::new(0.2, 0.0), &Cplx::new(0.3, 0.0))?;
                    numeric(res.max_norm(), 1e-8)
                }),
            ),
            (
                "zoo/cherednik/unitarity".into(),
                Box::new(move || {
                    let z = Cplx::new(0.41, 0.0);
                    numeric(v.unitarity(&zoo_cherednik(z)?, &zoo_cherednik(-z)?)?.max_norm(), 1e-8)
                }),
            ),
            (
                "zoo/baxter/cybe".into(),
                Box::new(move || {
                    let ctx = baxter_ctx()?;
                    let res = cybe_one_variable(|z: &Cplx| zoo_baxter(*z, &ctx), &Cplx::new(0.2, 0.0), &Cplx::new(0.3, 0.0))?;
                    numeric(res.max_norm(), 1e-8)
                }),
            ),
            (
                "zoo/baxter/unitarity".into(),
                Box::new(move || {
                    let ctx = baxter_ctx()?;
                    let z = Cplx::new(0.41, 0.0);
                    numeric(v.unitarity(&zoo_baxter(z, &ctx)?, &zoo_baxter(-z, &ctx)?)?.max_norm(), 1e-8)
                }),
            ),
        ]
    }
}

/// (e, d) with e, d ≥ 1, gcd(e, d) = 1 and e + d ≤ n_max.
pub fn coprime_pairs(n_max: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for n in 2..=n_max {
        for d in 1..n {
            if gcd(n - d, d) == 1 {
                out.push((n - d, d));
            }
        }
    }
    out
}
