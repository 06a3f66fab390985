use proptest::prelude::*;
use ybe_core::cuspidal::{assemble_r, build_j};
use ybe_core::elliptic::{kronecker_sigma, theta1, theta3, ThetaContext};
use ybe_core::lie::{apply_gauge, casimir, cybe_lhs, swap_tensor, unitarity_defect, GlTensor2, LinearMapGl};
use ybe_core::linalg::{interpolate, kernel, rank, sample_points, solve_many, Matrix, Poly};
use ybe_core::stolin::{frobenius_split, omega};
use ybe_core::{rat, Cplx, Rat};

fn small_rat() -> impl Strategy<Value = Rat> {
    (-6i64..=6, 1i64..=4).prop_map(|(p, q)| rat(p, q))
}

fn poly(max_len: usize) -> impl Strategy<Value = Poly> {
    prop::collection::vec(small_rat(), 0..=max_len).prop_map(Poly::new)
}

fn matrix(rows: usize, cols: usize) -> impl Strategy<Value = Matrix<Rat>> {
    prop::collection::vec(small_rat(), rows * cols).prop_map(move |v| Matrix::from_vec(rows, cols, v).unwrap())
}

fn traceless(n: usize) -> impl Strategy<Value = Matrix<Rat>> {
    matrix(n, n).prop_map(move |m| {
        let t = m.trace();
        &m - &Matrix::<Rat>::unit(n, n, n).scale(&t)
    })
}

fn tensor(n: usize) -> impl Strategy<Value = GlTensor2<Rat>> {
    prop::collection::vec(((1..=n, 1..=n, 1..=n, 1..=n), small_rat()), 0..12).prop_map(move |entries| {
        let mut t = GlTensor2::zero(n);
        for ((i, j, k, l), c) in entries {
            t.add_term([i, j, k, l], c).unwrap();
        }
        t
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn poly_ring_laws(a in poly(4), b in poly(4), c in poly(4)) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert!((&a - &a).is_zero());
    }

    #[test]
    fn poly_division(a in poly(6), b in poly(3)) {
        prop_assume!(!b.is_zero());
        let (q, r) = a.div_rem(&b).unwrap();
        prop_assert_eq!(&(&q * &b) + &r, a);
        prop_assert!(r.is_zero() || r.degree() < b.degree());
    }

    #[test]
    fn interpolation_round_trip(p in poly(5), start in small_rat()) {
        let bound = 4;
        let pts = sample_points(&start, bound + 2);
        let samples: Vec<(Rat, Rat)> = pts.iter().map(|x| (x.clone(), p.eval(x))).collect();
        match p.degree() {
            Some(deg) if deg > bound => prop_assert!(interpolate(&samples, bound).is_err()),
            _ => prop_assert_eq!(interpolate(&samples, bound).unwrap(), p),
        }
    }

    #[test]
    fn solve_and_kernel_resubstitute(a in matrix(4, 5), x in prop::collection::vec(small_rat(), 5)) {
        let b = a.mat_vec(&x).unwrap();
        let ker = kernel(&a).unwrap();
        prop_assert_eq!(ker.len() + rank(&a), 5);
        for v in &ker {
            prop_assert!(a.mat_vec(v).unwrap().iter().all(|c| *c == Rat::from_integer(0.into())));
        }
        if ker.is_empty() {
            let sol = solve_many(&a, &[b.clone()]).unwrap();
            prop_assert_eq!(a.mat_vec(&sol[0]).unwrap(), b);
        }
    }

    #[test]
    fn square_solve(a in matrix(4, 4), b in prop::collection::vec(small_rat(), 4)) {
        if rank(&a) == 4 {
            let sol = solve_many(&a, &[b.clone()]).unwrap();
            prop_assert_eq!(a.mat_vec(&sol[0]).unwrap(), b);
        } else {
            prop_assert!(solve_many(&a, &[b]).is_err());
        }
    }

    #[test]
    fn swap_is_an_involution(t in tensor(3), s in small_rat()) {
        prop_assert_eq!(swap_tensor(&swap_tensor(&t)), t.clone());
        prop_assert_eq!(swap_tensor(&t.scale(&s)), swap_tensor(&t).scale(&s));
    }

    #[test]
    fn casimir_reproduces_sl(a in traceless(3)) {
        // (id ⊗ tr(· a)) c = a
        let c = casimir(3);
        let mut out = Matrix::<Rat>::zeros(3, 3);
        for (&[i, j, k, l], v) in c.terms() {
            let t = a.get(l - 1, k - 1) * v;
            out = &out + &Matrix::unit(3, i, j).scale(&t);
        }
        prop_assert_eq!(out, a);
    }

    #[test]
    fn omega_is_a_cocycle(k in matrix(3, 3), a in matrix(3, 3), b in matrix(3, 3), c in matrix(3, 3)) {
        let br = |x: &Matrix<Rat>, y: &Matrix<Rat>| x.commutator(y).unwrap();
        let total = omega(&k, &br(&a, &b), &c).unwrap() + omega(&k, &br(&b, &c), &a).unwrap() + omega(&k, &br(&c, &a), &b).unwrap();
        prop_assert_eq!(total, Rat::from_integer(0.into()));
        prop_assert_eq!(omega(&k, &a, &b).unwrap(), -omega(&k, &b, &a).unwrap());
    }

    #[test]
    fn gauge_preserves_solutions(u in prop::collection::vec(small_rat(), 3)) {
        // unipotent upper-triangular g with explicit inverse
        let g = Matrix::from_vec(3, 3, vec![
            rat(1, 1), u[0].clone(), u[1].clone(),
            rat(0, 1), rat(1, 1), u[2].clone(),
            rat(0, 1), rat(0, 1), rat(1, 1),
        ]).unwrap();
        let g_inv = Matrix::from_vec(3, 3, vec![
            rat(1, 1), -u[0].clone(), &u[0] * &u[2] - &u[1],
            rat(0, 1), rat(1, 1), -u[2].clone(),
            rat(0, 1), rat(0, 1), rat(1, 1),
        ]).unwrap();
        let phi = LinearMapGl::conjugation(&g, &g_inv).unwrap();
        let r = |x: &Rat, y: &Rat| apply_gauge(&phi, &phi, &assemble_r(2, 1, x, y).unwrap()).unwrap();
        let (x1, x2, x3) = (rat(0, 1), rat(1, 2), rat(-3, 1));
        prop_assert!(cybe_lhs(&r(&x1, &x2), &r(&x1, &x3), &r(&x2, &x3)).unwrap().is_zero());
        prop_assert!(unitarity_defect(&r(&x1, &x2), &r(&x2, &x1)).unwrap().is_zero());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn omega_cocycle_on_sl4(a in traceless(4), b in traceless(4), c in traceless(4)) {
        let k = build_j(3, 1).unwrap().m;
        let br = |x: &Matrix<Rat>, y: &Matrix<Rat>| x.commutator(y).unwrap();
        let total = omega(&k, &br(&a, &b), &c).unwrap() + omega(&k, &br(&b, &c), &a).unwrap() + omega(&k, &br(&c, &a), &b).unwrap();
        prop_assert_eq!(total, Rat::from_integer(0.into()));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(20))]

    #[test]
    fn frobenius_split_reconstructs(pair in prop::sample::select(vec![(1usize, 1usize), (2, 1), (1, 2), (3, 1), (1, 3), (3, 2), (2, 3), (4, 1)]), seed in prop::collection::vec(small_rat(), 25)) {
        let (e, d) = pair;
        let n = e + d;
        let mut g = Matrix::from_vec(n, n, seed[..n * n].to_vec()).unwrap();
        let t = g.trace();
        g = &g - &Matrix::<Rat>::unit(n, n, n).scale(&t);
        let k = build_j(e, d).unwrap().m;
        let (p, nn) = frobenius_split(&g, &k, e).unwrap();
        prop_assert_eq!(&k.transpose().commutator(&p).unwrap() + &nn, g);
        prop_assert!(p.trace() == Rat::from_integer(0.into()));
    }

    #[test]
    fn theta_parity(re in -0.5f64..0.5, im in -0.3f64..0.3) {
        let ctx = ThetaContext::new(Cplx::new(0.3, 1.0)).unwrap();
        let z = Cplx::new(re, im);
        prop_assert!((theta1(-z, &ctx).unwrap() + theta1(z, &ctx).unwrap()).norm() < 1e-12);
        prop_assert!((theta3(-z, &ctx).unwrap() - theta3(z, &ctx).unwrap()).norm() < 1e-12);
    }

    #[test]
    fn sigma_symmetry_and_period(ur in 0.05f64..0.45, ui in -0.3f64..0.3, zr in 0.05f64..0.45, zi in -0.3f64..0.3) {
        let ctx = ThetaContext::new(Cplx::new(0.0, 1.0)).unwrap();
        let (u, z) = (Cplx::new(ur, ui), Cplx::new(zr, zi));
        let s = kronecker_sigma(u, z, &ctx).unwrap();
        let tol = 1e-10 * s.norm().max(1.0);
        prop_assert!((s - kronecker_sigma(z, u, &ctx).unwrap()).norm() < tol);
        prop_assert!((s - kronecker_sigma(u, z + 1.0, &ctx).unwrap()).norm() < tol);
    }
}

#[test]
fn involutions() {
    for n in 2..=6 {
        let psi = LinearMapGl::index_reversal(n);
        let phi = LinearMapGl::neg_transpose(n);
        assert!(psi.is_involution());
        assert!(phi.is_involution());
        assert_eq!(psi.compose(&psi).unwrap().action(), LinearMapGl::identity(n).action());
        assert_eq!(phi.compose(&phi).unwrap().action(), LinearMapGl::identity(n).action());
    }
}
