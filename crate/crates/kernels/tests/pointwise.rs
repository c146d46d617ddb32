use kernels::*;
use num_complex::Complex64;
use opcalc::{ModelKind, Side};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

/// Real part in [-1, 1], imaginary part within Re Ω / 8.
fn point(rng: &mut ChaCha8Rng, params: &KernelParams) -> Complex64 {
    let b = params.pair.omega().re / 8.0;
    c(rng.gen_range(-1.0..1.0), rng.gen_range(-b..b))
}

fn points(rng: &mut ChaCha8Rng, params: &KernelParams, n: usize) -> Vec<Complex64> {
    (0..n).map(|_| point(rng, params)).collect()
}

#[test]
fn baxter_identity_all_models_and_sizes() {
    for kind in ModelKind::ALL {
        let params = KernelParams::default_for(kind);
        let kernel = Kernel::new(params).unwrap();
        for n in 1..=3 {
            let mut rng = ChaCha8Rng::seed_from_u64(100 + n as u64);
            let mut worst: f64 = 0.0;
            for _ in 0..25 {
                let x = points(&mut rng, &params, n);
                let y = points(&mut rng, &params, n);
                let lambda = point(&mut rng, &params);
                worst = worst.max(baxter_residual(&x, &y, lambda, &kernel, Side::Direct).unwrap());
            }
            assert!(worst < 1e-8, "{kind:?} N={n}: {worst:e}");
        }
    }
}

#[test]
fn dual_baxter_identity() {
    for kind in ModelKind::ALL {
        let params = KernelParams::default_for(kind);
        let kernel = Kernel::new(params).unwrap();
        for n in 1..=3 {
            let mut rng = ChaCha8Rng::seed_from_u64(200 + n as u64);
            let mut worst: f64 = 0.0;
            for _ in 0..25 {
                let x = points(&mut rng, &params, n);
                let y = points(&mut rng, &params, n);
                let lambda = point(&mut rng, &params);
                worst = worst.max(baxter_residual(&x, &y, lambda, &kernel, Side::Dual).unwrap());
            }
            assert!(worst < 1e-8, "{kind:?} N={n}: {worst:e}");
        }
    }
}

#[test]
fn baxter_detects_a_wrong_coefficient() {
    let params = KernelParams::default_for(ModelKind::Generic);
    let kernel = Kernel::new(params).unwrap();
    let x = [c(0.2, 0.05), c(-0.4, 0.1)];
    let y = [c(0.1, -0.1), c(0.5, 0.0)];
    let terms = baxter_terms(&x, &y, c(0.3, 0.02), &kernel, Side::Direct).unwrap();
    let broken = BaxterTerms {
        forward: terms.forward * params.pair.q(),
        ..terms
    };
    assert!(terms.residual() < 1e-10);
    assert!(broken.residual() > 1e-2);
}

#[test]
fn shift_identity() {
    for kind in ModelKind::ALL {
        let params = KernelParams::default_for(kind);
        let kernel = Kernel::new(params).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..50 {
            let [x, y, yp, l] = [0; 4].map(|_| point(&mut rng, &params));
            let r = kernel.shift_identity_residual(l, x, y, yp).unwrap();
            assert!(r < 1e-10, "{kind:?}: {r:e}");
        }
    }
}

#[test]
fn triangularisation() {
    for kind in ModelKind::ALL {
        let params = KernelParams::default_for(kind);
        let kernel = Kernel::new(params).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..20 {
            let x = points(&mut rng, &params, 3);
            let y = points(&mut rng, &params, 3);
            let l = point(&mut rng, &params);
            for j in 0..3 {
                let t = triangular_checked(j, &x, &y, l, &kernel).unwrap();
                assert!(t.lower < 1e-10, "{kind:?} lower {:e}", t.lower);
                assert!(t.a_residual < 1e-10 && t.d_residual < 1e-10, "{kind:?} {t:?}");
                assert!(t.a_printed_residual < 1e-10 && t.d_printed_residual < 1e-10, "{kind:?} {t:?}");
            }
        }
    }
}

#[test]
fn modular_swap_invariance() {
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    for kind in ModelKind::ALL {
        let params = KernelParams::default_for(kind);
        let direct = Kernel::new(params).unwrap();
        let swapped = Kernel::with_method(params.swapped(), specfun::EvalMethod::integral()).unwrap();
        for _ in 0..50 / 3 + 1 {
            let [x, u, v, t] = [0; 4].map(|_| point(&mut rng, &params));
            let a = direct.l(t, x, u, v).unwrap();
            let b = swapped.l(t, x, u, v).unwrap();
            assert!((a - b).norm() / a.norm() < 1e-9, "{kind:?}");
        }
        let x = points(&mut rng, &params, 2);
        let y = points(&mut rng, &params, 2);
        let l = point(&mut rng, &params);
        let a = direct.q(l, &x, &y).unwrap();
        let b = swapped.q(l, &x, &y).unwrap();
        assert!((a - b).norm() / a.norm() < 1e-9);
    }
}

#[test]
fn translation_invariance() {
    let params = KernelParams::default_for(ModelKind::Generic);
    let kernel = Kernel::new(params).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(17);
    for _ in 0..50 {
        let x = points(&mut rng, &params, 3);
        let y = points(&mut rng, &params, 3);
        let l = point(&mut rng, &params);
        let r: f64 = rng.gen_range(-3.0..3.0);
        let xs: Vec<_> = x.iter().map(|v| v + r).collect();
        let ys: Vec<_> = y.iter().map(|v| v + r).collect();
        let a = kernel.q(l, &x, &y).unwrap();
        let b = kernel.q(l, &xs, &ys).unwrap();
        assert!((a - b).norm() / a.norm() < 1e-11);
    }
}

#[test]
fn single_site_q_is_l_on_the_diagonal() {
    let params = KernelParams::default_for(ModelKind::Generic);
    let kernel = Kernel::new(params).unwrap();
    let (x, y, l) = (c(0.3, 0.1), c(-0.2, 0.05), c(0.15, -0.02));
    assert_eq!(kernel.q(l, &[x], &[y]).unwrap(), kernel.l(l, x, y, y).unwrap());
}

#[test]
fn specialisations_drop_their_factors() {
    let (t, x, u, v) = (c(0.15, 0.0), c(0.3, 0.1), c(-0.2, 0.05), c(0.4, -0.1));
    let g = Kernel::new(KernelParams::default_for(ModelKind::Generic)).unwrap();
    let qt = Kernel::new(KernelParams::default_for(ModelKind::QToda)).unwrap();
    let t2 = Kernel::new(KernelParams::default_for(ModelKind::Toda2)).unwrap();
    let full = g.l_factors(t, x, u, v).unwrap();
    let ratio = g.l(t, x, u, v).unwrap() / qt.l(t, x, u, v).unwrap();
    assert!((ratio - full.num[0].unwrap()).norm() < 1e-13 * ratio.norm());
    let ratio = g.l(t, x, u, v).unwrap() / t2.l(t, x, u, v).unwrap();
    let pair = full.num[1].unwrap() / full.den[0].unwrap();
    assert!((ratio - pair).norm() < 1e-13 * ratio.norm());
}

#[test]
fn on_lattice_names_the_factor() {
    let params = KernelParams::default_for(ModelKind::Generic);
    let kernel = Kernel::new(params).unwrap();
    let om = params.pair.omega();
    let (t, x) = (c(0.1, 0.0), c(0.2, 0.0));
    // u - x - t + iΩ/2 = 0 puts the last factor on its zero.
    let u = x + t - 0.5 * Complex64::i() * om;
    match kernel.l(t, x, u, c(0.0, 0.0)) {
        Err(KernelError::OnLattice { factor, .. }) => assert_eq!(factor, kernel::FACTOR_NAMES[3]),
        other => panic!("expected OnLattice, got {other:?}"),
    }
    assert!(kernel.q(t, &[], &[]).is_err());
}

#[test]
fn compact_parameters_are_consistent() {
    for t in [c(0.15, 0.0), c(-0.3, 0.2)] {
        let params = KernelParams::default_for(ModelKind::Generic);
        let cp = CompactRepParams::new(t, &params);
        assert!(cp.consistency_residual(t, &params) < 1e-13);
    }
}

#[test]
fn grid_dump_rows() {
    let params = KernelParams::default_for(ModelKind::Generic);
    let kernel = Kernel::new(params).unwrap();
    let pts: Vec<Vec<Complex64>> = kernels::grid::rectangle((-0.5, 0.5), (-0.1, 0.1), 3).into_iter().map(|z| vec![z]).collect();
    let csv = kernels::grid::grid_csv(&pts, |p| kernel.l(c(0.1, 0.0), p[0], c(0.2, 0.0), c(0.0, 0.0))).unwrap();
    assert_eq!(csv.lines().count(), 9);
    assert!(csv.lines().all(|l| l.split(',').count() == 4));
}

#[test]
fn frozen_kernel_value() {
    // Independent high-precision evaluation of the product formula.
    let params = KernelParams::default_for(ModelKind::Generic);
    let v = kernel_l(c(0.3, 0.1), c(-0.2, 0.05), c(0.4, -0.1), c(0.15, 0.0), &params).unwrap();
    let expect = c(0.00013412380701910283774, -0.000051234342928618579205);
    assert!((v - expect).norm() / expect.norm() < 1e-12, "{v}");
}
