use classical::genfun::generating_residual;
use classical::sklyanin::{backlund_entries, lax_entries, sklyanin_residual, FactorMatrix};
use classical::symplectic::symplectic_defect;
use classical::*;
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn params() -> ClassicalParams {
    ClassicalParams::new(0.3, 0.45, 0.7)
}

fn random_state(rng: &mut ChaCha8Rng, n: usize, p: ClassicalParams) -> ClassicalState {
    let x = (0..n).map(|_| rng.gen_range(0.5..2.0)).collect();
    let y = (0..n).map(|_| rng.gen_range(0.5..2.0)).collect();
    ClassicalState::new(x, y, p).unwrap()
}

fn random_lambda(rng: &mut ChaCha8Rng) -> Complex64 {
    Complex64::new(rng.gen_range(-2.0..2.0), rng.gen_range(-2.0..2.0))
}

#[test]
fn gauge_relation() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for n in [2, 3, 4] {
        for _ in 0..50 {
            let st = random_state(&mut rng, n, params());
            let img = backlund_map(&st).unwrap();
            for _ in 0..5 {
                let r = gauge_residual(&st, &img, random_lambda(&mut rng));
                assert!(r < 1e-12, "N={n}: {r:e}");
            }
        }
    }
}

#[test]
fn gauge_relation_with_scale() {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    let p = params().with_s(0.6);
    for _ in 0..20 {
        let st = random_state(&mut rng, 3, p);
        let img = backlund_map(&st).unwrap();
        assert!(gauge_residual(&st, &img, random_lambda(&mut rng)) < 1e-12);
    }
}

#[test]
fn u_is_shifted_x() {
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    let st = random_state(&mut rng, 4, params());
    let img = backlund_map(&st).unwrap();
    for n in 0..4 {
        assert_eq!(img.u[(n + 1) % 4], st.x[n]);
    }
}

#[test]
fn triangular_gauge() {
    let mut rng = ChaCha8Rng::seed_from_u64(14);
    for n in [1, 2, 3, 4] {
        let st = random_state(&mut rng, n, params());
        let img = backlund_map(&st).unwrap();
        let tri = triangulate_classical(&st, &img).unwrap();
        assert!(tri.lower_residual < 1e-12, "{tri:?}");
        assert!(tri.closed_form_residual < 1e-12, "{tri:?}");
        assert!(tri.kernel_residual < 1e-12, "{tri:?}");
    }
}

#[test]
fn conservation_under_the_map() {
    let mut rng = ChaCha8Rng::seed_from_u64(15);
    let p = params();
    for n in [1, 2, 3, 4] {
        let st = random_state(&mut rng, n, p);
        let img = backlund_map(&st).unwrap();
        let before = trace_coefficients(&st.x, &img.big_x, p.d1, p.d2);
        let after = trace_coefficients(&st.y, &img.big_y, p.d1, p.d2);
        assert_eq!(before.len(), n + 1);
        for (a, b) in before.iter().zip(&after) {
            assert!((a - b).abs() < 1e-10 * a.abs().max(1.0), "{before:?} {after:?}");
        }
    }
}

#[test]
fn solve_round_trip() {
    let mut rng = ChaCha8Rng::seed_from_u64(16);
    let p = params();
    let st = random_state(&mut rng, 4, p);
    let img = backlund_map(&st).unwrap();
    let y = backlund_solve(&st.x, &img.big_x, &p, None, &Newton::default()).unwrap();
    for (a, b) in y.iter().zip(&st.y) {
        assert!((a - b).abs() < 1e-10);
    }
    let again = backlund_map(&ClassicalState::new(st.x.clone(), y, p).unwrap()).unwrap();
    for (a, b) in again.big_x.iter().zip(&img.big_x) {
        assert!((a / b - 1.0).abs() < 1e-12);
    }
}

#[test]
fn sklyanin_bracket() {
    let l1 = Complex64::new(0.4, 0.3);
    let l2 = Complex64::new(-0.8, 0.1);
    let p = FactorMatrix::new(0.7, -1.3, 0.4, 1.1);
    assert!(sklyanin_residual(|l| p.elementary(l), l1, l2) < 1e-12);
    assert!(sklyanin_residual(|l| lax_entries(l, 0.3, 0.45), l1, l2) < 1e-12);
    assert!(sklyanin_residual(|l| backlund_entries(l, 0.7), l1, l2) < 1e-12);
    let r = FactorMatrix::reduced(0.7, -1.3, 0.4);
    assert!(sklyanin_residual(|l| r.elementary(l), l1, l2) < 1e-12);
}

#[test]
fn sklyanin_sign_is_not_vacuous() {
    // Reversing the Poisson bracket (exchanging the roles of x̂ and X̂) breaks
    // the identity, so the check above is informative.
    use classical::sklyanin::Laurent;
    let l1 = Complex64::new(0.4, 0.3);
    let l2 = Complex64::new(-0.8, 0.1);
    let flip = |e: &Laurent| Laurent(e.0.iter().map(|((m, n), c)| ((*n, *m), *c)).collect());
    let flipped = |l| lax_entries(l, 0.3, 0.45).map(|row| row.map(|e| flip(&e)));
    assert!(sklyanin_residual(flipped, l1, l2) > 1e-3);
}

#[test]
fn symplectic_map() {
    let mut rng = ChaCha8Rng::seed_from_u64(17);
    let p = params();
    let st = random_state(&mut rng, 3, p);
    let img = backlund_map(&st).unwrap();
    let d = symplectic_defect(&st.x, &img.big_x, &p, 1e-6).unwrap();
    assert!(d < 1e-6, "{d:e}");
}

#[test]
fn generating_function_derivatives() {
    let mut rng = ChaCha8Rng::seed_from_u64(18);
    let p = params();
    let st = random_state(&mut rng, 3, p);
    let img = backlund_map(&st).unwrap();
    for anchor in [1.0, 2.0] {
        let r = generating_residual(&st.x, &st.y, &img.big_x, &img.big_y, &p, anchor);
        assert!(r < 1e-8, "anchor {anchor}: {r:e}");
    }
}
