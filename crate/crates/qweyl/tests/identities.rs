use num_complex::{Complex, Complex64};
use qweyl::*;

type Q = Rational;

fn g(alg: &std::sync::Arc<WeylAlgebra<Q>>, i: usize) -> WeylSeries<Q> {
    WeylSeries::generator(alg, i, 1).unwrap()
}

#[test]
fn single_transposition() {
    let q = default_q();
    let alg = WeylAlgebra::pair(1, q.clone(), 4).unwrap();
    let s = normal_order(&alg, &[(1, 1), (0, 1)]).unwrap();
    assert_eq!(s.terms().len(), 1);
    assert_eq!(s.coeff(&[1, 1]), rat(9, 1));
}

#[test]
fn square_of_sum() {
    let q = default_q();
    let alg = WeylAlgebra::pair(-1, q.clone(), 4).unwrap();
    let x = &g(&alg, 0) + &g(&alg, 1);
    let sq = &x * &x;
    assert_eq!(sq.terms().len(), 3);
    assert_eq!(sq.coeff(&[2, 0]), rat(1, 1));
    assert_eq!(sq.coeff(&[0, 2]), rat(1, 1));
    assert_eq!(sq.coeff(&[1, 1]), rat(1, 1) + &q * &q);
}

#[test]
fn degree_two_coefficient() {
    // q² = 1/4 and uv = q⁻²vu.
    let alg = WeylAlgebra::pair(-1, rat(1, 2), 2).unwrap();
    let (u, v) = (g(&alg, 0), g(&alg, 1));
    let joint = qexp(&(&u + &v), 2).unwrap();
    let split = qexp(&u, 2).unwrap() * qexp(&v, 2).unwrap();
    assert_eq!(joint.coeff(&[1, 1]), rat(16, 9));
    assert_eq!(split.coeff(&[1, 1]), rat(16, 9));
}

#[test]
fn qexp_of_zero() {
    let alg = WeylAlgebra::pair(1, default_q(), 5).unwrap();
    let z = WeylSeries::zero(&alg);
    assert_eq!(qexp(&z, 5).unwrap(), WeylSeries::one(&alg));
}

#[test]
fn qexp_rejects_constant_term() {
    let alg = WeylAlgebra::pair(1, default_q(), 5).unwrap();
    let x = &g(&alg, 0) + &WeylSeries::one(&alg);
    assert!(matches!(qexp(&x, 5), Err(QweylError::NonNilpotentConstantTerm(_))));
    assert!(matches!(compact_s(&x, 5), Err(QweylError::NonNilpotentConstantTerm(_))));
}

#[test]
fn functional_equation() {
    let r = functional_equation_residual(default_q(), 8).unwrap();
    assert!(r.is_zero());
    assert_eq!(r.order(), 8);
}

#[test]
fn euler_expansion_matches_inverse() {
    let alg = WeylAlgebra::pair(1, default_q(), 8).unwrap();
    let x = &g(&alg, 0) + &g(&alg, 1).scale(&rat(-2, 7));
    assert_eq!(compact_s(&x, 8).unwrap(), compact_s_euler(&x, 8).unwrap());
}

#[test]
fn schutzenberger_exact() {
    let r = schutzenberger_residual(default_q(), 1, 8).unwrap();
    assert!(r.is_zero());
    assert_eq!(r.order(), 8);
}

#[test]
fn schutzenberger_wrong_orientation() {
    let r = schutzenberger_residual(default_q(), -1, 8).unwrap();
    assert_eq!(r.low_degree(), Some(2));
}

#[test]
fn schutzenberger_linear_order() {
    for theta in [1, -1] {
        assert!(schutzenberger_residual(default_q(), theta, 1).unwrap().is_zero());
    }
}

#[test]
fn orientation_is_unique() {
    assert_eq!(schutzenberger_orientation(default_q(), 3).unwrap(), 1);
}

#[test]
fn schutzenberger_gaussian_q() {
    let q: GaussRational = Complex::new(rat(1, 3), rat(1, 5));
    assert!(schutzenberger_residual(q, 1, 6).unwrap().is_zero());
}

fn fq() -> Complex64 {
    Complex64::from_polar(0.95, 1.1)
}

#[test]
fn schutzenberger_float_mode() {
    let r = schutzenberger_residual(fq(), 1, 8).unwrap();
    assert!(r.vanishes(), "{}", r.max_magnitude());
    let w = schutzenberger_residual(fq(), -1, 8).unwrap();
    assert!(w.max_magnitude() > 1e-3);
}

#[test]
fn adjoint_action() {
    for c in [rat(2, 5), rat(-7, 3)] {
        let r = adjoint_residual(default_q(), &c, 5).unwrap();
        assert!(r.is_zero(), "c = {c}");
        assert_eq!(r.identity.order(), 5);
    }
    assert!(adjoint_residual(default_q(), &rat(0, 1), 5).unwrap().is_zero());
}

#[test]
fn adjoint_action_float_mode() {
    let r = adjoint_residual(fq(), &Complex64::new(0.7, -0.4), 5).unwrap();
    assert!(r.vanishes(), "{}", r.max_magnitude());
}

#[test]
fn adjoint_wrong_power_detected() {
    let q = default_q();
    let c = rat(2, 5);
    let sites = Sites::new(q.clone(), 5, false).unwrap();
    let alg = sites.algebra().clone();
    let (u, v, w) = (sites.cal_u(), sites.cal_v(), sites.cal_w());
    let lhs = compact_s(&w.scale(&c), 5).unwrap() * &u * compact_s_inv(&w.scale(&c), 5).unwrap();
    let wrong = &u + &(&v * &sites.gen(identities::EU, 1)).scale(&(c * alg.qpow(2)));
    assert!(!(lhs - wrong).is_zero());
}

#[test]
fn weyl_pair_commutation() {
    assert_eq!(weyl_pair_theta(default_q(), 4).unwrap(), 1);
}

fn clcr_params(tau: Q, tau_p: Q) -> ClcrParams<Q> {
    ClcrParams {
        d1: rat(5, 6),
        d2: rat(-2, 9),
        tau,
        tau_p,
    }
}

#[test]
fn clcr_exact() {
    let r = clcr_residual(default_q(), &clcr_params(rat(2, 7), rat(5, 11)), 5).unwrap();
    assert!(r.is_zero());
    assert!(r.parts().iter().all(|p| p.order() == 5));
}

#[test]
fn clcr_equal_times() {
    let r = clcr_residual(default_q(), &clcr_params(rat(3, 4), rat(3, 4)), 4).unwrap();
    assert!(r.is_zero());
}

#[test]
fn clcr_first_order() {
    let r = clcr_residual(default_q(), &clcr_params(rat(2, 7), rat(5, 11)), 1).unwrap();
    assert!(r.is_zero());
}

#[test]
fn clcr_needs_both_couplings() {
    let mut p = clcr_params(rat(2, 7), rat(5, 11));
    p.d2 = rat(0, 1);
    assert!(matches!(clcr_residual(default_q(), &p, 3), Err(QweylError::Invalid(_))));
}

#[test]
fn clcr_float_mode() {
    let c = |a: f64, b: f64| Complex64::new(a, b);
    let p = ClcrParams {
        d1: c(0.8, 0.1),
        d2: c(-0.3, 0.2),
        tau: c(0.25, -0.1),
        tau_p: c(0.45, 0.05),
    };
    let r = clcr_residual(fq(), &p, 4).unwrap();
    assert!(r.vanishes(), "{}", r.max_magnitude());
}

fn all_zero(r: &[[WeylSeries<Q>; 2]; 2], k: i64) -> bool {
    r.iter().flatten().all(|e| e.is_zero() && e.order() == k)
}

#[test]
fn rmm_exact() {
    let r = rmm_residual(default_q(), &rat(2, 7), &rat(5, 11), &Lambda::Value(rat(-3, 5)), 4).unwrap();
    assert!(all_zero(&r, 4));
}

#[test]
fn rmm_equal_times() {
    let r = rmm_residual(default_q(), &rat(2, 7), &rat(2, 7), &Lambda::Value(rat(4, 3)), 4).unwrap();
    assert!(all_zero(&r, 4));
}

#[test]
fn rmm_lambda_strata() {
    let r = rmm_residual(default_q(), &rat(2, 7), &rat(5, 11), &Lambda::Central, 4).unwrap();
    for e in r.iter().flatten() {
        for (_, s) in e.strata(identities::LAMBDA) {
            assert!(s.is_zero());
        }
        assert!(e.is_zero());
    }
}

#[test]
fn rmm_needs_the_intertwiner() {
    let q = default_q();
    let sites = Sites::new(q, 5, false).unwrap();
    let lam = WeylSeries::constant(sites.algebra(), rat(-3, 5));
    let (t, tp) = (rat(2, 7), rat(5, 11));
    let a = sites.m_matrix(1, &t, &lam);
    let b = sites.m_matrix(2, &tp, &lam);
    let c = sites.m_matrix(1, &tp, &lam);
    let d = sites.m_matrix(2, &t, &lam);
    let lhs = &a[0][0] * &b[0][0] + &a[0][1] * &b[1][0];
    let rhs = &c[0][0] * &d[0][0] + &c[0][1] * &d[1][0];
    assert!(!(lhs - rhs).is_zero());
}
