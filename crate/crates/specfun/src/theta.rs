use crate::error::{Result, SpecError};
use crate::modular::ModularPair;
use crate::qpoch::qpoch;
use num_complex::Complex64;
use std::f64::consts::PI;

const I: Complex64 = Complex64::new(0.0, 1.0);

/// The quadratic form B(z) entering the modular transformation and the reflection formula.
pub fn quad_b(z: Complex64, p: &ModularPair) -> Complex64 {
    let (w1, w2) = (p.omega1(), p.omega2());
    let mu = w1 * w2;
    PI / mu * z * z + I * PI * p.omega() / mu * z - PI / (6.0 * mu) * (w1 * w1 + 3.0 * mu + w2 * w2)
}

/// θ(λ) and its dual θ̃(λ), each truncated to `k` factors per q-product.
pub fn theta_pair(lambda: Complex64, p: &ModularPair, k: usize) -> Result<(Complex64, Complex64)> {
    let (w1, w2) = (p.omega1(), p.omega2());
    let q2 = p.q() * p.q();
    let qt_m2 = 1.0 / (p.q_dual() * p.q_dual());
    if q2.norm() >= 1.0 {
        return Err(SpecError::DivergentBase(q2.norm()));
    }
    if qt_m2.norm() >= 1.0 {
        return Err(SpecError::DivergentBase(qt_m2.norm()));
    }
    let e2 = (2.0 * PI * lambda / w2).exp();
    let e1 = (2.0 * PI * lambda / w1).exp();
    let theta = qpoch(1.0 / e2, q2, k)?.value * qpoch(q2 * e2, q2, k)?.value;
    let dual = qpoch(e1, qt_m2, k)?.value * qpoch(qt_m2 / e1, qt_m2, k)?.value;
    Ok((theta, dual))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn quad_b_examples() {
        let p = ModularPair::new(c(1.0, 0.0), c(1.0, 0.0)).unwrap();
        assert!((quad_b(c(0.0, 0.0), &p) - c(-5.0 * PI / 6.0, 0.0)).norm() < 1e-14);
        assert!((quad_b(-I * p.omega() / 2.0, &p) - c(PI / 6.0, 0.0)).norm() < 1e-14);
        let q = ModularPair::default_pair();
        let z = c(0.3, -0.7);
        assert!((quad_b(z, &q) - quad_b(z, &q.swap())).norm() < 1e-14);
    }

    #[test]
    fn theta_zeros() {
        let p = ModularPair::new(c(1.0, 0.7), c(1.0, 0.0)).unwrap();
        let (t0, _) = theta_pair(c(0.0, 0.0), &p, 200).unwrap();
        assert!(t0.norm() < 1e-15);
        let (t1, _) = theta_pair(I * p.omega1(), &p, 200).unwrap();
        assert!(t1.norm() < 1e-12);
    }

    #[test]
    fn inadmissible_orientation_rejected() {
        let p = ModularPair::new(c(1.0, 0.0), c(1.0, 0.7)).unwrap();
        assert!(theta_pair(c(0.1, 0.0), &p, 50).is_err());
    }
}
