//! Finite and infinite q-Pochhammer products (z; p).

use crate::error::{Result, SpecError};
use num_complex::Complex64;

/// log(1 + w) without the cancellation of `(1 + w).ln()` for small |w|.
pub fn clog1p(w: Complex64) -> Complex64 {
    let re = 0.5 * (2.0 * w.re + w.norm_sqr()).ln_1p();
    let im = w.im.atan2(1.0 + w.re);
    Complex64::new(re, im)
}

/// Truncated product with its a-priori tail bound.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct QPoch {
    pub value: Complex64,
    /// Bound on |(z;p)_∞ / (z;p)_K - 1|.
    pub tail_bound: f64,
}

/// ∏_{k=0}^{K-1} (1 - z p^k) together with the bound exp(|z||p|^K/(1-|p|)) - 1.
pub fn qpoch(z: Complex64, p: Complex64, k: usize) -> Result<QPoch> {
    let ap = p.norm();
    if !(ap < 1.0) {
        return Err(SpecError::DivergentBase(ap));
    }
    if k == 0 {
        return Err(SpecError::MethodInadmissible("truncation order must be positive".into()));
    }
    let mut log = Complex64::new(0.0, 0.0);
    let mut pk = Complex64::new(1.0, 0.0);
    for _ in 0..k {
        let t = z * pk;
        if t == Complex64::new(1.0, 0.0) {
            return Ok(QPoch {
                value: Complex64::new(0.0, 0.0),
                tail_bound: 0.0,
            });
        }
        log += clog1p(-t);
        pk *= p;
    }
    let tail = (z.norm() * ap.powi(k as i32) / (1.0 - ap)).exp_m1();
    Ok(QPoch {
        value: log.exp(),
        tail_bound: tail,
    })
}

/// log (z; p)_∞, truncated once |z p^k| drops below `eps` times the running
/// sum (capped at 1), so tiny products keep their relative accuracy.
///
/// Returns `None` when a factor vanishes exactly and
/// `Err(TruncationExceeded)` when more than `kmax` factors are needed.
pub fn log_qpoch_inf(z: Complex64, p: Complex64, eps: f64, kmax: usize) -> Result<Option<Complex64>> {
    let ap = p.norm();
    if !(ap < 1.0) {
        return Err(SpecError::DivergentBase(ap));
    }
    let mut log = Complex64::new(0.0, 0.0);
    let mut pk = Complex64::new(1.0, 0.0);
    for _ in 0..kmax {
        let t = z * pk;
        let at = t.norm();
        if at < eps * log.norm().min(1.0) || at < f64::MIN_POSITIVE {
            return Ok(Some(log));
        }
        let w = -t;
        if (Complex64::new(1.0, 0.0) + w).norm() == 0.0 {
            return Ok(None);
        }
        log += clog1p(w);
        pk *= p;
    }
    Err(SpecError::TruncationExceeded(kmax))
}

/// Number of factors needed for |z p^k| < eps.
pub fn terms_needed(z: Complex64, p: Complex64, eps: f64) -> f64 {
    let az = z.norm();
    let ap = p.norm();
    if az < eps {
        return 1.0;
    }
    if ap == 0.0 {
        return 2.0;
    }
    ((eps / az).ln() / ap.ln()).max(0.0) + 1.0
}
