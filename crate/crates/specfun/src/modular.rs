//! The pair of periods (ω₁, ω₂) and the data derived from it.

use crate::error::{Result, SpecError};
use num_complex::Complex64;
use std::f64::consts::PI;

const I: Complex64 = Complex64::new(0.0, 1.0);

/// Periods (ω₁, ω₂) with Re ω_j > 0.
///
/// `q = exp(iπω₁/ω₂)`, `q_dual = exp(iπω₂/ω₁)` and `Ω = ω₁ + ω₂`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ModularPair {
    omega1: Complex64,
    omega2: Complex64,
}

impl ModularPair {
    pub fn new(omega1: Complex64, omega2: Complex64) -> Result<Self> {
        if !(omega1.re > 0.0 && omega2.re > 0.0) || !omega1.is_finite() || !omega2.is_finite() {
            return Err(SpecError::InvalidPeriods(omega1, omega2));
        }
        Ok(Self { omega1, omega2 })
    }

    /// The generic default pair (1, 1.3+0.9i).
    pub fn default_pair() -> Self {
        Self::new(Complex64::new(1.0, 0.0), Complex64::new(1.3, 0.9)).unwrap()
    }

    pub fn omega1(&self) -> Complex64 {
        self.omega1
    }

    pub fn omega2(&self) -> Complex64 {
        self.omega2
    }

    /// Ω = ω₁ + ω₂.
    pub fn omega(&self) -> Complex64 {
        self.omega1 + self.omega2
    }

    /// ω₁ω₂.
    pub fn mu(&self) -> Complex64 {
        self.omega1 * self.omega2
    }

    pub fn q(&self) -> Complex64 {
        (I * PI * self.omega1 / self.omega2).exp()
    }

    pub fn q_dual(&self) -> Complex64 {
        (I * PI * self.omega2 / self.omega1).exp()
    }

    /// Exchange the two periods.
    pub fn swap(&self) -> Self {
        Self {
            omega1: self.omega2,
            omega2: self.omega1,
        }
    }

    pub fn ratio(&self) -> Complex64 {
        self.omega1 / self.omega2
    }

    /// True when the printed product formulas converge as written, i.e. Im(ω₁/ω₂) > 0.
    pub fn product_admissible(&self) -> bool {
        self.ratio().im > 0.0
    }

    /// The periods reordered as (a, b) with Im(a/b) >= 0.
    ///
    /// The double sine is symmetric in its periods, so the product formula
    /// may always be evaluated in this orientation.
    pub fn oriented(&self) -> (Complex64, Complex64) {
        if self.ratio().im >= 0.0 {
            (self.omega1, self.omega2)
        } else {
            (self.omega2, self.omega1)
        }
    }

    /// The two nomes used by the product formula in the oriented frame:
    /// `exp(2πia/b)` and `exp(-2πib/a)`.
    pub fn effective_nomes(&self) -> (Complex64, Complex64) {
        let (a, b) = self.oriented();
        ((2.0 * PI * I * a / b).exp(), (-2.0 * PI * I * b / a).exp())
    }

    /// ω₁/ω₂ within `tol` of a real rational number with denominator at most `max_den`.
    pub fn is_resonant(&self, tol: f64, max_den: u32) -> bool {
        let r = self.ratio();
        if r.im.abs() > tol {
            return false;
        }
        (1..=max_den).any(|d| {
            let x = r.re * d as f64;
            (x - x.round()).abs() <= tol * d as f64
        })
    }

    /// Lattice coordinates (m, n) with z = i(mω₁ + nω₂), solved over the reals.
    pub fn lattice_coords(&self, z: Complex64) -> Option<(f64, f64)> {
        // -iz = m ω₁ + n ω₂
        let w = -I * z;
        let (a, b) = (self.omega1, self.omega2);
        let det = a.re * b.im - a.im * b.re;
        if det.abs() < 1e-300 {
            return None;
        }
        let m = (w.re * b.im - w.im * b.re) / det;
        let n = (a.re * w.im - a.im * w.re) / det;
        Some((m, n))
    }

    pub fn lattice_point(&self, m: i64, n: i64) -> Complex64 {
        I * (self.omega1 * m as f64 + self.omega2 * n as f64)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_bad_periods() {
        assert!(ModularPair::new(Complex64::new(-1.0, 0.0), Complex64::new(1.0, 0.0)).is_err());
        assert!(ModularPair::new(Complex64::new(1.0, 0.0), Complex64::new(0.0, 1.0)).is_err());
    }

    #[test]
    fn swap_is_involution() {
        let p = ModularPair::default_pair();
        assert_eq!(p.swap().swap(), p);
        assert!((p.swap().q() - p.q_dual()).norm() < 1e-15);
    }

    #[test]
    fn admissibility_matches_modulus_of_q() {
        let p = ModularPair::default_pair();
        assert_eq!(p.product_admissible(), p.q().norm() < 1.0);
        let s = p.swap();
        assert_eq!(s.product_admissible(), s.q().norm() < 1.0);
    }

    #[test]
    fn resonance_detection() {
        let p = ModularPair::new(Complex64::new(2.0, 0.0), Complex64::new(3.0, 0.0)).unwrap();
        assert!(p.is_resonant(1e-6, 50));
        assert!(!ModularPair::default_pair().is_resonant(1e-6, 50));
    }

    #[test]
    fn lattice_coordinates_round_trip() {
        let p = ModularPair::default_pair();
        let z = p.lattice_point(3, -2);
        let (m, n) = p.lattice_coords(z).unwrap();
        assert!((m - 3.0).abs() < 1e-12 && (n + 2.0).abs() < 1e-12);
    }
}
