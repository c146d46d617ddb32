//! The four pole families of Q_λ(u⃗,w⃗) and a numerical blow-up detector.

use crate::error::{KernelError, Result};
use crate::kernel::Kernel;
use num_complex::Complex64;

const I: Complex64 = Complex64::new(0.0, 1.0);

/// Pole families of the factor 𝓛_λ(u_a, w_a; w_{a-1}); each sets an argument
/// equal to i(Mω₁+Nω₂).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PoleFamily {
    /// u_a - w_{a-1} + κ₂ - 3iΩ/2, M, N ≤ -1
    XV,
    /// w_a - w_{a-1} + κ₁ - iΩ/2, M, N ≤ -1
    UV,
    /// u_a - w_{a-1} + κ₁ + λ - iΩ, M, N ≥ 0
    XVT,
    /// w_a - u_a - λ + iΩ/2, M, N ≥ 0
    UX,
}

impl PoleFamily {
    pub const ALL: [PoleFamily; 4] = [PoleFamily::XV, PoleFamily::UV, PoleFamily::XVT, PoleFamily::UX];

    /// Index of the kernel factor that produces the family.
    pub fn factor(&self) -> usize {
        match self {
            PoleFamily::XV => 0,
            PoleFamily::UV => 1,
            PoleFamily::XVT => 2,
            PoleFamily::UX => 3,
        }
    }

    /// Whether i(Mω₁+Nω₂) belongs to the printed family.
    pub fn contains(&self, m: i64, n: i64) -> bool {
        match self {
            PoleFamily::XV | PoleFamily::UV => m <= -1 && n <= -1,
            PoleFamily::XVT | PoleFamily::UX => m >= 0 && n >= 0,
        }
    }

    /// True when the model's kernel carries the factor at all.
    pub fn present(&self, kernel: &Kernel) -> bool {
        Kernel::present(kernel.params().model.kind)[self.factor()]
    }

    /// Whether the kernel blows up when the family's argument reaches i(Mω₁+Nω₂).
    pub fn predicts_pole(&self, kernel: &Kernel, m: i64, n: i64) -> bool {
        self.present(kernel) && self.contains(m, n)
    }
}

/// Local behaviour of the kernel near a point.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Singularity {
    Pole,
    Zero,
    Regular,
}

/// Estimated local exponent k in |Q| ~ ε^{-k} and its classification.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct BlowUp {
    pub exponent: f64,
    pub kind: Singularity,
}

/// Move one w-coordinate so that the family's argument at site a equals
/// i(Mω₁+Nω₂) + ε e^{iθ}, and read off the growth of |Q_λ(u⃗,w⃗)| as ε shrinks.
///
/// `u` and `w` are N-vectors with N ≥ 2 (for N = 1 the UV argument is constant).
pub fn detect_blow_up(
    family: PoleFamily,
    site: usize,
    m: i64,
    n: i64,
    lambda: Complex64,
    u: &[Complex64],
    w: &[Complex64],
    kernel: &Kernel,
) -> Result<BlowUp> {
    let nn = u.len();
    if nn < 2 || w.len() != nn || site >= nn {
        return Err(KernelError::Invalid("blow-up detection needs N >= 2 and a valid site".into()));
    }
    let params = kernel.params();
    let om = params.pair.omega();
    let (k1, k2) = (params.kappa1(), params.kappa2());
    let prev = (site + nn - 1) % nn;
    let target = params.pair.lattice_point(m, n);
    let place = |eps: Complex64| -> Vec<Complex64> {
        let mut w = w.to_vec();
        let l = target + eps;
        match family {
            PoleFamily::XV => w[prev] = u[site] + k2 - 1.5 * I * om - l,
            PoleFamily::UV => w[site] = l + w[prev] - k1 + 0.5 * I * om,
            PoleFamily::XVT => w[prev] = u[site] + k1 + lambda - I * om - l,
            PoleFamily::UX => w[site] = l + u[site] + lambda - 0.5 * I * om,
        }
        w
    };
    let dir = Complex64::from_polar(1.0, 0.7);
    let (e1, e2) = (1e-3, 1e-5);
    let v1 = kernel.q(lambda, u, &place(dir * e1))?.norm();
    let v2 = kernel.q(lambda, u, &place(dir * e2))?.norm();
    let exponent = (v2 / v1).ln() / (e1 / e2).ln();
    let kind = if exponent > 0.5 {
        Singularity::Pole
    } else if exponent < -0.5 {
        Singularity::Zero
    } else {
        Singularity::Regular
    };
    Ok(BlowUp { exponent, kind })
}
