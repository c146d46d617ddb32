//! 2×2 matrices of operator words: the Lax matrix, its dual and M.

use crate::model::{ModelKind, ModelParams};
use crate::word::OpWord;
use num_complex::Complex64;
use specfun::ModularPair;
use std::f64::consts::PI;

const I: Complex64 = Complex64::new(0.0, 1.0);

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MatrixTag {
    LaxL,
    LaxLDual,
    M,
    QToda,
    Toda2,
}

#[derive(Clone, Debug, PartialEq)]
pub struct QuantumMatrix {
    pub tag: MatrixTag,
    pub entries: [[OpWord; 2]; 2],
}

impl QuantumMatrix {
    pub fn mul(&self, o: &Self) -> Self {
        let e = |i: usize, k: usize| {
            self.entries[i][0]
                .compose(&o.entries[0][k])
                .add(&self.entries[i][1].compose(&o.entries[1][k]))
        };
        Self {
            tag: self.tag,
            entries: [[e(0, 0), e(0, 1)], [e(1, 0), e(1, 1)]],
        }
    }

    pub fn trace(&self) -> OpWord {
        self.entries[0][0].add(&self.entries[1][1])
    }

    /// Largest word-level difference over the four entries.
    pub fn distance(&self, o: &Self) -> f64 {
        let mut d: f64 = 0.0;
        for i in 0..2 {
            for j in 0..2 {
                d = d.max(self.entries[i][j].sub(&o.entries[i][j]).coeff_norm());
            }
        }
        d
    }

    pub fn map(&self, f: impl Fn(usize, usize, &OpWord) -> OpWord) -> Self {
        Self {
            tag: self.tag,
            entries: [
                [f(0, 0, &self.entries[0][0]), f(0, 1, &self.entries[0][1])],
                [f(1, 0, &self.entries[1][0]), f(1, 1, &self.entries[1][1])],
            ],
        }
    }
}

/// Lax matrix with explicit couplings, acting on `site` of an N-site chain:
/// [[Λ - εE, q²Λ(d₂ + d₁qεE)P], [-q⁻²P⁻¹, -d₂]] with Λ = e^{-2πλ/ω₂},
/// E = e^{-ω₁X} (shift by iω₁), P = e^{-2πx/ω₂} and ε the scale of E.
pub fn lax_with(lambda: Complex64, p: &ModularPair, d1: Complex64, d2: Complex64, e_scale: Complex64, site: usize, sites: usize) -> [[OpWord; 2]; 2] {
    let (w1, w2) = (p.omega1(), p.omega2());
    let q = p.q();
    let big_l = (-2.0 * PI * lambda / w2).exp();
    let e = OpWord::shift(site, I * w1, sites).scale(e_scale);
    let pm = OpWord::mult(site, -2.0 * PI / w2, sites);
    let pinv = OpWord::mult(site, 2.0 * PI / w2, sites);
    let one = OpWord::identity(sites);
    let l11 = one.scale(big_l).sub(&e);
    let l12 = pm.scale(q * q * big_l * d2).add(&e.compose(&pm).scale(q * q * q * big_l * d1));
    let l21 = pinv.scale(-1.0 / (q * q));
    let l22 = one.scale(-d2);
    let mut out = [[l11, l12], [l21, l22]];
    // Drop identically vanishing terms so specialised entries are truly zero.
    for row in out.iter_mut() {
        for w in row.iter_mut() {
            *w = w.pruned();
        }
    }
    out
}

/// L(λ) of the model on `site`.
pub fn lax(lambda: Complex64, p: &ModularPair, m: &ModelParams, site: usize, sites: usize) -> QuantumMatrix {
    let (d1, d2) = m.couplings(p);
    let tag = match m.kind {
        ModelKind::Generic => MatrixTag::LaxL,
        ModelKind::QToda => MatrixTag::QToda,
        ModelKind::Toda2 => MatrixTag::Toda2,
    };
    QuantumMatrix {
        tag,
        entries: lax_with(lambda, p, d1, d2, Complex64::new(1.0, 0.0), site, sites),
    }
}

/// The dual Lax matrix: periods exchanged and couplings d̃_i.
pub fn lax_dual(lambda: Complex64, p: &ModularPair, m: &ModelParams, site: usize, sites: usize) -> QuantumMatrix {
    let (d1, d2) = m.dual_couplings(p);
    QuantumMatrix {
        tag: MatrixTag::LaxLDual,
        entries: lax_with(lambda, &p.swap(), d1, d2, Complex64::new(1.0, 0.0), site, sites),
    }
}

/// M(λ;t) as printed:
/// [[Λ - τE, -qΛ(1-E)P], [-q⁻²P⁻¹, q⁻¹]] with τ = e^{-2πt/ω₂}.
pub fn m_matrix(lambda: Complex64, t: Complex64, p: &ModularPair, site: usize, sites: usize) -> QuantumMatrix {
    let (w1, w2) = (p.omega1(), p.omega2());
    let q = p.q();
    let big_l = (-2.0 * PI * lambda / w2).exp();
    let tau = (-2.0 * PI * t / w2).exp();
    let e = OpWord::shift(site, I * w1, sites);
    let pm = OpWord::mult(site, -2.0 * PI / w2, sites);
    let pinv = OpWord::mult(site, 2.0 * PI / w2, sites);
    let one = OpWord::identity(sites);
    QuantumMatrix {
        tag: MatrixTag::M,
        entries: [
            [one.scale(big_l).sub(&e.scale(tau)), one.sub(&e).compose(&pm).scale(-q * big_l)],
            [pinv.scale(-1.0 / (q * q)), one.scale(1.0 / q)],
        ],
    }
}

/// M(λ;t) from L by U → U + 2πt/(ω₁ω₂), d₁ → q⁻²e^{2πt/ω₂}, d₂ → -q⁻¹.
pub fn m_by_substitution(lambda: Complex64, t: Complex64, p: &ModularPair, site: usize, sites: usize) -> QuantumMatrix {
    let q = p.q();
    // e^{-ω₁(U + 2πt/ω₁ω₂)} = e^{-2πt/ω₂} e^{-ω₁U}
    let tau = (-2.0 * PI * t / p.omega2()).exp();
    let d1 = (2.0 * PI * t / p.omega2()).exp() / (q * q);
    let d2 = -1.0 / q;
    QuantumMatrix {
        tag: MatrixTag::M,
        entries: lax_with(lambda, p, d1, d2, tau, site, sites),
    }
}

/// Conjugation by e^{iγX} on `site`: each term picks up e^{aγ}.
pub fn conjugate_by_momentum(mat: &QuantumMatrix, gamma: f64, site: usize) -> QuantumMatrix {
    let sites = mat.entries[0][0].sites();
    let fwd = OpWord::shift(site, Complex64::new(gamma, 0.0), sites);
    let back = OpWord::shift(site, Complex64::new(-gamma, 0.0), sites);
    mat.map(|_, _, w| fwd.compose(w).compose(&back))
}

/// e^{-πγσ₃/ω₂} L e^{πγσ₃/ω₂}.
pub fn conjugate_by_sigma3(mat: &QuantumMatrix, gamma: f64, p: &ModularPair) -> QuantumMatrix {
    let s = [1.0, -1.0];
    mat.map(|a, b, w| w.scale((-PI * gamma * (s[a] - s[b]) / p.omega2()).exp()))
}
