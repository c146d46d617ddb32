use crate::error::{OpError, Result};
use crate::quantum::QuantumMatrix;
use crate::testfn::TestFunction;
use crate::word::OpWord;
use num_complex::Complex64;
use specfun::ModularPair;
use std::f64::consts::PI;

const I: Complex64 = Complex64::new(0.0, 1.0);

pub type Mat4 = [[Complex64; 4]; 4];

/// R(λ), index 2a + b.
pub fn r_matrix(lambda: Complex64, p: &ModularPair) -> Result<Mat4> {
    let (w1, w2) = (p.omega1(), p.omega2());
    let q = p.q();
    let den = (PI * (lambda + I * w1) / w2).sinh();
    if den.norm() < 1e-14 {
        return Err(OpError::SingularRMatrix(lambda));
    }
    let s = (PI * lambda / w2).sinh();
    let z = Complex64::new(0.0, 0.0);
    let one = Complex64::new(1.0, 0.0);
    let mut r = [[z; 4]; 4];
    r[0][0] = one;
    r[3][3] = one;
    r[1][1] = s / (q * den);
    r[2][2] = q * s / den;
    r[1][2] = (q - 1.0 / q) * (-PI * lambda / w2).exp() / (2.0 * den);
    r[2][1] = (q - 1.0 / q) * (PI * lambda / w2).exp() / (2.0 * den);
    Ok(r)
}

/// (L₁L₂)_{(ab),(cd)} = L_ac(λ₁)L_bd(λ₂) as words.
fn tensor(a: &QuantumMatrix, b: &QuantumMatrix) -> Vec<Vec<OpWord>> {
    let mut out = vec![vec![OpWord::zero(a.entries[0][0].sites()); 4]; 4];
    for i in 0..2 {
        for j in 0..2 {
            for k in 0..2 {
                for l in 0..2 {
                    out[2 * i + j][2 * k + l] = a.entries[i][k].compose(&b.entries[j][l]);
                }
            }
        }
    }
    out
}

/// Both sides of R₁₂L₁L₂ = L₂L₁R₁₂ as 4×4 word matrices.
pub fn rll_sides(l1: &QuantumMatrix, l2: &QuantumMatrix, r: &Mat4) -> (Vec<Vec<OpWord>>, Vec<Vec<OpWord>>) {
    let sites = l1.entries[0][0].sites();
    let a = tensor(l1, l2);
    // (L₂L₁)_{(ab),(cd)} = L_bd(λ₂)L_ac(λ₁)
    let mut b = vec![vec![OpWord::zero(sites); 4]; 4];
    for i in 0..2 {
        for j in 0..2 {
            for k in 0..2 {
                for l in 0..2 {
                    b[2 * i + j][2 * k + l] = l2.entries[j][l].compose(&l1.entries[i][k]);
                }
            }
        }
    }
    let mut lhs = vec![vec![OpWord::zero(sites); 4]; 4];
    let mut rhs = vec![vec![OpWord::zero(sites); 4]; 4];
    for i in 0..4 {
        for j in 0..4 {
            for k in 0..4 {
                lhs[i][j] = lhs[i][j].add(&a[k][j].scale(r[i][k]));
                rhs[i][j] = rhs[i][j].add(&b[i][k].scale(r[k][j]));
            }
        }
    }
    (lhs, rhs)
}

/// Word-level residual of the RLL relation.
pub fn rll_word_residual(l1: &QuantumMatrix, l2: &QuantumMatrix, r: &Mat4) -> f64 {
    let (lhs, rhs) = rll_sides(l1, l2, r);
    let mut worst: f64 = 0.0;
    let mut scale: f64 = 1.0;
    for i in 0..4 {
        for j in 0..4 {
            worst = worst.max(lhs[i][j].sub(&rhs[i][j]).coeff_norm());
            scale = scale.max(lhs[i][j].coeff_norm());
        }
    }
    worst / scale
}

/// Relative residual of the RLL relation applied to f at x.
pub fn rll_applied_residual(l1: &QuantumMatrix, l2: &QuantumMatrix, r: &Mat4, f: &TestFunction, x: &[Complex64]) -> f64 {
    let (lhs, rhs) = rll_sides(l1, l2, r);
    let mut worst: f64 = 0.0;
    let mut scale: f64 = 0.0;
    for i in 0..4 {
        for j in 0..4 {
            let a = lhs[i][j].apply(f, x);
            let b = rhs[i][j].apply(f, x);
            worst = worst.max((a - b).norm());
            scale = scale.max(a.norm());
        }
    }
    worst / scale.max(1e-300)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn corners_are_one() {
        let p = ModularPair::default_pair();
        let r = r_matrix(Complex64::new(0.3, 0.7), &p).unwrap();
        assert_eq!(r[0][0], Complex64::new(1.0, 0.0));
        assert_eq!(r[3][3], Complex64::new(1.0, 0.0));
    }

    #[test]
    fn large_lambda_limit() {
        let p = ModularPair::default_pair();
        let q = p.q();
        let r = r_matrix(Complex64::new(40.0, 0.0), &p).unwrap();
        // sinh(πλ/ω₂)/sinh(π(λ+iω₁)/ω₂) → e^{-iπω₁/ω₂} = q⁻¹
        assert!((r[1][1] - 1.0 / (q * q)).norm() < 1e-12);
        assert!((r[2][2] - 1.0).norm() < 1e-12);
        assert!(r[1][2].norm() < 1e-12);
    }

    #[test]
    fn singular_point() {
        let p = ModularPair::default_pair();
        assert!(matches!(r_matrix(-I * p.omega1(), &p), Err(OpError::SingularRMatrix(_))));
    }
}
