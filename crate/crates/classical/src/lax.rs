use crate::Mat2;
use num_complex::Complex64;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MatrixKind {
    LaxL,
    BacklundM,
}

/// L(λ | x̂, X̂) = [[λ - X̂, λ(d₂ + d₁X̂)x̂], [-x̂⁻¹, -d₂]].
pub fn lax_l(lambda: Complex64, x: f64, big_x: f64, d1: f64, d2: f64) -> Mat2 {
    let one = Complex64::new(1.0, 0.0);
    Mat2::new(
        lambda - big_x,
        lambda * (d2 + d1 * big_x) * x,
        -one / x,
        -d2 * one,
    )
}

/// M(λ; t | û, Û) = [[λ - tÛ, -λ(1 - Û)û], [-û⁻¹, 1]].
pub fn backlund_m(lambda: Complex64, t: f64, u: f64, big_u: f64) -> Mat2 {
    let one = Complex64::new(1.0, 0.0);
    Mat2::new(lambda - t * big_u, -lambda * (1.0 - big_u) * u, -one / u, one)
}

/// Either matrix from its site data; `a` is x̂ or û and `b` is X̂ or Û.
pub fn build_matrix(kind: MatrixKind, lambda: Complex64, a: f64, b: f64, d1: f64, d2: f64, t: f64) -> Mat2 {
    match kind {
        MatrixKind::LaxL => lax_l(lambda, a, b, d1, d2),
        MatrixKind::BacklundM => backlund_m(lambda, t, a, b),
    }
}

/// diag(1, x⁻¹) P₁ diag(1, X) P₂ᵗ diag(1, x) with
/// P₁ = [[α₁λ, β₁], [γ₁, δ₁]] and P₂ = [[α₂, β₂], [γ₂, δ₂λ]].
pub fn factorised(lambda: Complex64, x: f64, big_x: f64, p1: [f64; 4], p2: [f64; 4]) -> Mat2 {
    let c = |v: f64| Complex64::new(v, 0.0);
    let one = c(1.0);
    let zero = c(0.0);
    let m1 = Mat2::new(c(p1[0]) * lambda, c(p1[1]), c(p1[2]), c(p1[3]));
    let m2t = Mat2::new(c(p2[0]), c(p2[2]), c(p2[1]), c(p2[3]) * lambda);
    Mat2::new(one, zero, zero, one / x)
        * m1
        * Mat2::new(one, zero, zero, c(big_x))
        * m2t
        * Mat2::new(one, zero, zero, c(x))
}

/// Factor data of L: P₁ = [[λ, 1], [-1, 0]], P₂ᵗ = [[1, d₂], [-1, d₁λ]].
pub fn lax_factors(d1: f64, d2: f64) -> ([f64; 4], [f64; 4]) {
    ([1.0, 1.0, -1.0, 0.0], [1.0, -1.0, d2, d1])
}

/// Factor data of M: P₁ = [[λ, 1], [-1, 0]], P₂ᵗ = [[1, -1], [-t, λ]].
pub fn backlund_factors(t: f64) -> ([f64; 4], [f64; 4]) {
    ([1.0, 1.0, -1.0, 0.0], [1.0, -t, -1.0, 1.0])
}

/// v̂ solving L(x̂,X̂)M(û,Û) = M(v̂,V̂)L(ŷ,Ŷ) for a factorised M with
/// first factor (α₁, β₁, γ₁, δ₁).
pub fn backlund_v(x: f64, big_x: f64, u: f64, p1: [f64; 4], d1: f64, d2: f64) -> f64 {
    let [a1, b1, g1, dl1] = p1;
    -x * (b1 * g1 * u + g1 * d2 * dl1 * x - a1 * dl1 * u * big_x + g1 * d1 * dl1 * x * big_x)
        / (a1 * (d2 * dl1 * x + b1 * u))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn factorised_forms_match() {
        let l = Complex64::new(0.3, -0.8);
        let (p1, p2) = lax_factors(0.3, 0.45);
        let d = factorised(l, 1.7, 0.6, p1, p2) - lax_l(l, 1.7, 0.6, 0.3, 0.45);
        assert!(d.iter().all(|e| e.norm() < 1e-14));
        let (p1, p2) = backlund_factors(0.7);
        let d = factorised(l, 1.2, 1.9, p1, p2) - backlund_m(l, 0.7, 1.2, 1.9);
        assert!(d.iter().all(|e| e.norm() < 1e-14));
    }

    #[test]
    fn vanishing_couplings_pattern() {
        let l = Complex64::new(0.4, 0.2);
        let m = lax_l(l, 2.0, 3.0, 0.0, 0.0);
        assert_eq!(m[(0, 1)], Complex64::new(0.0, 0.0));
        assert_eq!(m[(1, 1)], Complex64::new(0.0, 0.0));
        assert_eq!(m[(0, 0)], l - 3.0);
        assert_eq!(m[(1, 0)], Complex64::new(-0.5, 0.0));
    }

    #[test]
    fn determinant_of_m() {
        let (t, u, uu) = (0.7, 1.3, 0.8);
        for l in [Complex64::new(0.2, 0.5), Complex64::new(-1.1, 0.3)] {
            let d = backlund_m(l, t, u, uu).determinant();
            assert!((d - (l - t) * uu).norm() < 1e-14);
        }
        assert!(backlund_m(Complex64::new(t, 0.0), t, u, uu).determinant().norm() < 1e-15);
    }

    #[test]
    fn delta_one_zero_reduction() {
        // With δ₁ = 0 the new û is -(γ₁/α₁)x̂ whatever the other data.
        let p1 = [1.3, 0.7, -0.4, 0.0];
        let v = backlund_v(1.9, 0.3, 2.2, p1, 0.3, 0.45);
        assert!((v - 0.4 / 1.3 * 1.9).abs() < 1e-14);
    }
}
