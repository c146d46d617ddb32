use crate::backlund::BacklundImage;
use crate::error::{ClassicalError, Result};
use crate::lax::{backlund_m, lax_l};
use crate::state::{prev, ClassicalState};
use crate::Mat2;
use num_complex::Complex64;

/// Per-site data of the triangular gauge of L(t | ŷ_n, Ŷ_n).
#[derive(Clone, Debug, PartialEq)]
pub struct Triangulation {
    pub a: Vec<Complex64>,
    pub b: Vec<Complex64>,
    pub d: Vec<Complex64>,
    /// Largest |21-entry| of the conjugated matrices.
    pub lower_residual: f64,
    /// Largest deviation of A_n, D_n from their closed forms.
    pub closed_form_residual: f64,
    /// Largest |M(t;t) (1, x̂_{n-1}⁻¹)ᵀ|.
    pub kernel_residual: f64,
}

pub fn triangulate_classical(st: &ClassicalState, img: &BacklundImage) -> Result<Triangulation> {
    let p = st.params;
    if (p.s - 1.0).abs() > 0.0 {
        return Err(ClassicalError::InvalidState("the triangular gauge is stated for s = 1".into()));
    }
    let len = st.len();
    let one = Complex64::new(1.0, 0.0);
    let zero = Complex64::new(0.0, 0.0);
    let t = Complex64::new(p.t, 0.0);
    let mut out = Triangulation {
        a: Vec::with_capacity(len),
        b: Vec::with_capacity(len),
        d: Vec::with_capacity(len),
        lower_residual: 0.0,
        closed_form_residual: 0.0,
        kernel_residual: 0.0,
    };
    for n in 0..len {
        let (x, xm, y) = (st.x[n], st.x[prev(n, len)], st.y[n]);
        let left = Mat2::new(one, zero, -one / x, one);
        let right = Mat2::new(one, zero, one / xm, one);
        let m = left * lax_l(t, y, img.big_y[n], p.d1, p.d2) * right;
        let den = 1.0 - p.d1 * p.t * y / xm;
        if den.abs() < 1e-12 {
            return Err(ClassicalError::SingularDenominator { site: n });
        }
        let a = -x / y * (1.0 + p.d2 * y / xm);
        let d = -(p.d2 + p.d1 * p.t) * (y / x) * (p.t + x / y) / den;
        out.lower_residual = out.lower_residual.max(m[(1, 0)].norm());
        out.closed_form_residual = out
            .closed_form_residual
            .max((m[(0, 0)] - a).norm() / a.abs().max(1.0))
            .max((m[(1, 1)] - d).norm() / d.abs().max(1.0));
        let k = backlund_m(t, p.t, img.u[n], img.big_u[n]) * nalgebra::Vector2::new(one, one / xm);
        out.kernel_residual = out.kernel_residual.max(k.camax());
        out.a.push(m[(0, 0)]);
        out.b.push(m[(0, 1)]);
        out.d.push(m[(1, 1)]);
    }
    Ok(out)
}
