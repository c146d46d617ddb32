//! Pole families of the Q kernel and the λ-lattice where the contour gets pinched.

use kernels::{Kernel, KernelParams, PoleFamily};
use num_complex::Complex64;
use serde::Serialize;

const I: Complex64 = Complex64::new(0.0, 1.0);

/// Coordinate combination a family depends on (u_N = 0).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Combination {
    /// u_a - w_{a-1}
    UW,
    /// w_a - w_{a-1}
    WW,
    /// w_a - u_a
    WU,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HalfPlane {
    /// combination + offset + cλ = -i(mω₁+nω₂), m, n ≥ 1
    Upper,
    /// combination + offset + cλ = i(mω₁+nω₂), m, n ≥ 0
    Lower,
}

/// One family written as combination + offset + c·λ on a half lattice.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct FamilyShape {
    pub family: PoleFamily,
    pub combination: Combination,
    pub offset: Complex64,
    pub lambda_coeff: f64,
    pub half_plane: HalfPlane,
    pub present: bool,
}

impl FamilyShape {
    pub fn start(&self) -> i64 {
        match self.half_plane {
            HalfPlane::Upper => 1,
            HalfPlane::Lower => 0,
        }
    }
}

/// The four families for the model in `params`.
pub fn pole_families(params: &KernelParams) -> [FamilyShape; 4] {
    let om = params.pair.omega();
    let (k1, k2) = (params.kappa1(), params.kappa2());
    let present = Kernel::present(params.model.kind);
    let shape = |family: PoleFamily, combination, offset, lambda_coeff, half_plane| FamilyShape {
        family,
        combination,
        offset,
        lambda_coeff,
        half_plane,
        present: present[family.factor()],
    };
    [
        shape(PoleFamily::XV, Combination::UW, k2 - 1.5 * I * om, 0.0, HalfPlane::Upper),
        shape(PoleFamily::UV, Combination::WW, k1 - 0.5 * I * om, 0.0, HalfPlane::Upper),
        shape(PoleFamily::XVT, Combination::UW, k1 - I * om, 1.0, HalfPlane::Lower),
        shape(PoleFamily::UX, Combination::WU, 0.5 * I * om, -1.0, HalfPlane::Lower),
    ]
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct PinchPoint {
    pub m: i64,
    pub n: i64,
    pub re: f64,
    pub im: f64,
    pub order: usize,
}

impl PinchPoint {
    pub fn lambda(&self) -> Complex64 {
        Complex64::new(self.re, self.im)
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct PoleLattice {
    pub base: Complex64,
    pub generators: [Complex64; 2],
    pub order: usize,
    pub families: [FamilyShape; 4],
    pub points: Vec<PinchPoint>,
}

#[derive(Serialize)]
struct JsonPoint {
    re: f64,
    im: f64,
    order: usize,
}

impl PoleLattice {
    /// JSON list of {re, im, order}.
    pub fn to_json(&self) -> String {
        let pts: Vec<JsonPoint> = self
            .points
            .iter()
            .map(|p| JsonPoint {
                re: p.re,
                im: p.im,
                order: p.order,
            })
            .collect();
        serde_json::to_string(&pts).expect("plain numbers serialise")
    }
}

/// Pinches of an upper family against a lower family in the same combination,
/// for λ-lattice indices 0..=mmax in each direction. Each pinch occurs once
/// per site, hence order N.
pub fn pole_pinch_lattice(params: &KernelParams, n_sites: usize, mmax: usize) -> PoleLattice {
    let pair = &params.pair;
    let families = pole_families(params);
    let mut base = None;
    let mut points = Vec::new();
    for up in families.iter().filter(|f| f.half_plane == HalfPlane::Upper) {
        for lo in families
            .iter()
            .filter(|f| f.half_plane == HalfPlane::Lower && f.combination == up.combination)
        {
            let c = lo.lambda_coeff - up.lambda_coeff;
            if c == 0.0 {
                continue;
            }
            let s0 = up.start() + lo.start();
            let at = |m: i64, n: i64| (up.offset - lo.offset + pair.lattice_point(m + s0, n + s0)) / c;
            base.get_or_insert(at(0, 0));
            if !(up.present && lo.present) {
                continue;
            }
            for m in 0..=mmax as i64 {
                for n in 0..=mmax as i64 {
                    let l = at(m, n);
                    points.push(PinchPoint {
                        m,
                        n,
                        re: l.re,
                        im: l.im,
                        order: n_sites,
                    });
                }
            }
        }
    }
    PoleLattice {
        base: base.expect("the family list has a pinching pair"),
        generators: [I * pair.omega1(), I * pair.omega2()],
        order: n_sites,
        families,
        points,
    }
}
