//! The double sine 𝒮(z) by its infinite product or its contour integral.

use crate::error::{LatticeKind, Result, SpecError};
use crate::modular::ModularPair;
use crate::qpoch::{log_qpoch_inf, terms_needed};
use crate::theta::quad_b;
use num_complex::Complex64;
use std::f64::consts::PI;

const I: Complex64 = Complex64::new(0.0, 1.0);
const ONE: Complex64 = Complex64::new(1.0, 0.0);

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MethodKind {
    Product,
    Integral,
    Auto,
}

/// Budget for the contour integral.
///
/// The contour is the horizontal line Im t = h with h = `lift` times the
/// height of the lowest pole of 1/((e^{ω₁t}-1)(e^{ω₂t}-1)) above the axis.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct QuadBudget {
    pub lift: f64,
    pub tol: f64,
    /// Largest |Re t| the trapezoid sum may reach before giving up.
    pub cutoff: f64,
}

impl Default for QuadBudget {
    fn default() -> Self {
        Self {
            lift: 0.5,
            tol: 1e-14,
            cutoff: 400.0,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct EvalMethod {
    pub kind: MethodKind,
    /// Maximal number of factors per q-product.
    pub k: usize,
    pub budget: QuadBudget,
    /// Product is used only when both nomes are at most 1 - eps_res in modulus.
    pub eps_res: f64,
    /// Relative distance below which a point counts as on a lattice.
    pub lattice_tol: f64,
}

impl Default for EvalMethod {
    fn default() -> Self {
        Self {
            kind: MethodKind::Auto,
            k: 4000,
            budget: QuadBudget::default(),
            eps_res: 1e-6,
            lattice_tol: 1e-10,
        }
    }
}

impl EvalMethod {
    pub fn product() -> Self {
        Self {
            kind: MethodKind::Product,
            ..Self::default()
        }
    }

    pub fn integral() -> Self {
        Self {
            kind: MethodKind::Integral,
            ..Self::default()
        }
    }
}

/// Lattice point of 𝒮 near `z`, if any.
///
/// Zeros sit at i(mω₁+nω₂) with m,n >= 0 and poles at m,n <= -1.
pub fn classify_lattice(z: Complex64, p: &ModularPair, tol: f64) -> Option<(LatticeKind, i64, i64)> {
    let scale = tol * z.norm().max(1.0);
    let kind_of = |m: i64, n: i64| {
        if m >= 0 && n >= 0 {
            Some(LatticeKind::Zero)
        } else if m <= -1 && n <= -1 {
            Some(LatticeKind::Pole)
        } else {
            None
        }
    };
    let (w1, w2) = (p.omega1(), p.omega2());
    let det = (w1.re * w2.im - w1.im * w2.re).abs() / (w1.norm() * w2.norm());
    if det > 1e-8 {
        let (m, n) = p.lattice_coords(z)?;
        let (mr, nr) = (m.round() as i64, n.round() as i64);
        if (z - p.lattice_point(mr, nr)).norm() <= scale {
            return kind_of(mr, nr).map(|k| (k, mr, nr));
        }
        return None;
    }
    // Parallel periods: the lattice degenerates, scan it.
    let bound = (z.norm() / w1.norm().min(w2.norm())) as i64 + 2;
    for m in -bound..=bound {
        for n in -bound..=bound {
            if (z - p.lattice_point(m, n)).norm() <= scale {
                if let Some(k) = kind_of(m, n) {
                    return Some((k, m, n));
                }
            }
        }
    }
    None
}

/// Evaluator for 𝒮 at fixed periods.
#[derive(Clone, Debug)]
pub struct DoubleSine {
    pair: ModularPair,
    method: EvalMethod,
    a: Complex64,
    b: Complex64,
    nome: Complex64,
    nome_dual: Complex64,
    product_ok: bool,
}

impl DoubleSine {
    pub fn new(pair: ModularPair, method: EvalMethod) -> Result<Self> {
        let (a, b) = pair.oriented();
        let (nome, nome_dual) = pair.effective_nomes();
        let cap = 1.0 - method.eps_res;
        let product_ok = nome.norm() <= cap && nome_dual.norm() <= cap && !pair.is_resonant(1e-6, 50);
        // 𝒮 is symmetric in its periods, so the product may be taken in
        // whichever orientation has |q| < 1.
        if method.kind == MethodKind::Product && !product_ok {
            return Err(SpecError::MethodInadmissible(format!(
                "product representation needs |q| < 1 in some orientation (|q| = {:.6})",
                pair.q().norm()
            )));
        }
        Ok(Self {
            pair,
            method,
            a,
            b,
            nome,
            nome_dual,
            product_ok,
        })
    }

    pub fn pair(&self) -> &ModularPair {
        &self.pair
    }

    pub fn method(&self) -> &EvalMethod {
        &self.method
    }

    pub fn eval(&self, z: Complex64) -> Result<Complex64> {
        if let Some((kind, m, n)) = classify_lattice(z, &self.pair, self.method.lattice_tol) {
            return Err(SpecError::OnLattice { z, kind, m, n });
        }
        if let Some(r) = self.near_regular_lattice_point(z) {
            // Both routes divide two vanishing factors here; use the mean
            // value over a small circle instead.
            const NODES: usize = 16;
            let mut sum = Complex64::new(0.0, 0.0);
            for j in 0..NODES {
                let w = z + Complex64::from_polar(r, 2.0 * PI * j as f64 / NODES as f64);
                sum += self.eval_direct(w)?;
            }
            return Ok(sum / NODES as f64);
        }
        self.eval_direct(z)
    }

    /// Radius of the averaging circle when z is close to a lattice point of
    /// mixed sign, where 𝒮 is regular.
    fn near_regular_lattice_point(&self, z: Complex64) -> Option<f64> {
        let (m, n) = self.pair.lattice_coords(z)?;
        let (mr, nr) = (m.round() as i64, n.round() as i64);
        if (mr >= 0) == (nr >= 0) {
            return None;
        }
        let (w1, w2) = (self.pair.omega1(), self.pair.omega2());
        let spacing = w1.norm().min(w2.norm()).min((w1 - w2).norm()).min((w1 + w2).norm());
        let r = 0.05 * spacing;
        ((z - self.pair.lattice_point(mr, nr)).norm() < 0.5 * r).then_some(r)
    }

    /// 𝒮(z) - 1 without cancellation when 𝒮(z) is close to 1.
    pub fn eval_minus_one(&self, z: Complex64) -> Result<Complex64> {
        if self.product_ok && self.method.kind != MethodKind::Integral && self.near_regular_lattice_point(z).is_none() {
            if let Some(l) = self.log_product(z)? {
                return Ok(cexpm1(l));
            }
        }
        Ok(self.eval(z)? - ONE)
    }

    fn eval_direct(&self, z: Complex64) -> Result<Complex64> {
        match self.method.kind {
            MethodKind::Product => self.product(z),
            MethodKind::Integral => self.integral(z),
            MethodKind::Auto => {
                if self.product_ok && self.product_cost(z) <= self.method.k as f64 {
                    self.product(z)
                } else {
                    self.integral(z)
                }
            }
        }
    }

    fn product_cost(&self, z: Complex64) -> f64 {
        let x = (-2.0 * PI * z / self.b).exp();
        let y = self.nome_dual * (-2.0 * PI * z / self.a).exp();
        terms_needed(x, self.nome, 1e-17).max(terms_needed(y, self.nome_dual, 1e-17))
    }

    /// (e^{-2πz/b}; e^{2πia/b}) / (e^{-2πib/a} e^{-2πz/a}; e^{-2πib/a}).
    pub fn product(&self, z: Complex64) -> Result<Complex64> {
        match self.log_product(z) {
            Ok(Some(l)) => Ok(l.exp()),
            Ok(None) => Ok(Complex64::new(0.0, 0.0)),
            Err(e) => Err(e),
        }
    }

    fn log_product(&self, z: Complex64) -> Result<Option<Complex64>> {
        let x = (-2.0 * PI * z / self.b).exp();
        let y = self.nome_dual * (-2.0 * PI * z / self.a).exp();
        let num = log_qpoch_inf(x, self.nome, 1e-17, self.method.k)?;
        let den = log_qpoch_inf(y, self.nome_dual, 1e-17, self.method.k)?;
        match (num, den) {
            (_, None) => Err(self.lattice_error(z, LatticeKind::Pole)),
            (None, _) => Ok(None),
            (Some(n), Some(d)) => Ok(Some(n - d)),
        }
    }

    fn lattice_error(&self, z: Complex64, kind: LatticeKind) -> SpecError {
        let (m, n) = self.pair.lattice_coords(z).unwrap_or((f64::NAN, f64::NAN));
        SpecError::OnLattice {
            z,
            kind,
            m: m.round() as i64,
            n: n.round() as i64,
        }
    }

    /// Contour integral on a lifted horizontal line, after moving z into the
    /// central strip by quasi-periodicity and into Re z >= 0 by reflection.
    pub fn integral(&self, z0: Complex64) -> Result<Complex64> {
        let (w1, w2) = (self.pair.omega1(), self.pair.omega2());
        let (ws, wo) = if w1.re <= w2.re { (w1, w2) } else { (w2, w1) };
        let centre = -0.5 * self.pair.omega().re;
        let half = 0.5 * ws.re;
        let mut z = z0;
        let mut pref = ONE;
        let mut guard = 0usize;
        while z.im < centre - half {
            let f = ONE - (-2.0 * PI * (z + I * ws) / wo).exp();
            if f.norm() == 0.0 {
                return Err(self.lattice_error(z0, LatticeKind::Pole));
            }
            pref /= f;
            z += I * ws;
            guard += 1;
            if guard > 100_000 {
                return Err(SpecError::QuadratureNotConverged("strip reduction".into()));
            }
        }
        while z.im > centre + half {
            pref *= ONE - (-2.0 * PI * z / wo).exp();
            z -= I * ws;
            guard += 1;
            if guard > 100_000 {
                return Err(SpecError::QuadratureNotConverged("strip reduction".into()));
            }
        }
        if z.re < 0.0 {
            pref *= (I * quad_b(z, &self.pair)).exp();
            let zr = -z - I * self.pair.omega();
            let l = self.log_integral(zr)?;
            return Ok(pref * (-l).exp());
        }
        let l = self.log_integral(z)?;
        Ok(pref * l.exp())
    }

    /// ln 𝒮(z) for z in the convergence strip -Re Ω < Im z < 0.
    pub fn log_integral(&self, z: Complex64) -> Result<Complex64> {
        let (w1, w2) = (self.pair.omega1(), self.pair.omega2());
        let re_omega = self.pair.omega().re;
        if !(z.im < 0.0 && z.im > -re_omega) {
            return Err(SpecError::MethodInadmissible(format!(
                "integral representation needs -Re Ω < Im z < 0, got Im z = {}",
                z.im
            )));
        }
        let budget = &self.method.budget;
        let pole = 2.0 * PI * (w1.re / w1.norm_sqr()).min(w2.re / w2.norm_sqr());
        let h = budget.lift * pole;
        let d = h.min(pole - h);
        let digits = (1.0 / budget.tol).ln();
        let step = 2.0 * PI * d / (digits + z.re.abs() * d + 3.0);
        let f = |s: f64| {
            let t = Complex64::new(s, h);
            (I * z * t).exp() / (t * ((w1 * t).exp() - ONE) * ((w2 * t).exp() - ONE))
        };
        let mut sum = f(0.0);
        for dir in [1.0, -1.0] {
            let mut k = 1usize;
            let mut quiet = 0;
            loop {
                let s = dir * k as f64 * step;
                if s.abs() > budget.cutoff {
                    return Err(SpecError::QuadratureNotConverged(format!(
                        "double-sine integrand not below tolerance at |t| = {}",
                        budget.cutoff
                    )));
                }
                let v = f(s);
                sum += v;
                if v.norm() < budget.tol * 1e-3 * sum.norm().max(1.0) {
                    quiet += 1;
                    if quiet >= 4 {
                        break;
                    }
                } else {
                    quiet = 0;
                }
                k += 1;
            }
        }
        Ok(sum * step)
    }
}

/// e^w - 1 accurate for small |w|.
pub fn cexpm1(w: Complex64) -> Complex64 {
    let (s, c) = w.im.sin_cos();
    let half = (0.5 * w.im).sin();
    Complex64::new(w.re.exp_m1() * c - 2.0 * half * half, w.re.exp() * s)
}

/// 𝒮(z) with the given method.
pub fn dsine(z: Complex64, p: &ModularPair, m: &EvalMethod) -> Result<Complex64> {
    DoubleSine::new(*p, *m)?.eval(z)
}

/// Which logarithm sheet to use when inverting x = e^{-2πz/ω₂}.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Sheet {
    Principal,
    /// The caller supplies z directly; it must satisfy e^{-2πz/ω₂} = x.
    Explicit(Complex64),
}

/// S(x) = 𝒮(z) with x = e^{-2πz/ω₂}.
pub fn sfun(x: Complex64, p: &ModularPair, m: &EvalMethod, sheet: Sheet) -> Result<Complex64> {
    let w2 = p.omega2();
    let z = match sheet {
        Sheet::Principal => {
            if x.norm() == 0.0 {
                return Ok(ONE);
            }
            -w2 / (2.0 * PI) * x.ln()
        }
        Sheet::Explicit(z) => {
            let img = (-2.0 * PI * z / w2).exp();
            if (img - x).norm() > 1e-10 * x.norm().max(1.0) {
                return Err(SpecError::BranchAmbiguity(format!(
                    "z = {z} does not map to x = {x}"
                )));
            }
            z
        }
    };
    dsine(z, p, m)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn zero_and_pole_rejected() {
        let p = ModularPair::default_pair();
        let m = EvalMethod::default();
        match dsine(c(0.0, 0.0), &p, &m) {
            Err(SpecError::OnLattice { kind: LatticeKind::Zero, m: 0, n: 0, .. }) => {}
            other => panic!("{other:?}"),
        }
        match dsine(-I * p.omega(), &p, &m) {
            Err(SpecError::OnLattice { kind: LatticeKind::Pole, m: -1, n: -1, .. }) => {}
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn quasi_period_ratio_two() {
        // ω = (1, 2), z = ln2/π gives e^{-2πz/ω₂} = 1/2.
        let p = ModularPair::new(c(1.0, 0.0), c(2.0, 0.0)).unwrap();
        let z = c(2f64.ln() / PI, 0.0);
        let m = EvalMethod::default();
        let r = dsine(z - I, &p, &m).unwrap() / dsine(z, &p, &m).unwrap();
        assert!((r - c(2.0, 0.0)).norm() < 1e-10, "{r}");
    }

    #[test]
    fn product_requires_small_q() {
        let p = ModularPair::new(c(1.0, 0.0), c(2.0, 0.0)).unwrap();
        assert!(matches!(
            DoubleSine::new(p, EvalMethod::product()),
            Err(SpecError::MethodInadmissible(_))
        ));
        assert!(DoubleSine::new(p, EvalMethod::default()).is_ok());
        let s = ModularPair::new(c(1.0, 0.0), c(1.0, 0.7)).unwrap();
        assert!(!s.product_admissible());
        assert!(DoubleSine::new(s, EvalMethod::product()).is_ok());
    }

    #[test]
    fn symmetric_in_periods() {
        let p = ModularPair::default_pair();
        let m = EvalMethod::default();
        let z = c(0.4, -0.9);
        let a = dsine(z, &p, &m).unwrap();
        let b = dsine(z, &p.swap(), &m).unwrap();
        assert!((a - b).norm() < 1e-13 * a.norm());
    }

    #[test]
    fn explicit_sheet_checked() {
        let p = ModularPair::default_pair();
        let m = EvalMethod::default();
        let z = c(0.2, -0.5);
        let x = (-2.0 * PI * z / p.omega2()).exp();
        assert!(sfun(x, &p, &m, Sheet::Explicit(z)).is_ok());
        assert!(matches!(
            sfun(x, &p, &m, Sheet::Explicit(z + 0.3)),
            Err(SpecError::BranchAmbiguity(_))
        ));
    }
}
