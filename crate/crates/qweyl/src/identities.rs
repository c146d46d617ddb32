//! Exact residuals of the operator identities built from the compact S.

use crate::algebra::{Primitive, WeylAlgebra};
use crate::coeff::Coeff;
use crate::error::{QweylError, Result};
use crate::qexp::{compact_s, compact_s_inv};
use crate::series::WeylSeries;
use std::sync::Arc;

type Series<C> = WeylSeries<C>;

fn s<C: Coeff>(x: &Series<C>, c: &C, k: i64) -> Result<Series<C>> {
    compact_s(&x.scale(c), k)
}

fn s_inv<C: Coeff>(x: &Series<C>, c: &C, k: i64) -> Result<Series<C>> {
    compact_s_inv(&x.scale(c), k)
}

fn product<C: Coeff>(factors: Vec<Series<C>>) -> Series<C> {
    let mut it = factors.into_iter();
    let first = it.next().expect("at least one factor");
    it.fold(first, |acc, f| &acc * &f)
}

/// S(q²x)S⁻¹(x)(1-x) - 1 for a single generator.
pub fn functional_equation_residual<C: Coeff>(q: C, k: i64) -> Result<Series<C>> {
    let alg = WeylAlgebra::pair(0, q, k)?;
    let x = Series::generator(&alg, 0, 1)?;
    let one = Series::one(&alg);
    let lhs = product(vec![s(&x, &alg.qpow(2), k)?, s_inv(&x, &C::one(), k)?, &one - &x]);
    Ok(lhs - one)
}

/// S(u+v) - S(u)S(v) with uv = q^{2θ}vu.
pub fn schutzenberger_residual<C: Coeff>(q: C, theta: i32, k: i64) -> Result<Series<C>> {
    let alg = WeylAlgebra::pair(theta, q, k)?;
    let u = Series::generator(&alg, 0, 1)?;
    let v = Series::generator(&alg, 1, 1)?;
    let one = C::one();
    Ok(s(&(&u + &v), &one, k)? - s(&u, &one, k)? * s(&v, &one, k)?)
}

/// The unique θ ∈ {1, -1} for which the Schützenberger residual vanishes at order k.
pub fn schutzenberger_orientation<C: Coeff>(q: C, k: i64) -> Result<i32> {
    let mut ok = Vec::new();
    for theta in [1, -1] {
        if schutzenberger_residual(q.clone(), theta, k)?.vanishes() {
            ok.push(theta);
        }
    }
    match ok[..] {
        [t] => Ok(t),
        _ => Err(QweylError::Invalid(format!("orientations with zero residual: {ok:?}"))),
    }
}

pub const XT: usize = 0;
pub const EX: usize = 1;
pub const PU: usize = 2;
pub const EU: usize = 3;
pub const PV: usize = 4;
pub const EV: usize = 5;
pub const LAMBDA: usize = 6;

/// Site exponentials e^{2πx̂/ω₂}, e^{-ω₁X̂}, e^{-2πû/ω₂}, e^{-ω₁Û}, e^{-2πv̂/ω₂}, e^{-ω₁V̂},
/// optionally with a central e^{-2πλ/ω₂}.
#[derive(Clone, Debug)]
pub struct Sites<C> {
    alg: Arc<WeylAlgebra<C>>,
}

impl<C: Coeff> Sites<C> {
    pub fn new(q: C, order: i64, with_lambda: bool) -> Result<Self> {
        let mut gens = vec![
            Primitive::new(0, -1, 0),
            Primitive::new(0, 0, 1),
            Primitive::new(1, 1, 0),
            Primitive::new(1, 0, 1),
            Primitive::new(2, 1, 0),
            Primitive::new(2, 0, 1),
        ];
        let mut weights = vec![1, 0, 0, 0, 1, 0];
        if with_lambda {
            gens.push(Primitive::new(3, 1, 0));
            weights.push(0);
        }
        Ok(Self {
            alg: WeylAlgebra::from_primitives(&gens, weights, q, order)?,
        })
    }

    pub fn algebra(&self) -> &Arc<WeylAlgebra<C>> {
        &self.alg
    }

    pub fn gen(&self, i: usize, p: i32) -> Series<C> {
        Series::generator(&self.alg, i, p).expect("site generator within order")
    }

    fn one(&self) -> Series<C> {
        Series::one(&self.alg)
    }

    /// 𝒰 = (1-e^{-ω₁Û})e^{-2π(û-x̂)/ω₂}.
    pub fn cal_u(&self) -> Series<C> {
        product(vec![self.one() - self.gen(EU, 1), self.gen(PU, 1), self.gen(XT, 1)])
    }

    /// 𝒱 = (1-e^{-ω₁V̂})e^{-2π(v̂-x̂)/ω₂}.
    pub fn cal_v(&self) -> Series<C> {
        product(vec![self.one() - self.gen(EV, 1), self.gen(PV, 1), self.gen(XT, 1)])
    }

    /// 𝒲 = (1-e^{-ω₁V̂})e^{-2π(v̂-û)/ω₂}.
    pub fn cal_w(&self) -> Series<C> {
        product(vec![self.one() - self.gen(EV, 1), self.gen(PV, 1), self.gen(PU, -1)])
    }

    /// M(λ;t) at site u (PU, EU) or v (PV, EV), with τ = e^{-2πt/ω₂}.
    pub fn m_matrix(&self, site: usize, tau: &C, lambda: &Series<C>) -> [[Series<C>; 2]; 2] {
        let (p, e) = match site {
            1 => (PU, EU),
            2 => (PV, EV),
            _ => panic!("M is defined on sites u and v"),
        };
        let q = self.alg.q().clone();
        let one = self.one();
        let e1 = self.gen(e, 1);
        [
            [
                lambda - &e1.scale(tau),
                product(vec![lambda.clone(), &one - &e1, self.gen(p, 1)]).scale(&-q.clone()),
            ],
            [
                self.gen(p, -1).scale(&-(C::one() / (q.clone() * q.clone()))),
                one.scale(&(C::one() / q)),
            ],
        ]
    }

    /// Ř(t,t') = S(-q³τ'𝒲)/S(-q³τ𝒲).
    pub fn r_check(&self, tau: &C, tau_p: &C, k: i64) -> Result<Series<C>> {
        let q3 = self.alg.qpow(3);
        let w = self.cal_w();
        Ok(s(&w, &(-q3.clone() * tau_p.clone()), k)? * s_inv(&w, &(-q3 * tau.clone()), k)?)
    }
}

fn mat_mul<C: Coeff>(a: &[[Series<C>; 2]; 2], b: &[[Series<C>; 2]; 2]) -> [[Series<C>; 2]; 2] {
    let e = |i: usize, j: usize| &a[i][0] * &b[0][j] + &a[i][1] * &b[1][j];
    [[e(0, 0), e(0, 1)], [e(1, 0), e(1, 1)]]
}

#[derive(Clone, Debug)]
pub struct AdjointResidual<C> {
    /// S(c𝒲)𝒰S⁻¹(c𝒲) - 𝒰 - cq⁻²𝒱e^{-ω₁Û}.
    pub identity: Series<C>,
    /// S(c𝒲)S⁻¹(q²c𝒲) - (1 - c𝒲).
    pub intermediate: Series<C>,
    /// S(c𝒲)e^{-ω₁Û}S⁻¹(c𝒲) - S(c𝒲)S⁻¹(q²c𝒲)e^{-ω₁Û}.
    pub shift: Series<C>,
}

impl<C: Coeff> AdjointResidual<C> {
    pub fn is_zero(&self) -> bool {
        self.identity.is_zero() && self.intermediate.is_zero() && self.shift.is_zero()
    }

    pub fn vanishes(&self) -> bool {
        self.identity.vanishes() && self.intermediate.vanishes() && self.shift.vanishes()
    }

    pub fn max_magnitude(&self) -> f64 {
        [&self.identity, &self.intermediate, &self.shift]
            .iter()
            .map(|s| s.max_magnitude())
            .fold(0.0, f64::max)
    }
}

pub fn adjoint_residual<C: Coeff>(q: C, c: &C, k: i64) -> Result<AdjointResidual<C>> {
    let sites = Sites::new(q, k, false)?;
    let alg = sites.algebra().clone();
    let (u, v, w) = (sites.cal_u(), sites.cal_v(), sites.cal_w());
    let eu = sites.gen(EU, 1);
    let s_cw = s(&w, c, k)?;
    let s_inv_cw = s_inv(&w, c, k)?;
    let s_inv_q2cw = s_inv(&w, &(alg.qpow(2) * c.clone()), k)?;
    let lhs = product(vec![s_cw.clone(), u.clone(), s_inv_cw.clone()]);
    let rhs = &u + &product(vec![v, eu.clone()]).scale(&(c.clone() * alg.qpow(-2)));
    let one = Series::one(&alg);
    Ok(AdjointResidual {
        identity: lhs - rhs,
        intermediate: &s_cw * &s_inv_q2cw - (one - w.scale(c)),
        shift: product(vec![s_cw.clone(), eu.clone(), s_inv_cw]) - product(vec![s_cw, s_inv_q2cw, eu]),
    })
}

/// θ with yŶ = q^{2θ}Ŷy for y = 𝒰, Ŷ = 𝒱e^{-ω₁Û}, found in the site algebra.
pub fn weyl_pair_theta<C: Coeff>(q: C, k: i64) -> Result<i32> {
    let sites = Sites::new(q, k.max(4), false)?;
    let y = sites.cal_u();
    let yy = &sites.cal_v() * &sites.gen(EU, 1);
    let (a, b) = (&y * &yy, &yy * &y);
    (-3..=3)
        .find(|&t| (&a - &b.scale(&sites.algebra().qpow(2 * t as i64))).vanishes())
        .ok_or_else(|| QweylError::Invalid("y and Y do not form a Weyl pair".into()))
}

/// Couplings and the two Bäcklund exponentials τ = e^{-2πt/ω₂}, τ' = e^{-2πt'/ω₂}.
#[derive(Clone, Debug, PartialEq)]
pub struct ClcrParams<C> {
    pub d1: C,
    pub d2: C,
    pub tau: C,
    pub tau_p: C,
}

impl<C: Coeff> ClcrParams<C> {
    /// (a, b) = (-q/d₂, -q/d₁).
    pub fn ab(&self, q: &C) -> Result<(C, C)> {
        if self.d1.is_zero() || self.d2.is_zero() {
            return Err(QweylError::Invalid("a and b need d₁, d₂ ≠ 0".into()));
        }
        Ok((-q.clone() / self.d2.clone(), -q.clone() / self.d1.clone()))
    }
}

#[derive(Clone, Debug)]
pub struct ClcrResidual<C> {
    /// C_L - C_R written through (y, Ŷ).
    pub weyl_pair: Series<C>,
    /// C_L - C_R in the site algebra, before the adjoint-action rewriting.
    pub sites: Series<C>,
    /// (y, Ŷ) form against the Schützenberger-factored form, for C_L and C_R.
    pub factored_left: Series<C>,
    pub factored_right: Series<C>,
}

impl<C: Coeff> ClcrResidual<C> {
    pub fn parts(&self) -> [&Series<C>; 4] {
        [&self.weyl_pair, &self.sites, &self.factored_left, &self.factored_right]
    }

    pub fn is_zero(&self) -> bool {
        self.parts().iter().all(|s| s.is_zero())
    }

    pub fn vanishes(&self) -> bool {
        self.parts().iter().all(|s| s.vanishes())
    }

    pub fn max_magnitude(&self) -> f64 {
        self.parts().iter().map(|s| s.max_magnitude()).fold(0.0, f64::max)
    }
}

pub fn clcr_residual<C: Coeff>(q: C, params: &ClcrParams<C>, k: i64) -> Result<ClcrResidual<C>> {
    let (a, b) = params.ab(&q)?;
    let (t, tp) = (params.tau.clone(), params.tau_p.clone());
    let theta = weyl_pair_theta(q.clone(), k)?;
    let pair = WeylAlgebra::pair(theta, q.clone(), k)?;
    let y = Series::generator(&pair, 0, 1)?;
    let yy = Series::generator(&pair, 1, 1)?;
    let aq = a.clone() * q.clone();
    let z1 = &y + &yy.scale(&(b.clone() / a.clone()));
    let z2 = &y - &yy.scale(&(q.clone() * tp.clone()));
    let z3 = &y - &yy.scale(&(q.clone() * t.clone()));
    let cl = product(vec![
        s(&z1, &(-aq.clone() * tp.clone()), k)?,
        s_inv(&z1, &(-aq.clone() * t.clone()), k)?,
        s(&z2, &(-aq.clone() * t.clone()), k)?,
        s_inv(&z2, &b, k)?,
    ]);
    let cr = product(vec![s(&z3, &(-aq.clone() * tp.clone()), k)?, s_inv(&z3, &b, k)?]);
    let bq = b.clone() * q.clone();
    let aq2tt = aq.clone() * q.clone() * t.clone() * tp.clone();
    let cl_f = product(vec![
        s_inv(&yy, &(-bq.clone() * t.clone()), k)?,
        s_inv(&y, &(-aq.clone() * t.clone()), k)?,
        s(&y, &(-aq.clone() * tp.clone()), k)?,
        s(&yy, &(-bq.clone() * tp.clone()), k)?,
        s_inv(&yy, &(-bq.clone() * tp.clone()), k)?,
        s_inv(&y, &b, k)?,
        s(&y, &(-aq.clone() * t.clone()), k)?,
        s(&yy, &aq2tt, k)?,
    ]);
    let cr_f = product(vec![
        s_inv(&yy, &(-bq * t.clone()), k)?,
        s_inv(&y, &b, k)?,
        s(&y, &(-aq.clone() * tp.clone()), k)?,
        s(&yy, &aq2tt, k)?,
    ]);

    let sites = Sites::new(q.clone(), k, false)?;
    let (u, w) = (sites.cal_u(), sites.cal_w());
    let q2ba = sites.algebra().qpow(2) * b.clone() / a.clone();
    let q3 = sites.algebra().qpow(3);
    let cl_s = product(vec![
        s(&w, &q2ba, k)?,
        s(&u, &(-aq.clone() * tp.clone()), k)?,
        s_inv(&u, &(-aq.clone() * t.clone()), k)?,
        s_inv(&w, &q2ba, k)?,
        s(&w, &(-q3.clone() * tp.clone()), k)?,
        s(&u, &(-aq.clone() * t.clone()), k)?,
        s_inv(&u, &b, k)?,
        s_inv(&w, &(-q3.clone() * tp.clone()), k)?,
    ]);
    let cr_s = product(vec![
        s(&w, &(-q3.clone() * t.clone()), k)?,
        s(&u, &(-aq * tp), k)?,
        s_inv(&u, &b, k)?,
        s_inv(&w, &(-q3 * t), k)?,
    ]);
    Ok(ClcrResidual {
        weyl_pair: &cl - &cr,
        sites: cl_s - cr_s,
        factored_left: cl - cl_f,
        factored_right: cr - cr_f,
    })
}

/// How e^{-2πλ/ω₂} enters the M entries.
#[derive(Clone, Debug, PartialEq)]
pub enum Lambda<C> {
    /// A fixed scalar.
    Value(C),
    /// A central generator, so that each power can be read off separately.
    Central,
}

/// Ř(t,t')M_u(t)M_v(t') - M_u(t')M_v(t)Ř(t,t'), entrywise, exact to degree k.
pub fn rmm_residual<C: Coeff>(q: C, tau: &C, tau_p: &C, lambda: &Lambda<C>, k: i64) -> Result<[[Series<C>; 2]; 2]> {
    // One degree of slack: M_v carries e^{2πv̂/ω₂}, of degree -1.
    let sites = Sites::new(q, k + 1, matches!(lambda, Lambda::Central))?;
    let lam = match lambda {
        Lambda::Value(c) => Series::constant(sites.algebra(), c.clone()),
        Lambda::Central => sites.gen(LAMBDA, 1),
    };
    let r = sites.r_check(tau, tau_p, k + 1)?;
    let lhs = mat_mul(&sites.m_matrix(1, tau, &lam), &sites.m_matrix(2, tau_p, &lam));
    let rhs = mat_mul(&sites.m_matrix(1, tau_p, &lam), &sites.m_matrix(2, tau, &lam));
    let e = |i: usize, j: usize| (&r * &lhs[i][j] - &rhs[i][j] * &r).truncate(k);
    Ok([[e(0, 0), e(0, 1)], [e(1, 0), e(1, 1)]])
}
