//! Closed-form geodesics.
//!
//! Timelike geodesics from the identity are parametrized by arclength and by
//! a hyperbolic angle `ψ₀`: the unit velocity is `cosh ψ·Y₁ + sinh ψ·Y₂`,
//! where `Y₁, Y₂` is the frame `A⁻¹(X₁, X₂)` in which `g = −du₁² + du₂²`.
//! The angle obeys `ψ' = δ cosh ψ + γ sinh ψ`, whose solutions are
//! elementary in each curvature class; the horizontal curve then integrates
//! in closed form. Lightlike geodesics are one-parameter subgroups.

use std::f64::consts::FRAC_PI_2;

use crate::error::{Error, Result};
use crate::group::{lie_exp, GroupPoint, TangentVector};
use crate::problem::{CurvatureSign, Problem};

/// Below this `|ψ₀ + θ|` a de Sitter geodesic is the axis `w = 0`.
const AXIS_EPS: f64 = 1e-12;

/// Which of the two null directions a lightlike geodesic follows.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum NullDirection {
    /// Along `Y₁ + Y₂`, the line `λ₁ = 0`.
    Plus,
    /// Along `Y₁ − Y₂`, the line `λ₂ = 0`.
    Minus,
}

impl NullDirection {
    fn sign(&self) -> f64 {
        match self {
            NullDirection::Plus => 1.0,
            NullDirection::Minus => -1.0,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum CausalType {
    Timelike { psi0: f64 },
    Lightlike(NullDirection),
}

/// Internal chart of a timelike geodesic: enough to evaluate it at any time.
#[derive(Debug, Clone, Copy, PartialEq)]
enum Chart {
    /// `K < 0`: `ρ ∈ (−π/2, π/2)`, `τ = ρ + Δt`.
    AntiDeSitter { rho: f64 },
    /// `K > 0`, `ψ₀ + θ = 0`: a dilation orbit.
    DeSitterAxis,
    /// `K > 0`: `ρ > 0`, `τ = ρ − s₁Δt`, `s₂ = sgn(ψ₀ + θ)`.
    DeSitter { rho: f64, s2: f64 },
    /// `K = 0`: `ρ = e^{−s₁ψ₀}`, `τ = ρ − γt`.
    Flat { rho: f64 },
}

fn chart(spec: &Problem, psi0: f64) -> Chart {
    match spec.sign {
        CurvatureSign::Neg => Chart::AntiDeSitter {
            rho: (psi0 + spec.theta).sinh().atan(),
        },
        CurvatureSign::Pos => {
            let mu0 = psi0 + spec.theta;
            if mu0.abs() <= AXIS_EPS {
                Chart::DeSitterAxis
            } else {
                Chart::DeSitter {
                    rho: (1.0 / mu0.abs().sinh()).asinh(),
                    s2: mu0.signum(),
                }
            }
        }
        CurvatureSign::Zero => Chart::Flat {
            rho: (-spec.s1 * psi0).exp(),
        },
    }
}

fn bounds_of(spec: &Problem, ch: &Chart) -> (f64, f64) {
    let inf = f64::INFINITY;
    match *ch {
        Chart::AntiDeSitter { rho } => {
            let d = spec.cap_delta;
            (-(FRAC_PI_2 + rho) / d, (FRAC_PI_2 - rho) / d)
        }
        Chart::DeSitterAxis => (-inf, inf),
        Chart::DeSitter { rho, .. } => {
            let r = rho / spec.cap_delta;
            if spec.s1 > 0.0 {
                (-inf, r)
            } else {
                (-r, inf)
            }
        }
        Chart::Flat { rho } => {
            let r = rho / spec.gamma;
            if spec.gamma > 0.0 {
                (-inf, r)
            } else {
                (r, inf)
            }
        }
    }
}

/// Maximal domain `(t_min, t_max)` of the timelike geodesic with angle `ψ₀`.
pub fn domain_bounds(spec: &Problem, psi0: f64) -> (f64, f64) {
    bounds_of(spec, &chart(spec, psi0))
}

/// `(x, y, ψ)` at time `t`, which must lie in the domain.
fn evaluate(spec: &Problem, psi0: f64, ch: &Chart, t: f64) -> (f64, f64, f64) {
    match *ch {
        Chart::AntiDeSitter { rho } => {
            let s = spec.cap_delta * t;
            let tau = rho + s;
            let y = rho.cos() / tau.cos();
            let x = spec.lambda * s.sin() / tau.cos() + spec.nu * (y - 1.0);
            (x, y, tau.tan().asinh() - spec.theta)
        }
        Chart::DeSitterAxis => {
            let y = (spec.s1 * spec.cap_delta * t).exp();
            (spec.nu * (1.0 - y), y, psi0)
        }
        Chart::DeSitter { rho, s2 } => {
            let sigma = spec.s1 * spec.cap_delta * t;
            let tau = rho - sigma;
            let y = rho.sinh() / tau.sinh();
            let x = spec.nu * (1.0 - y) - s2 * spec.lambda * sigma.sinh() / tau.sinh();
            (x, y, s2 * (1.0 / tau.sinh()).asinh() - spec.theta)
        }
        Chart::Flat { rho } => {
            let tau = rho - spec.gamma * t;
            let y = rho / tau;
            let x = -spec.f * rho * spec.gamma * t + spec.g * (1.0 - y);
            (x, y, -spec.s1 * tau.ln())
        }
    }
}

/// A geodesic through the identity together with its maximal domain.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Geodesic {
    spec: Problem,
    kind: CausalType,
    chart: Option<Chart>,
    t_min: f64,
    t_max: f64,
}

impl Geodesic {
    /// Arclength-parametrized timelike geodesic with initial angle `ψ₀`.
    pub fn timelike(spec: &Problem, psi0: f64) -> Geodesic {
        let ch = chart(spec, psi0);
        let (t_min, t_max) = bounds_of(spec, &ch);
        Geodesic {
            spec: *spec,
            kind: CausalType::Timelike { psi0 },
            chart: Some(ch),
            t_min,
            t_max,
        }
    }

    pub fn lightlike(spec: &Problem, dir: NullDirection) -> Geodesic {
        Geodesic {
            spec: *spec,
            kind: CausalType::Lightlike(dir),
            chart: None,
            t_min: f64::NEG_INFINITY,
            t_max: f64::INFINITY,
        }
    }

    pub fn kind(&self) -> CausalType {
        self.kind
    }

    pub fn t_min(&self) -> f64 {
        self.t_min
    }

    pub fn t_max(&self) -> f64 {
        self.t_max
    }

    fn check(&self, t: f64) -> Result<()> {
        if t > self.t_min && t < self.t_max {
            Ok(())
        } else {
            Err(Error::DomainExceeded {
                t,
                t_min: self.t_min,
                t_max: self.t_max,
            })
        }
    }

    pub fn point(&self, t: f64) -> Result<GroupPoint> {
        self.check(t)?;
        match (self.kind, self.chart) {
            (CausalType::Timelike { psi0 }, Some(ch)) => {
                let (x, y, _) = evaluate(&self.spec, psi0, &ch, t);
                GroupPoint::new(x, y)
            }
            (CausalType::Lightlike(dir), _) => Ok(lightlike_curve(&self.spec, dir, t)),
            _ => unreachable!("timelike geodesics always carry a chart"),
        }
    }

    /// Angle `ψ(t)`; `None` for lightlike geodesics, which have no angle.
    pub fn psi(&self, t: f64) -> Result<Option<f64>> {
        self.check(t)?;
        Ok(match (self.kind, self.chart) {
            (CausalType::Timelike { psi0 }, Some(ch)) => Some(evaluate(&self.spec, psi0, &ch, t).2),
            _ => None,
        })
    }

    /// Point and angle at once, for sampling.
    pub fn state(&self, t: f64) -> Result<(GroupPoint, Option<f64>)> {
        Ok((self.point(t)?, self.psi(t)?))
    }
}

/// Angle `ψ(t)` along the timelike geodesic.
pub fn psi_of_t(geo: &Geodesic, t: f64) -> Result<f64> {
    match geo.kind {
        CausalType::Timelike { .. } => Ok(geo.psi(t)?.expect("timelike")),
        CausalType::Lightlike(_) => Err(Error::WrongCurvature {
            expected: "timelike geodesic",
            actual: "lightlike geodesic",
        }),
    }
}

/// Exponential map: the point reached at arclength `t ≥ 0` along the geodesic
/// with initial angle `ψ₀`.
pub fn exp_map(spec: &Problem, psi0: f64, t: f64) -> Result<GroupPoint> {
    let geo = Geodesic::timelike(spec, psi0);
    if t < 0.0 || t.is_nan() {
        return Err(Error::DomainExceeded {
            t,
            t_min: 0.0,
            t_max: geo.t_max,
        });
    }
    if t == 0.0 {
        return Ok(GroupPoint::IDENTITY);
    }
    geo.point(t)
}

/// Lightlike geodesic `lie_exp((α ± β, γ ± δ), t)` from the identity.
pub fn lightlike_curve(spec: &Problem, dir: NullDirection, t: f64) -> GroupPoint {
    let s = dir.sign();
    lie_exp(
        &TangentVector::new(spec.alpha + s * spec.beta, spec.gamma + s * spec.delta),
        t,
    )
}

/// Point of the anti-de Sitter chart `N = {−π/2 < ρ < τ < π/2}`.
pub fn chart_point(spec: &Problem, rho: f64, tau: f64) -> Result<GroupPoint> {
    if spec.sign != CurvatureSign::Neg {
        return Err(Error::WrongCurvature {
            expected: "Neg",
            actual: spec.sign.name(),
        });
    }
    let y = rho.cos() / tau.cos();
    let x = spec.lambda * (tau - rho).sin() / tau.cos() + spec.nu * (y - 1.0);
    GroupPoint::new(x, y)
}

/// Whether every future (resp. past) directed timelike geodesic is defined
/// for all forward (resp. backward) time.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Completeness {
    pub future_complete: bool,
    pub past_complete: bool,
}

pub fn completeness_report(spec: &Problem) -> Result<Completeness> {
    let (future_complete, past_complete) = match spec.sign {
        CurvatureSign::Neg => (false, false),
        _ if spec.gamma > 0.0 => (false, true),
        _ if spec.gamma < 0.0 => (true, false),
        _ => return Err(Error::UnresolvedCase),
    };
    Ok(Completeness {
        future_complete,
        past_complete,
    })
}
