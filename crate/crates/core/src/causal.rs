//! Causal structure: attainable sets, stratification of the causal future,
//! and global hyperbolicity.
//!
//! The causal future of `q₀` is the closed affine wedge
//! `{λ₁(q) ≤ λ₁(q₀), λ₂(q) ≥ λ₂(q₀)}`. For negative curvature it splits into
//! a finite-distance part `D` (where `λ₃ > 0`), the frontier ray `F`
//! (`λ₃ = 0`) at distance `π/Δ`, and the region `E` (`λ₃ < 0`) at infinite
//! distance. Here `λ₃ = λ₁ − λ₁(B)` and `B` is where the line `λ₂ = 0` meets
//! the absolute `y = 0`.

use std::fmt;

use crate::error::{Error, Result};
use crate::group::GroupPoint;
use crate::problem::{CurvatureSign, Problem};

/// Relative width of the band treated as lying on a stratum boundary.
pub const STRATUM_EPS: f64 = 1e-9;

/// Which null line a light-boundary point lies on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum LightBranch {
    /// `λ₁ = 0`
    First,
    /// `λ₂ = 0`
    Second,
    /// The vertex of the cone.
    Both,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CausalClass {
    Outside,
    LightBoundary(LightBranch),
    Interior,
    FrontierF,
    RegionE,
}

impl CausalClass {
    pub fn name(&self) -> &'static str {
        match self {
            CausalClass::Outside => "Outside",
            CausalClass::LightBoundary(_) => "LightBoundary",
            CausalClass::Interior => "Interior",
            CausalClass::FrontierF => "FrontierF",
            CausalClass::RegionE => "RegionE",
        }
    }

    pub fn branch(&self) -> Option<LightBranch> {
        match self {
            CausalClass::LightBoundary(b) => Some(*b),
            _ => None,
        }
    }
}

impl fmt::Display for CausalClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

fn band(l1: f64, l2: f64) -> f64 {
    STRATUM_EPS * (1.0 + l1.abs() + l2.abs())
}

/// `q₁ ∈ J⁺(q₀)`, up to the stratum tolerance.
pub fn in_causal_future(spec: &Problem, q0: &GroupPoint, q1: &GroupPoint) -> bool {
    let q = q0.inverse().mul(q1);
    let (l1, l2) = (spec.lambda1(&q), spec.lambda2(&q));
    let eps = band(l1, l2);
    l1 <= eps && l2 >= -eps
}

/// `q₁ ∈ J⁻(q₀)`, i.e. `q₀ ∈ J⁺(q₁)`.
pub fn in_causal_past(spec: &Problem, q0: &GroupPoint, q1: &GroupPoint) -> bool {
    in_causal_future(spec, q1, q0)
}

/// `B = ((d + b)/(c + a), 0)` on the absolute.
pub fn point_b(spec: &Problem) -> Result<(f64, f64)> {
    let m = spec.matrix();
    let sum = m.c + m.a;
    if sum.abs() < 1e-12 {
        return Err(Error::AbsoluteIntersectionUndefined { sum });
    }
    Ok(((m.d + m.b) / sum, 0.0))
}

/// `λ₁(B) = −2 det/(c + a)`.
fn lambda1_at_b(spec: &Problem) -> Result<f64> {
    let m = spec.matrix();
    let (bx, _) = point_b(spec)?;
    Ok((m.c - m.a) * bx - (m.d - m.b))
}

pub fn lambda3(spec: &Problem, q: &GroupPoint) -> Result<f64> {
    Ok(spec.lambda1(q) - lambda1_at_b(spec)?)
}

/// Stratum of `q` relative to the identity.
pub fn classify(spec: &Problem, q: &GroupPoint) -> CausalClass {
    let (l1, l2) = (spec.lambda1(q), spec.lambda2(q));
    let eps = band(l1, l2);
    if l1 > eps || l2 < -eps {
        return CausalClass::Outside;
    }
    let on1 = l1.abs() <= eps;
    let on2 = l2.abs() <= eps;
    match (on1, on2) {
        (true, true) => return CausalClass::LightBoundary(LightBranch::Both),
        (true, false) => return CausalClass::LightBoundary(LightBranch::First),
        (false, true) => return CausalClass::LightBoundary(LightBranch::Second),
        _ => {}
    }
    if spec.sign != CurvatureSign::Neg {
        return CausalClass::Interior;
    }
    // c + a > 0 whenever K < 0 and a ≥ 0
    let l3 = lambda3(spec, q).expect("B is defined for negative curvature");
    if l3.abs() <= eps {
        CausalClass::FrontierF
    } else if l3 < 0.0 {
        CausalClass::RegionE
    } else {
        CausalClass::Interior
    }
}

/// Stratum of `q₁` relative to `q₀`, via left translation by `q₀⁻¹`.
pub fn classify_from(spec: &Problem, q0: &GroupPoint, q1: &GroupPoint) -> CausalClass {
    classify(spec, &q0.inverse().mul(q1))
}

/// Causal diamonds are compact exactly when the curvature is nonnegative.
pub fn is_globally_hyperbolic(spec: &Problem) -> bool {
    spec.sign != CurvatureSign::Neg
}

/// Point of the frontier ray `F` at height `y`.
pub fn frontier_point(spec: &Problem, y: f64) -> Result<GroupPoint> {
    if spec.sign != CurvatureSign::Neg {
        return Err(Error::WrongCurvature {
            expected: "Neg",
            actual: spec.sign.name(),
        });
    }
    let m = spec.matrix();
    let l1b = lambda1_at_b(spec)?;
    // (c − a)x + (d − b)(y − 1) = λ₁(B), with c − a < 0 for K < 0
    let x = (l1b - (m.d - m.b) * (y - 1.0)) / (m.c - m.a);
    GroupPoint::new(x, y)
}
