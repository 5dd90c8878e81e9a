//! Optimal synthesis: inverting the exponential map, the Lorentzian distance
//! on every stratum, and Lorentzian spheres.
//!
//! Every geodesic is optimal on its whole domain, so on the interior stratum
//! the distance is simply the arclength of the unique geodesic reaching the
//! point. In the chart coordinate `w` (an affine combination of `x` and `y`)
//! the spheres are arcs of hyperbolas.

use std::f64::consts::PI;
use std::fmt;

use rayon::prelude::*;

use crate::causal::{classify, frontier_point, CausalClass};
use crate::error::{Error, Result};
use crate::geodesics::exp_map;
use crate::group::GroupPoint;
use crate::problem::{CurvatureSign, Problem};

/// Half-width of the window of initial angles used when a sphere's parameter
/// interval is unbounded.
const SPHERE_WINDOW: f64 = 3.0;

/// Distance value in `[0, +∞]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum LorentzDistance {
    Finite(f64),
    Infinite,
}

impl LorentzDistance {
    pub fn value(&self) -> f64 {
        match self {
            LorentzDistance::Finite(v) => *v,
            LorentzDistance::Infinite => f64::INFINITY,
        }
    }

    pub fn is_infinite(&self) -> bool {
        matches!(self, LorentzDistance::Infinite)
    }
}

impl fmt::Display for LorentzDistance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LorentzDistance::Finite(v) => write!(f, "{v}"),
            LorentzDistance::Infinite => f.write_str("inf"),
        }
    }
}

/// Chart coordinate `w` in which spheres and Killing fields are written.
///
/// `K < 0`: `(x − ν(y − 1))/λ`; `K > 0`: `(x + ν(y − 1))/λ`;
/// `K = 0`: `(x + g(y − 1))/f`.
pub fn chart_w(spec: &Problem, q: &GroupPoint) -> f64 {
    let (x, y) = q.coords();
    match spec.sign {
        CurvatureSign::Neg => (x - spec.nu * (y - 1.0)) / spec.lambda,
        CurvatureSign::Pos => (x + spec.nu * (y - 1.0)) / spec.lambda,
        CurvatureSign::Zero => (x + spec.g * (y - 1.0)) / spec.f,
    }
}

/// Initial angle and arclength `(ψ₀, t₁)` of the geodesic from the identity
/// to an interior point `q`.
pub fn exp_inverse(spec: &Problem, q: &GroupPoint) -> Result<(f64, f64)> {
    let class = classify(spec, q);
    if class != CausalClass::Interior {
        return Err(Error::NotInDomain {
            x: q.x(),
            y: q.y(),
            stratum: class.name(),
        });
    }
    Ok(invert_interior(spec, q))
}

fn invert_interior(spec: &Problem, q: &GroupPoint) -> (f64, f64) {
    let y = q.y();
    let w = chart_w(spec, q);
    match spec.sign {
        CurvatureSign::Neg => {
            // sin ρ = (y² − w² − 1)/(2w), sin τ = (y² + w² − 1)/(2wy); the shared
            // cosine numerator factors, which keeps τ → π/2 accurate
            let p = (w + 1.0 - y) * (w + 1.0 + y) * (y - w + 1.0) * (y + w - 1.0);
            let root = p.max(0.0).sqrt();
            let rho = (y * y - w * w - 1.0).atan2(root);
            let tau = (y * y + w * w - 1.0).atan2(root);
            (rho.tan().asinh() - spec.theta, (tau - rho) / spec.cap_delta)
        }
        CurvatureSign::Pos => {
            let s1 = spec.s1;
            if w.abs() < 1e-12 {
                return (-spec.theta, s1 * y.ln() / spec.cap_delta);
            }
            let aw = w.abs();
            let qf = (w - 1.0 - y) * (w - 1.0 + y) * (w + 1.0 - y) * (w + 1.0 + y);
            let root = qf.max(0.0).sqrt();
            let rho = (root / (2.0 * aw)).asinh();
            let tau = (root / (2.0 * aw * y)).asinh();
            let s2 = -s1 * w.signum();
            let mu0 = s2 * (2.0 * aw / root).asinh();
            (mu0 - spec.theta, s1 * (rho - tau) / spec.cap_delta)
        }
        CurvatureSign::Zero => {
            let rho = (w * y / (1.0 - y)).max(0.0).sqrt();
            let tau = rho / y;
            (-spec.s1 * rho.ln(), (rho - tau) / spec.gamma)
        }
    }
}

/// Result of a distance query.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DistanceReport {
    pub distance: LorentzDistance,
    /// Stratum of `q₀⁻¹q₁`.
    pub class: CausalClass,
    /// Whether some causal curve realizes the distance.
    pub maximizer_exists: bool,
    /// `(ψ₀, t₁)` of the maximizing geodesic, for interior targets.
    pub preimage: Option<(f64, f64)>,
}

/// Lorentzian distance `d(q₀, q₁) = d(Id, q₀⁻¹q₁)`.
pub fn distance(spec: &Problem, q0: &GroupPoint, q1: &GroupPoint) -> DistanceReport {
    let q = q0.inverse().mul(q1);
    let class = classify(spec, &q);
    let (distance, maximizer_exists, preimage) = match class {
        CausalClass::Outside => (LorentzDistance::Finite(0.0), false, None),
        CausalClass::LightBoundary(_) => (LorentzDistance::Finite(0.0), true, None),
        CausalClass::Interior => {
            let (psi0, t1) = invert_interior(spec, &q);
            (LorentzDistance::Finite(t1), true, Some((psi0, t1)))
        }
        CausalClass::FrontierF => (LorentzDistance::Finite(PI / spec.cap_delta), false, None),
        CausalClass::RegionE => (LorentzDistance::Infinite, false, None),
    };
    DistanceReport {
        distance,
        class,
        maximizer_exists,
        preimage,
    }
}

/// Distance from the identity.
pub fn distance_from_identity(spec: &Problem, q: &GroupPoint) -> DistanceReport {
    distance(spec, &GroupPoint::IDENTITY, q)
}

/// Geometric shape of a sphere `S(R)` around the identity.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum SphereShape {
    /// `w² − (y − cos σ)² = sin² σ`, `σ = ΔR`.
    AntiDeSitter { sigma: f64 },
    /// `(y − cosh σ)² − w² = sinh² σ`, `σ = s₁ΔR`.
    DeSitter { sigma: f64 },
    /// `(w + σ²)y = w`, `σ = γR`.
    Flat { sigma: f64 },
    /// The frontier ray, sphere of radius `π/Δ` for negative curvature.
    FrontierRay,
}

impl SphereShape {
    /// Defect of the hyperbola equation at `q`; zero on the sphere.
    pub fn residual(&self, spec: &Problem, q: &GroupPoint) -> f64 {
        let w = chart_w(spec, q);
        let y = q.y();
        match *self {
            SphereShape::AntiDeSitter { sigma } => {
                w * w - (y - sigma.cos()).powi(2) - sigma.sin().powi(2)
            }
            SphereShape::DeSitter { sigma } => {
                (y - sigma.cosh()).powi(2) - w * w - sigma.sinh().powi(2)
            }
            SphereShape::Flat { sigma } => (w + sigma * sigma) * y - w,
            SphereShape::FrontierRay => crate::causal::lambda3(spec, q).unwrap_or(f64::NAN),
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            SphereShape::AntiDeSitter { .. } => "hyperbola (anti-de Sitter)",
            SphereShape::DeSitter { .. } => "hyperbola (de Sitter)",
            SphereShape::Flat { .. } => "hyperbola (flat)",
            SphereShape::FrontierRay => "frontier ray",
        }
    }
}

/// Sampled arc of the sphere `S(R) = {q : d(Id, q) = R}`.
#[derive(Debug, Clone, PartialEq)]
pub struct SphereArc {
    pub radius: f64,
    pub shape: SphereShape,
    /// Parameter of each sample: the initial angle `ψ₀`, or `ln y` on the ray.
    pub params: Vec<f64>,
    pub points: Vec<GroupPoint>,
}

impl SphereArc {
    /// Largest hyperbola defect over the samples.
    pub fn max_residual(&self, spec: &Problem) -> f64 {
        self.points
            .iter()
            .map(|q| self.shape.residual(spec, q).abs())
            .fold(0.0, f64::max)
    }
}

fn linspace(lo: f64, hi: f64, n: usize) -> Vec<f64> {
    match n {
        0 => vec![],
        1 => vec![(lo + hi) / 2.0],
        _ => (0..n)
            .map(|k| lo + (hi - lo) * k as f64 / (n - 1) as f64)
            .collect(),
    }
}

/// Samples `n` points of `S(R)`.
///
/// The sphere is the image of the initial angles whose geodesics live at
/// least until time `R`; that interval is intersected with a fixed window
/// and kept slightly away from its open end, where the arc runs off to
/// infinity.
pub fn sphere(spec: &Problem, radius: f64, n: usize) -> Result<SphereArc> {
    if !(radius > 0.0 && radius.is_finite()) {
        return Err(Error::InvalidRadius { radius });
    }
    let w = SPHERE_WINDOW;
    // interval of μ₀ = ψ₀ + θ (ψ₀ itself when K = 0)
    let (lo, hi, shape) = match spec.sign {
        CurvatureSign::Neg => {
            let limit = PI / spec.cap_delta;
            let s = spec.cap_delta * radius;
            if (s - PI).abs() <= 1e-12 * PI {
                let params = linspace(-w, w, n);
                let points = params
                    .iter()
                    .map(|l| frontier_point(spec, l.exp()))
                    .collect::<Result<Vec<_>>>()?;
                return Ok(SphereArc {
                    radius,
                    shape: SphereShape::FrontierRay,
                    params,
                    points,
                });
            }
            if s > PI {
                return Err(Error::EmptySphere { radius, limit });
            }
            let hi = (s.cos() / s.sin()).asinh() - 0.02;
            (hi - 2.0 * w, hi, SphereShape::AntiDeSitter { sigma: s })
        }
        CurvatureSign::Pos => {
            let s = spec.cap_delta * radius;
            let shape = SphereShape::DeSitter { sigma: spec.s1 * s };
            if spec.gamma > 0.0 {
                let u = (1.0 / s.sinh()).asinh();
                let m = 0.02 * u.min(1.0);
                (-(u - m).min(w), (u - m).min(w), shape)
            } else {
                (-w, w, shape)
            }
        }
        CurvatureSign::Zero => {
            let shape = SphereShape::Flat {
                sigma: spec.gamma * radius,
            };
            if spec.gamma > 0.0 {
                let hi = -(spec.gamma * radius).ln() - 0.02;
                (hi - 2.0 * w, hi, shape)
            } else {
                (-w, w, shape)
            }
        }
    };
    let shift = if spec.sign == CurvatureSign::Zero { 0.0 } else { spec.theta };
    let params: Vec<f64> = linspace(lo, hi, n).into_iter().map(|m| m - shift).collect();
    let points = params
        .par_iter()
        .map(|&psi0| exp_map(spec, psi0, radius))
        .collect::<Result<Vec<_>>>()?;
    Ok(SphereArc {
        radius,
        shape,
        params,
        points,
    })
}

/// Jacobian `∂(x, y)/∂(τ, ρ) = −λ cos ρ sin(ρ − τ)/cos² τ` of the anti-de Sitter
/// chart. It is positive on the whole chart, so the exponential map is a
/// local diffeomorphism there.
pub fn jacobian_exp(spec: &Problem, rho: f64, tau: f64) -> Result<f64> {
    if spec.sign != CurvatureSign::Neg {
        return Err(Error::WrongCurvature {
            expected: "Neg",
            actual: spec.sign.name(),
        });
    }
    Ok(-spec.lambda * rho.cos() * (rho - tau).sin() / tau.cos().powi(2))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::problem::{make_problem, Preset};
    use approx::assert_relative_eq;
    use std::f64::consts::{FRAC_PI_4, LN_2, SQRT_2};

    fn pt(x: f64, y: f64) -> GroupPoint {
        GroupPoint::from_coords(x, y)
    }

    #[test]
    fn inverse_examples() {
        let (psi0, t1) = exp_inverse(&Preset::P1.problem(), &pt(1.0, SQRT_2)).unwrap();
        assert!(psi0.abs() < 1e-15);
        assert_relative_eq!(t1, FRAC_PI_4, epsilon = 1e-15);
        let (psi0, t1) = exp_inverse(&Preset::P2.problem(), &pt(0.0, 2.0)).unwrap();
        assert_eq!(psi0, 0.0);
        assert_relative_eq!(t1, LN_2, epsilon = 1e-15);
        let (psi0, t1) = exp_inverse(&Preset::P3.problem(), &pt(1.0, 2.0)).unwrap();
        assert_relative_eq!(psi0, -SQRT_2.ln(), epsilon = 1e-15);
        assert_relative_eq!(t1, SQRT_2 - 1.0 / SQRT_2, epsilon = 1e-15);
    }

    #[test]
    fn inverse_rejects_other_strata() {
        let p = Preset::P1.problem();
        for q in [pt(3.0, 2.0), pt(4.0, 2.0), pt(-1.0, 2.0), pt(1.0, 2.0)] {
            assert!(matches!(exp_inverse(&p, &q), Err(Error::NotInDomain { .. })));
        }
    }

    #[test]
    fn distance_examples() {
        let p1 = Preset::P1.problem();
        let id = GroupPoint::IDENTITY;
        let r = distance(&p1, &id, &pt(1.0, SQRT_2));
        assert_relative_eq!(r.distance.value(), FRAC_PI_4, epsilon = 1e-15);
        assert!(r.maximizer_exists);
        let r = distance(&p1, &id, &pt(3.0, 2.0));
        assert_eq!(r.distance, LorentzDistance::Finite(PI));
        assert!(!r.maximizer_exists);
        let r = distance(&p1, &id, &pt(4.0, 2.0));
        assert_eq!(r.distance, LorentzDistance::Infinite);
        assert!(!r.maximizer_exists);
        let r = distance(&p1, &id, &pt(-1.0, 2.0));
        assert_eq!(r.distance, LorentzDistance::Finite(0.0));
        assert!(!r.maximizer_exists);
        let r = distance(&p1, &id, &id);
        assert_eq!(r.distance, LorentzDistance::Finite(0.0));
        assert!(r.maximizer_exists);
        let r = distance(&Preset::P3.problem(), &id, &pt(1.0, 2.0));
        assert_relative_eq!(r.distance.value(), 1.0 / SQRT_2, epsilon = 1e-15);
    }

    #[test]
    fn distance_is_left_invariant() {
        let p = make_problem(1.2, -0.3, 0.4, 0.8).unwrap();
        let g = pt(-0.7, 2.3);
        let q0 = pt(0.1, 0.9);
        let q1 = exp_map(&p, 0.3, 0.5).map(|q| q0.mul(&q)).unwrap();
        let a = distance(&p, &q0, &q1).distance.value();
        let b = distance(&p, &g.mul(&q0), &g.mul(&q1)).distance.value();
        assert_relative_eq!(a, 0.5, epsilon = 1e-12);
        assert_relative_eq!(a, b, epsilon = 1e-10);
    }

    #[test]
    fn sphere_examples() {
        let p1 = Preset::P1.problem();
        let shape = SphereShape::AntiDeSitter { sigma: FRAC_PI_4 };
        assert!(shape.residual(&p1, &pt(1.0, SQRT_2)).abs() < 1e-15);
        let arc = sphere(&p1, PI, 5).unwrap();
        assert_eq!(arc.shape, SphereShape::FrontierRay);
        for q in &arc.points {
            assert!((q.x() - q.y() - 1.0).abs() < 1e-12);
        }
        let p3 = Preset::P3.problem();
        let shape = SphereShape::Flat { sigma: 1.0 / SQRT_2 };
        assert!(shape.residual(&p3, &pt(1.0, 2.0)).abs() < 1e-15);
    }

    #[test]
    fn sphere_errors() {
        let p1 = Preset::P1.problem();
        assert!(matches!(sphere(&p1, 3.5, 4), Err(Error::EmptySphere { .. })));
        assert!(matches!(sphere(&p1, 0.0, 4), Err(Error::InvalidRadius { .. })));
        assert!(matches!(sphere(&p1, -1.0, 4), Err(Error::InvalidRadius { .. })));
    }

    #[test]
    fn sphere_samples_lie_on_hyperbola() {
        for pr in Preset::ALL {
            let p = pr.problem();
            let arc = sphere(&p, 0.5, 40).unwrap();
            assert_eq!(arc.points.len(), 40);
            assert!(arc.max_residual(&p) < 1e-9, "{pr}: {}", arc.max_residual(&p));
            for q in &arc.points {
                let d = distance_from_identity(&p, q).distance.value();
                assert!((d - 0.5).abs() < 1e-9);
            }
        }
    }

    #[test]
    fn jacobian_examples() {
        let p = Preset::P1.problem();
        assert_relative_eq!(jacobian_exp(&p, 0.0, FRAC_PI_4).unwrap(), SQRT_2, epsilon = 1e-15);
        assert_eq!(jacobian_exp(&p, 0.3, 0.3).unwrap(), 0.0);
        assert!(jacobian_exp(&Preset::P3.problem(), 0.0, 0.1).is_err());
    }
}
