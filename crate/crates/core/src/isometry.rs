//! Infinitesimal isometries and the flat embedding.
//!
//! Right-invariant fields `X̃₁ = ∂x`, `X̃₂ = x∂x + y∂y` generate left
//! translations, which are isometries of every left-invariant structure. A
//! third Killing field, vanishing at the identity and tangent to the spheres
//! centred there, completes a three-dimensional algebra. For flat structures
//! the group embeds isometrically into a half-plane of Minkowski space.

use crate::error::{Error, Result};
use crate::group::GroupPoint;
use crate::problem::{CurvatureSign, Problem};
use crate::synthesis::{chart_w, LorentzDistance};

/// Step of the central differences used by the numerical checks.
pub const FD_STEP: f64 = 1e-5;

/// A planar vector field `q ↦ (Pˣ, Pʸ)` on the upper half-plane.
pub trait VectorField {
    fn eval(&self, x: f64, y: f64) -> (f64, f64);

    /// `[[∂Pˣ/∂x, ∂Pˣ/∂y], [∂Pʸ/∂x, ∂Pʸ/∂y]]`, by central differences unless
    /// overridden.
    fn jacobian(&self, x: f64, y: f64) -> [[f64; 2]; 2] {
        let h = FD_STEP;
        let (xp, yp) = self.eval(x + h, y);
        let (xm, ym) = self.eval(x - h, y);
        let (xq, yq) = self.eval(x, y + h);
        let (xr, yr) = self.eval(x, y - h);
        [
            [(xp - xm) / (2.0 * h), (xq - xr) / (2.0 * h)],
            [(yp - ym) / (2.0 * h), (yq - yr) / (2.0 * h)],
        ]
    }
}

impl<F: Fn(f64, f64) -> (f64, f64)> VectorField for F {
    fn eval(&self, x: f64, y: f64) -> (f64, f64) {
        self(x, y)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum KillingKind {
    /// `∂x`, generating left translations by `(s, 1)`.
    RightX1,
    /// `x∂x + y∂y`, generating left translations by `(0, eˢ)`.
    RightX2,
    /// The field vanishing at the identity (`X₋`, `X₊` or `X₀`).
    Extra,
}

impl KillingKind {
    pub fn name(&self) -> &'static str {
        match self {
            KillingKind::RightX1 => "RightX1",
            KillingKind::RightX2 => "RightX2",
            KillingKind::Extra => "Extra",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct KillingField {
    pub kind: KillingKind,
    spec: Problem,
}

impl KillingField {
    pub fn new(spec: &Problem, kind: KillingKind) -> Self {
        KillingField { kind, spec: *spec }
    }

    pub fn at(&self, q: &GroupPoint) -> (f64, f64) {
        self.eval(q.x(), q.y())
    }

    /// Whether the flow exists for all time. Only the right-invariant fields are.
    pub fn is_complete(&self) -> bool {
        self.kind != KillingKind::Extra
    }
}

impl VectorField for KillingField {
    fn eval(&self, x: f64, y: f64) -> (f64, f64) {
        let s = &self.spec;
        match self.kind {
            KillingKind::RightX1 => (1.0, 0.0),
            KillingKind::RightX2 => (x, y),
            KillingKind::Extra => {
                let w = chart_w(s, &GroupPoint::from_coords(x, y));
                match s.sign {
                    CurvatureSign::Neg => (
                        s.lambda * (y * y + w * w - 1.0) + 2.0 * s.nu * w * y,
                        2.0 * w * y,
                    ),
                    CurvatureSign::Pos => (
                        s.lambda * (y * y + w * w - 1.0) - 2.0 * s.nu * w * y,
                        2.0 * w * y,
                    ),
                    CurvatureSign::Zero => (x + s.g * (y * y - 1.0), y * (1.0 - y)),
                }
            }
        }
    }

    fn jacobian(&self, x: f64, y: f64) -> [[f64; 2]; 2] {
        let s = &self.spec;
        match self.kind {
            KillingKind::RightX1 => [[0.0, 0.0], [0.0, 0.0]],
            KillingKind::RightX2 => [[1.0, 0.0], [0.0, 1.0]],
            KillingKind::Extra => {
                let w = chart_w(s, &GroupPoint::from_coords(x, y));
                let (l, n) = (s.lambda, s.nu);
                match s.sign {
                    CurvatureSign::Neg => [
                        [2.0 * w + 2.0 * n * y / l, 2.0 * y * (l - n * n / l)],
                        [2.0 * y / l, 2.0 * w - 2.0 * n * y / l],
                    ],
                    CurvatureSign::Pos => [
                        [2.0 * w - 2.0 * n * y / l, 2.0 * y * (l - n * n / l)],
                        [2.0 * y / l, 2.0 * w + 2.0 * n * y / l],
                    ],
                    CurvatureSign::Zero => [[1.0, 2.0 * s.g * y], [0.0, 1.0 - 2.0 * y]],
                }
            }
        }
    }
}

/// `(X̃₁, X̃₂, extra)`.
pub fn killing_basis(spec: &Problem) -> [KillingField; 3] {
    [
        KillingField::new(spec, KillingKind::RightX1),
        KillingField::new(spec, KillingKind::RightX2),
        KillingField::new(spec, KillingKind::Extra),
    ]
}

/// `[P, Q]ᵏ = Pʲ∂ⱼQᵏ − Qʲ∂ⱼPᵏ` at `(x, y)`.
pub fn lie_bracket(p: &dyn VectorField, q: &dyn VectorField, x: f64, y: f64) -> (f64, f64) {
    let (pv, qv) = (p.eval(x, y), q.eval(x, y));
    let (jp, jq) = (p.jacobian(x, y), q.jacobian(x, y));
    let b = |k: usize| {
        pv.0 * jq[k][0] + pv.1 * jq[k][1] - qv.0 * jp[k][0] - qv.1 * jp[k][1]
    };
    (b(0), b(1))
}

/// Structure constants: `[Fᵢ, Fⱼ] = Σₖ c[k]·Fₖ` in the basis of
/// [`killing_basis`].
pub fn bracket_coefficients(spec: &Problem, i: usize, j: usize) -> [f64; 3] {
    let (l, n) = (spec.lambda, spec.nu);
    let table = |i: usize, j: usize| -> [f64; 3] {
        match (i, j, spec.sign) {
            (0, 1, _) => [1.0, 0.0, 0.0],
            (0, 2, CurvatureSign::Zero) => [1.0, 0.0, 0.0],
            (1, 2, CurvatureSign::Zero) => [2.0 * spec.g, -1.0, 1.0],
            // X₋ takes the lower signs, X₊ the upper ones
            (0, 2, sign) => {
                let pm = if sign == CurvatureSign::Pos { 1.0 } else { -1.0 };
                [-pm * 2.0 * n / l, 2.0 / l, 0.0]
            }
            (1, 2, sign) => {
                let pm = if sign == CurvatureSign::Pos { 1.0 } else { -1.0 };
                [2.0 * (l * l - n * n) / l, pm * 2.0 * n / l, 1.0]
            }
            _ => [0.0; 3],
        }
    };
    if i == j {
        [0.0; 3]
    } else if i < j {
        table(i, j)
    } else {
        table(j, i).map(|c| -c)
    }
}

/// Left-invariant frame field `X₁ = y∂x` or `X₂ = y∂y`.
struct LeftFrame(usize);

impl VectorField for LeftFrame {
    fn eval(&self, _x: f64, y: f64) -> (f64, f64) {
        if self.0 == 0 {
            (y, 0.0)
        } else {
            (0.0, y)
        }
    }

    fn jacobian(&self, _x: f64, _y: f64) -> [[f64; 2]; 2] {
        if self.0 == 0 {
            [[0.0, 1.0], [0.0, 0.0]]
        } else {
            [[0.0, 0.0], [0.0, 1.0]]
        }
    }
}

/// Value of `g(V, W)` at `(x, y)` for coordinate vectors, using the metric
/// `M/y²` of a left-invariant structure.
fn coordinate_inner(spec: &Problem, y: f64, v: (f64, f64), w: (f64, f64)) -> f64 {
    let (g11, g12, g22) = spec.metric();
    (g11 * v.0 * w.0 + g12 * (v.0 * w.1 + v.1 * w.0) + g22 * v.1 * w.1) / (y * y)
}

/// Largest defect of the Killing identity
/// `X g(V, W) = g([X, V], W) + g(V, [X, W])` over `V, W ∈ {X₁, X₂}`.
///
/// The directional derivative is taken by central differences, so Killing
/// fields give values at the level of the truncation error.
pub fn killing_residual(spec: &Problem, field: &dyn VectorField, q: &GroupPoint) -> f64 {
    let (x, y) = q.coords();
    let frame = [LeftFrame(0), LeftFrame(1)];
    let xv = field.eval(x, y);
    let h = FD_STEP;
    let mut worst: f64 = 0.0;
    for v in &frame {
        for w in &frame {
            let gvw = |x: f64, y: f64| coordinate_inner(spec, y, v.eval(x, y), w.eval(x, y));
            let deriv = (gvw(x + h * xv.0, y + h * xv.1) - gvw(x - h * xv.0, y - h * xv.1)) / (2.0 * h);
            let xvb = lie_bracket(field, v, x, y);
            let xwb = lie_bracket(field, w, x, y);
            let rhs = coordinate_inner(spec, y, xvb, w.eval(x, y))
                + coordinate_inner(spec, y, v.eval(x, y), xwb);
            worst = worst.max((deriv - rhs).abs());
        }
    }
    worst
}

/// Point of the Minkowski plane with form `−dx̃² + dỹ²`; `x̃` is the time axis.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MinkowskiPoint {
    pub xt: f64,
    pub yt: f64,
}

/// Isometric embedding of a flat structure into Minkowski space.
///
/// With `A = (y − 1)/(γy)` and `w` the flat chart coordinate,
/// `i(x, y) = (½(A − w/γ), (s₁/2)(A + w/γ))`. The image is the half-plane
/// where `1 − γ(s₁ỹ + x̃) = 1/y` is positive.
pub fn embed_flat(spec: &Problem, q: &GroupPoint) -> Result<MinkowskiPoint> {
    if spec.sign != CurvatureSign::Zero {
        return Err(Error::WrongCurvature {
            expected: "Zero",
            actual: spec.sign.name(),
        });
    }
    let y = q.y();
    let a = (y - 1.0) / (spec.gamma * y);
    let w = chart_w(spec, q) / spec.gamma;
    Ok(MinkowskiPoint {
        xt: 0.5 * (a - w),
        yt: 0.5 * spec.s1 * (a + w),
    })
}

/// `1 − γ(s₁ỹ + x̃)`, positive exactly on the image of [`embed_flat`].
pub fn half_plane_margin(spec: &Problem, p: &MinkowskiPoint) -> f64 {
    1.0 - spec.gamma * (spec.s1 * p.yt + p.xt)
}

/// Time separation `√(Δx̃² − Δỹ²)` for future-directed timelike displacements,
/// zero otherwise.
pub fn minkowski_distance(p: &MinkowskiPoint, q: &MinkowskiPoint) -> LorentzDistance {
    let dx = q.xt - p.xt;
    let dy = q.yt - p.yt;
    if dx > dy.abs() {
        LorentzDistance::Finite(((dx - dy) * (dx + dy)).sqrt())
    } else {
        LorentzDistance::Finite(0.0)
    }
}
