//! Left-invariant Lorentzian structures on `Aff₊(ℝ)`.
//!
//! A structure is fixed by a matrix `A = [[a, b], [c, d]]` with positive
//! determinant: in the frame `X₁, X₂` the quadratic form is
//! `g(u) = −(a u₁ + b u₂)² + (c u₁ + d u₂)²`. Time orientation is chosen so
//! that future-directed vectors have `a u₁ + b u₂ > 0`; the matrix is
//! normalized to `a ≥ 0` by flipping `A ↦ −A`, which reverses time.
//!
//! [`Problem`] stores the matrix together with every constant the closed
//! forms downstream need, computed once at construction.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::group::{GroupPoint, TangentVector};

/// Determinants below this magnitude are treated as zero.
pub const DET_EPS: f64 = 1e-12;
/// Relative band for deciding that the curvature vanishes.
pub const CURVATURE_EPS: f64 = 1e-12;

/// Rows of the matrix `A`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ProblemMatrix {
    pub a: f64,
    pub b: f64,
    pub c: f64,
    pub d: f64,
}

impl ProblemMatrix {
    pub const fn new(a: f64, b: f64, c: f64, d: f64) -> Self {
        ProblemMatrix { a, b, c, d }
    }

    pub fn det(&self) -> f64 {
        self.a * self.d - self.b * self.c
    }

    /// `A·u`, the pair of linear forms whose squares build `g`.
    pub fn apply(&self, u: &TangentVector) -> (f64, f64) {
        (self.a * u.u1 + self.b * u.u2, self.c * u.u1 + self.d * u.u2)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CurvatureSign {
    Neg,
    Zero,
    Pos,
}

impl CurvatureSign {
    pub fn name(&self) -> &'static str {
        match self {
            CurvatureSign::Neg => "Neg",
            CurvatureSign::Zero => "Zero",
            CurvatureSign::Pos => "Pos",
        }
    }
}

impl fmt::Display for CurvatureSign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A normalized structure with its derived constants.
///
/// `alpha, beta, gamma, delta` are the entries of `A⁻¹`. The hyperbolic
/// constants (`cap_delta`, `theta`, `lambda`, `nu`) are meaningful for
/// `K ≠ 0`, the pair `f, g` for `K = 0`; the unused ones are zero.
/// `s1 = sgn γ` whenever `γ ≠ 0`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Problem {
    matrix: ProblemMatrix,
    det: f64,
    time_reversed: bool,
    pub alpha: f64,
    pub beta: f64,
    pub gamma: f64,
    pub delta: f64,
    pub curvature: f64,
    pub sign: CurvatureSign,
    /// `√|δ² − γ²|`.
    pub cap_delta: f64,
    pub theta: f64,
    pub lambda: f64,
    pub nu: f64,
    pub f: f64,
    pub g: f64,
    pub s1: f64,
}

/// The three model structures: anti-de Sitter, de Sitter and flat.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Preset {
    P1,
    P2,
    P3,
}

impl Preset {
    pub const ALL: [Preset; 3] = [Preset::P1, Preset::P2, Preset::P3];

    pub fn matrix(&self) -> ProblemMatrix {
        match self {
            Preset::P1 => ProblemMatrix::new(1.0, 0.0, 0.0, 1.0),
            Preset::P2 => ProblemMatrix::new(0.0, 1.0, -1.0, 0.0),
            Preset::P3 => ProblemMatrix::new(0.5, 0.5, -0.5, 0.5),
        }
    }

    pub fn problem(&self) -> Problem {
        Problem::from_matrix(self.matrix()).expect("presets are valid")
    }

    pub fn name(&self) -> &'static str {
        match self {
            Preset::P1 => "P1",
            Preset::P2 => "P2",
            Preset::P3 => "P3",
        }
    }
}

impl FromStr for Preset {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "P1" | "p1" => Ok(Preset::P1),
            "P2" | "p2" => Ok(Preset::P2),
            "P3" | "p3" => Ok(Preset::P3),
            other => Err(format!("unknown preset '{other}', expected P1, P2 or P3")),
        }
    }
}

impl fmt::Display for Preset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Builds the structure for `A = [[a, b], [c, d]]`.
///
/// A matrix with `a < 0` is replaced by `−A` and the result is flagged as
/// time reversed.
pub fn make_problem(a: f64, b: f64, c: f64, d: f64) -> Result<Problem> {
    Problem::from_matrix(ProblemMatrix::new(a, b, c, d))
}

fn sgn(v: f64) -> f64 {
    if v > 0.0 {
        1.0
    } else if v < 0.0 {
        -1.0
    } else {
        0.0
    }
}

impl Problem {
    pub fn from_matrix(m: ProblemMatrix) -> Result<Problem> {
        let det = m.det();
        if !det.is_finite() || det.abs() < DET_EPS {
            return Err(Error::DegenerateMatrix { det });
        }
        if det < 0.0 {
            return Err(Error::OrientationViolation { det });
        }
        let (m, time_reversed) = if m.a < 0.0 {
            (ProblemMatrix::new(-m.a, -m.b, -m.c, -m.d), true)
        } else {
            (m, false)
        };
        let ProblemMatrix { a, b, c, d } = m;
        let (alpha, beta, gamma, delta) = (d / det, -b / det, -c / det, a / det);

        let num = c * c - a * a;
        let curvature = num / (det * det);
        let sign = if num.abs() <= CURVATURE_EPS * (a * a + c * c) {
            CurvatureSign::Zero
        } else if num < 0.0 {
            CurvatureSign::Neg
        } else {
            CurvatureSign::Pos
        };

        let mut p = Problem {
            matrix: m,
            det,
            time_reversed,
            alpha,
            beta,
            gamma,
            delta,
            curvature,
            sign,
            cap_delta: 0.0,
            theta: 0.0,
            lambda: 0.0,
            nu: 0.0,
            f: 0.0,
            g: 0.0,
            s1: sgn(gamma),
        };
        match sign {
            CurvatureSign::Neg | CurvatureSign::Pos => {
                let (cap_delta, theta) = if sign == CurvatureSign::Neg {
                    ((delta * delta - gamma * gamma).sqrt(), (gamma / delta).atanh())
                } else {
                    ((gamma * gamma - delta * delta).sqrt(), (delta / gamma).atanh())
                };
                let d2 = cap_delta * cap_delta;
                p.cap_delta = cap_delta;
                p.theta = theta;
                p.lambda = (alpha * delta - beta * gamma) / d2;
                p.nu = (beta * delta - alpha * gamma) / d2;
            }
            CurvatureSign::Zero => {
                // γ = 0 together with K = 0 forces det = 0, so γ ≠ 0 here
                let s1 = p.s1;
                p.f = -(alpha - s1 * beta) / (2.0 * gamma);
                p.g = -(alpha + s1 * beta) / (2.0 * gamma);
                if p.f.abs() < 1e-12 || !p.f.is_finite() {
                    return Err(Error::FlatDegenerate { f: p.f });
                }
            }
        }
        Ok(p)
    }

    pub fn matrix(&self) -> ProblemMatrix {
        self.matrix
    }

    pub fn det(&self) -> f64 {
        self.det
    }

    /// Whether the input matrix had `a < 0` and was negated.
    pub fn time_reversed(&self) -> bool {
        self.time_reversed
    }

    /// `λ₁(x, y) = (c − a)x + (d − b)(y − 1)`; nonpositive on the causal future of `Id`.
    pub fn lambda1(&self, q: &GroupPoint) -> f64 {
        let m = &self.matrix;
        (m.c - m.a) * q.x() + (m.d - m.b) * (q.y() - 1.0)
    }

    /// `λ₂(x, y) = (c + a)x + (d + b)(y − 1)`; nonnegative on the causal future of `Id`.
    pub fn lambda2(&self, q: &GroupPoint) -> f64 {
        let m = &self.matrix;
        (m.c + m.a) * q.x() + (m.d + m.b) * (q.y() - 1.0)
    }

    /// The null linear forms `(l₁(u), l₂(u))` with `g(u) = l₁(u)·l₂(u)`.
    pub fn null_forms(&self, u: &TangentVector) -> (f64, f64) {
        let m = &self.matrix;
        (
            (m.c - m.a) * u.u1 + (m.d - m.b) * u.u2,
            (m.c + m.a) * u.u1 + (m.d + m.b) * u.u2,
        )
    }

    /// `g(u)` for a vector written in the left-invariant frame.
    pub fn lorentz_form(&self, u: &TangentVector) -> f64 {
        let (p, q) = self.matrix.apply(u);
        -p * p + q * q
    }

    /// Polarization `g(u, v)` of [`Problem::lorentz_form`].
    pub fn inner(&self, u: &TangentVector, v: &TangentVector) -> f64 {
        let (pu, qu) = self.matrix.apply(u);
        let (pv, qv) = self.matrix.apply(v);
        -pu * pv + qu * qv
    }

    /// Frame components `(g₁₁, g₁₂, g₂₂)`.
    pub fn metric(&self) -> (f64, f64, f64) {
        let ProblemMatrix { a, b, c, d } = self.matrix;
        (c * c - a * a, c * d - a * b, d * d - b * b)
    }

    /// Time-orientation pairing; positive on future-directed vectors.
    pub fn time_pairing(&self, u: &TangentVector) -> f64 {
        self.matrix.apply(u).0
    }
}
