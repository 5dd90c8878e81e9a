//! Independent numerical witnesses for the closed forms.
//!
//! * [`integrate_extremal`] integrates the Hamiltonian system of the
//!   maximum principle with fixed-step RK4, in covector coordinates that
//!   never touch the closed-form solution.
//! * [`brute_force_distance`] maximizes length over broken causal paths,
//!   producing a lower bound for the distance straight from its definition
//!   as a supremum.
//! * [`finite_diff_jacobian`] differentiates the anti-de Sitter chart.

use crate::causal::in_causal_future;
use crate::error::{Error, Result};
use crate::geodesics::chart_point;
use crate::group::{lie_exp, lie_log, GroupPoint, TangentVector};
use crate::isometry::VectorField;
use crate::problem::Problem;

/// State along an integrated extremal.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ExtremalNode {
    pub t: f64,
    pub psi: f64,
    pub x: f64,
    pub y: f64,
    pub h1: f64,
    pub h2: f64,
}

impl ExtremalNode {
    /// `(h₁² − h₂²)/2`, identically `1/2` on arclength-parametrized extremals.
    pub fn hamiltonian(&self) -> f64 {
        0.5 * (self.h1 * self.h1 - self.h2 * self.h2)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct IntegratedExtremal {
    pub step: f64,
    pub nodes: Vec<ExtremalNode>,
}

impl IntegratedExtremal {
    pub fn endpoint(&self) -> &ExtremalNode {
        self.nodes.last().expect("at least the initial node")
    }

    pub fn max_hamiltonian_drift(&self) -> f64 {
        self.nodes
            .iter()
            .map(|n| (n.hamiltonian() - 0.5).abs())
            .fold(0.0, f64::max)
    }
}

type State = [f64; 4];

/// `(ḣ₁, ḣ₂, ẋ, ẏ)`; the control is `v = (−h₁, h₂)`.
fn hamiltonian_rhs(spec: &Problem, s: &State) -> State {
    let [h1, h2, _, y] = *s;
    let k = -spec.delta * h1 + spec.gamma * h2;
    let (v1, v2) = (-h1, h2);
    [
        -h2 * k,
        -h1 * k,
        y * (spec.alpha * v1 + spec.beta * v2),
        y * (spec.gamma * v1 + spec.delta * v2),
    ]
}

fn rk4_step<F: Fn(&State) -> State>(f: &F, s: &State, h: f64) -> State {
    let add = |a: &State, b: &State, c: f64| -> State {
        [a[0] + c * b[0], a[1] + c * b[1], a[2] + c * b[2], a[3] + c * b[3]]
    };
    let k1 = f(s);
    let k2 = f(&add(s, &k1, h / 2.0));
    let k3 = f(&add(s, &k2, h / 2.0));
    let k4 = f(&add(s, &k3, h));
    let mut out = *s;
    for i in 0..4 {
        out[i] += h / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
    }
    out
}

/// Integrates the normal extremal with initial angle `ψ₀` from the identity
/// up to time `t1` in `steps` fixed RK4 steps.
///
/// Fails with [`Error::BlowUp`] when a node leaves the half-plane or the
/// angle exceeds 50 in magnitude, which happens near the end of the
/// geodesic's domain.
pub fn integrate_extremal(spec: &Problem, psi0: f64, t1: f64, steps: usize) -> Result<IntegratedExtremal> {
    let steps = steps.max(1);
    let h = t1 / steps as f64;
    let f = |s: &State| hamiltonian_rhs(spec, s);
    let mut s: State = [-psi0.cosh(), psi0.sinh(), 0.0, 1.0];
    let node = |t: f64, s: &State| ExtremalNode {
        t,
        psi: s[1].asinh(),
        x: s[2],
        y: s[3],
        h1: s[0],
        h2: s[1],
    };
    let mut nodes = Vec::with_capacity(steps + 1);
    nodes.push(node(0.0, &s));
    for k in 1..=steps {
        s = rk4_step(&f, &s, h);
        let t = if k == steps { t1 } else { k as f64 * h };
        let n = node(t, &s);
        if n.y.is_nan() || n.y <= 0.0 || n.psi.is_nan() || n.psi.abs() > 50.0 || !n.x.is_finite() {
            return Err(Error::BlowUp { t });
        }
        nodes.push(n);
    }
    Ok(IntegratedExtremal { step: h, nodes })
}

/// Flow of a vector field for time `t` in `steps` RK4 steps.
pub fn flow(field: &dyn VectorField, q: &GroupPoint, t: f64, steps: usize) -> Result<GroupPoint> {
    let steps = steps.max(1);
    let h = t / steps as f64;
    let f = |s: &State| {
        let (u, v) = field.eval(s[0], s[1]);
        [u, v, 0.0, 0.0]
    };
    let mut s: State = [q.x(), q.y(), 0.0, 0.0];
    for _ in 0..steps {
        s = rk4_step(&f, &s, h);
    }
    GroupPoint::new(s[0], s[1])
}

/// Resources for [`brute_force_distance`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SearchBudget {
    /// Number of subgroup segments in a path.
    pub steps: usize,
    /// Coordinate-ascent passes over the interior waypoints.
    pub sweeps: usize,
    /// Waypoints must stay strictly above this height.
    pub min_height: f64,
}

impl Default for SearchBudget {
    fn default() -> Self {
        SearchBudget {
            steps: 8,
            sweeps: 60,
            min_height: 0.0,
        }
    }
}

/// Best broken causal path found from the identity to the target.
#[derive(Debug, Clone, PartialEq)]
pub struct PathLowerBound {
    pub value: f64,
    pub waypoints: Vec<GroupPoint>,
    pub segments: Vec<f64>,
    pub budget: SearchBudget,
}

/// Length of the subgroup segment from `p` to `q`, `−∞` when it is not
/// future-directed causal.
pub fn segment_length(spec: &Problem, p: &GroupPoint, q: &GroupPoint) -> f64 {
    let u = lie_log(&p.inverse().mul(q));
    let (l1, l2) = spec.null_forms(&u);
    if l1 > 0.0 || l2 < 0.0 {
        f64::NEG_INFINITY
    } else {
        (-l1 * l2).max(0.0).sqrt()
    }
}

const GOLDEN: f64 = 0.618_033_988_749_894_8;
const GOLDEN_ITERATIONS: usize = 40;

/// Golden-section search for a maximum of `f` on `[lo, hi]`.
fn golden_max<F: Fn(f64) -> f64>(f: F, lo: f64, hi: f64) -> (f64, f64) {
    let (mut a, mut b) = (lo, hi);
    let mut c = b - GOLDEN * (b - a);
    let mut d = a + GOLDEN * (b - a);
    let (mut fc, mut fd) = (f(c), f(d));
    for _ in 0..GOLDEN_ITERATIONS {
        if fc > fd {
            b = d;
            d = c;
            fd = fc;
            c = b - GOLDEN * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + GOLDEN * (b - a);
            fd = f(d);
        }
    }
    if fc > fd {
        (c, fc)
    } else {
        (d, fd)
    }
}

/// Lower bound for `d(Id, target)` by direct maximization over paths made of
/// `budget.steps` one-parameter-subgroup segments.
///
/// Paths start on the subgroup through the target and improve by cyclic
/// golden-section moves of one waypoint at a time, in the null coordinates
/// `(λ₁, λ₂)`. Each move stays inside the causal diamond of the neighbouring
/// waypoints and is kept only if the length grows, so every path considered
/// is causal and ends exactly at the target: the result never exceeds the
/// true distance.
pub fn brute_force_distance(spec: &Problem, target: &GroupPoint, budget: SearchBudget) -> Result<PathLowerBound> {
    if !in_causal_future(spec, &GroupPoint::IDENTITY, target) {
        return Err(Error::TargetUnreachable {
            x: target.x(),
            y: target.y(),
        });
    }
    let n = budget.steps.max(1);
    let m = spec.matrix();
    let (m11, m12, m21, m22) = (m.c - m.a, m.d - m.b, m.c + m.a, m.d + m.b);
    let mdet = m11 * m22 - m12 * m21;
    let to_null = |p: &GroupPoint| (spec.lambda1(p), spec.lambda2(p));
    let from_null = |l: (f64, f64)| {
        let x = (m22 * l.0 - m12 * l.1) / mdet;
        let y = 1.0 + (-m21 * l.0 + m11 * l.1) / mdet;
        (x, y)
    };

    let u = lie_log(target);
    let mut pts: Vec<GroupPoint> = (0..=n)
        .map(|k| lie_exp(&u, k as f64 / n as f64))
        .collect();
    pts[0] = GroupPoint::IDENTITY;
    pts[n] = *target;
    let mut nulls: Vec<(f64, f64)> = pts.iter().map(to_null).collect();

    let seg = |p: &GroupPoint, q: &GroupPoint| segment_length(spec, p, q);
    for _ in 0..budget.sweeps {
        for k in 1..n {
            for coord in 0..2 {
                let (lo, hi) = if coord == 0 {
                    (nulls[k + 1].0, nulls[k - 1].0)
                } else {
                    (nulls[k - 1].1, nulls[k + 1].1)
                };
                let (prev, next) = (pts[k - 1], pts[k + 1]);
                let base = nulls[k];
                let candidate = |v: f64| {
                    let l = if coord == 0 { (v, base.1) } else { (base.0, v) };
                    let (x, y) = from_null(l);
                    if y.is_nan() || y <= budget.min_height || y <= 0.0 {
                        return None;
                    }
                    Some(GroupPoint::from_coords(x, y))
                };
                let local = |v: f64| match candidate(v) {
                    Some(p) => seg(&prev, &p) + seg(&p, &next),
                    None => f64::NEG_INFINITY,
                };
                let current = local(if coord == 0 { base.0 } else { base.1 });
                let (v, fv) = golden_max(local, lo.min(hi), lo.max(hi));
                if fv > current {
                    if let Some(p) = candidate(v) {
                        pts[k] = p;
                        nulls[k] = if coord == 0 { (v, base.1) } else { (base.0, v) };
                    }
                }
            }
        }
    }
    let segments: Vec<f64> = pts.windows(2).map(|w| seg(&w[0], &w[1])).collect();
    let value = segments.iter().sum::<f64>().max(0.0);
    Ok(PathLowerBound {
        value,
        waypoints: pts,
        segments,
        budget,
    })
}

/// Central-difference determinant `∂(x, y)/∂(τ, ρ)` of the anti-de Sitter chart.
pub fn finite_diff_jacobian(spec: &Problem, rho: f64, tau: f64) -> Result<f64> {
    let h = 1e-5;
    let at = |r: f64, t: f64| chart_point(spec, r, t).map(|q| q.coords());
    let (xtp, ytp) = at(rho, tau + h)?;
    let (xtm, ytm) = at(rho, tau - h)?;
    let (xrp, yrp) = at(rho + h, tau)?;
    let (xrm, yrm) = at(rho - h, tau)?;
    let (x_tau, y_tau) = ((xtp - xtm) / (2.0 * h), (ytp - ytm) / (2.0 * h));
    let (x_rho, y_rho) = ((xrp - xrm) / (2.0 * h), (yrp - yrm) / (2.0 * h));
    Ok(x_tau * y_rho - x_rho * y_tau)
}

/// Frame components `(u₁, u₂)` of the velocity of `t ↦ q(t)` by central
/// differences.
pub fn frame_velocity<F: Fn(f64) -> Result<GroupPoint>>(curve: F, t: f64, h: f64) -> Result<TangentVector> {
    let p = curve(t + h)?;
    let m = curve(t - h)?;
    let q = curve(t)?;
    Ok(TangentVector::new(
        (p.x() - m.x()) / (2.0 * h * q.y()),
        (p.y() - m.y()) / (2.0 * h * q.y()),
    ))
}
