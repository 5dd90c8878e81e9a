//! Oracle suite run by the `verify` command: every closed form checked
//! against an independent computation on deterministic samples.

use rayon::prelude::*;

use crate::connection::sectional_curvature_numeric;
use crate::geodesics::{domain_bounds, exp_map, Geodesic};
use crate::group::GroupPoint;
use crate::isometry::{bracket_coefficients, embed_flat, killing_basis, killing_residual, lie_bracket, minkowski_distance, VectorField};
use crate::oracles::{brute_force_distance, finite_diff_jacobian, integrate_extremal, SearchBudget};
use crate::problem::{CurvatureSign, Problem};
use crate::synthesis::{distance, distance_from_identity, exp_inverse, jacobian_exp, sphere};

#[derive(Debug, Clone, PartialEq)]
pub struct CheckResult {
    pub name: &'static str,
    pub samples: usize,
    /// Worst observed discrepancy.
    pub residual: f64,
    pub tolerance: f64,
    pub passed: bool,
}

impl CheckResult {
    fn new(name: &'static str, samples: usize, residual: f64, tolerance: f64) -> Self {
        CheckResult {
            name,
            samples,
            residual,
            tolerance,
            passed: residual <= tolerance,
        }
    }
}

fn grid(lo: f64, hi: f64, n: usize) -> impl Iterator<Item = f64> + Clone {
    (0..n).map(move |k| lo + (hi - lo) * (k as f64 + 0.5) / n as f64)
}

/// Initial angles and times covering the forward domain of each geodesic.
fn samples(spec: &Problem, n: usize) -> Vec<(f64, f64)> {
    let mut out = Vec::new();
    for psi0 in grid(-2.0, 2.0, n) {
        let (_, t_max) = domain_bounds(spec, psi0);
        let span = 0.9 * t_max.min(10.0);
        for frac in grid(0.05, 1.0, n) {
            out.push((psi0, span * frac));
        }
    }
    out
}

fn ode_checks(spec: &Problem, n: usize) -> Vec<CheckResult> {
    let results: Vec<(f64, f64)> = grid(-2.0, 2.0, n)
        .collect::<Vec<_>>()
        .par_iter()
        .map(|&psi0| {
            let (_, t_max) = domain_bounds(spec, psi0);
            let t1 = 0.9 * t_max.min(10.0);
            let geo = Geodesic::timelike(spec, psi0);
            match integrate_extremal(spec, psi0, t1, 10_000) {
                Ok(ext) => {
                    let mut err: f64 = 0.0;
                    for node in ext.nodes.iter().step_by(100).chain(std::iter::once(ext.endpoint())) {
                        let (q, psi) = geo.state(node.t).expect("inside the domain");
                        err = err
                            .max((q.x() - node.x).abs())
                            .max((q.y() - node.y).abs())
                            .max((psi.unwrap_or(f64::NAN) - node.psi).abs());
                    }
                    (err, ext.max_hamiltonian_drift())
                }
                Err(_) => (f64::INFINITY, f64::INFINITY),
            }
        })
        .collect();
    let worst = results.iter().map(|r| r.0).fold(0.0, f64::max);
    let drift = results.iter().map(|r| r.1).fold(0.0, f64::max);
    vec![
        CheckResult::new("closed form vs RK4", n, worst, 1e-8),
        CheckResult::new("Hamiltonian conservation", n, drift, 1e-9),
    ]
}

fn round_trip(spec: &Problem, n: usize) -> CheckResult {
    let s = samples(spec, n);
    let worst = s
        .par_iter()
        .map(|&(psi0, t)| match exp_map(spec, psi0, t).and_then(|q| exp_inverse(spec, &q)) {
            Ok((p, t1)) => (p - psi0).abs().max((t1 - t).abs()),
            Err(_) => f64::INFINITY,
        })
        .reduce(|| 0.0, f64::max);
    CheckResult::new("inverse exponential round trip", s.len(), worst, 1e-9)
}

fn sphere_check(spec: &Problem, n: usize) -> CheckResult {
    let mut worst: f64 = 0.0;
    let mut count = 0;
    // radii shrink with the anti-de Sitter limit π/Δ so the sphere exists
    let scale = match spec.sign {
        CurvatureSign::Neg => (1.0 / spec.cap_delta).min(1.0),
        _ => 1.0,
    };
    for radius in [0.2 * scale, 0.5 * scale] {
        match sphere(spec, radius, n) {
            Ok(arc) => {
                for q in &arc.points {
                    worst = worst.max((distance_from_identity(spec, q).distance.value() - radius).abs());
                    count += 1;
                }
            }
            Err(_) => worst = f64::INFINITY,
        }
    }
    CheckResult::new("sphere points at their radius", count, worst, 1e-8)
}

fn killing_checks(spec: &Problem, n: usize) -> Vec<CheckResult> {
    let basis = killing_basis(spec);
    let mut residual: f64 = 0.0;
    let mut bracket: f64 = 0.0;
    let mut count = 0;
    for x in grid(-2.0, 2.0, n) {
        for y in grid(0.3, 3.0, n) {
            let q = GroupPoint::from_coords(x, y);
            count += 1;
            for f in &basis {
                residual = residual.max(killing_residual(spec, f, &q));
            }
            for i in 0..3 {
                for j in 0..3 {
                    let got = lie_bracket(&basis[i], &basis[j], x, y);
                    let c = bracket_coefficients(spec, i, j);
                    let mut want = (0.0, 0.0);
                    for (k, f) in basis.iter().enumerate() {
                        let v = f.eval(x, y);
                        want.0 += c[k] * v.0;
                        want.1 += c[k] * v.1;
                    }
                    let size = 1.0 + want.0.abs().max(want.1.abs());
                    bracket = bracket.max((got.0 - want.0).abs().max((got.1 - want.1).abs()) / size);
                }
            }
        }
    }
    vec![
        CheckResult::new("Killing identity", count, residual, 1e-6),
        CheckResult::new("bracket table", count, bracket, 1e-10),
    ]
}

fn brute_force_check(spec: &Problem, targets: usize) -> CheckResult {
    let pts: Vec<(f64, f64)> = samples(spec, targets.max(1))
        .into_iter()
        .step_by(targets.max(1) + 1)
        .take(targets)
        .map(|(psi0, t)| (psi0, t.min(3.0)))
        .collect();
    let worst = pts
        .par_iter()
        .map(|&(psi0, t)| {
            let q = match exp_map(spec, psi0, t) {
                Ok(q) => q,
                Err(_) => return f64::INFINITY,
            };
            let d = distance_from_identity(spec, &q).distance.value();
            match brute_force_distance(spec, &q, SearchBudget::default()) {
                // a bound above the distance is a failure regardless of size
                Ok(b) if b.value > d + 1e-6 => f64::INFINITY,
                Ok(b) => d - b.value,
                Err(_) => f64::INFINITY,
            }
        })
        .reduce(|| 0.0, f64::max);
    CheckResult::new("path maximizer below and near distance", pts.len(), worst, 0.02)
}

fn embedding_check(spec: &Problem, n: usize) -> CheckResult {
    let mut worst: f64 = 0.0;
    let mut count = 0;
    let q0 = GroupPoint::from_coords(0.1, 0.9);
    for x in grid(-2.0, 2.0, n) {
        for y in grid(0.2, 3.0, n) {
            let q1 = GroupPoint::from_coords(x, y);
            let d = distance(spec, &q0, &q1).distance.value();
            let e = match (embed_flat(spec, &q0), embed_flat(spec, &q1)) {
                (Ok(a), Ok(b)) => minkowski_distance(&a, &b).value(),
                _ => f64::INFINITY,
            };
            worst = worst.max((d - e).abs());
            count += 1;
        }
    }
    CheckResult::new("Minkowski embedding isometry", count, worst, 1e-9)
}

fn jacobian_check(spec: &Problem, n: usize) -> CheckResult {
    let mut worst: f64 = 0.0;
    let mut count = 0;
    for rho in grid(-1.2, 1.2, n) {
        for k in 1..=n {
            let tau = rho + (std::f64::consts::FRAC_PI_2 - 0.3 - rho) * k as f64 / n as f64;
            let exact = jacobian_exp(spec, rho, tau).unwrap_or(f64::NAN);
            let numeric = finite_diff_jacobian(spec, rho, tau).unwrap_or(f64::NAN);
            let err = (exact - numeric).abs() / exact.abs().max(1.0);
            // the chart Jacobian must also keep one sign
            worst = worst.max(if exact > 0.0 { err } else { f64::INFINITY });
            count += 1;
        }
    }
    CheckResult::new("chart Jacobian vs differences", count, worst, 1e-6)
}

/// Runs the suite; `full` multiplies the sample counts.
pub fn run_checks(spec: &Problem, full: bool) -> Vec<CheckResult> {
    let n = if full { 20 } else { 6 };
    let mut out = vec![CheckResult::new(
        "curvature from connection",
        1,
        (sectional_curvature_numeric(spec) - spec.curvature).abs(),
        1e-10,
    )];
    out.extend(ode_checks(spec, n));
    out.push(round_trip(spec, n));
    out.push(sphere_check(spec, 4 * n));
    out.extend(killing_checks(spec, n));
    out.push(brute_force_check(spec, if full { 20 } else { 4 }));
    match spec.sign {
        CurvatureSign::Zero => out.push(embedding_check(spec, n)),
        CurvatureSign::Neg => out.push(jacobian_check(spec, n)),
        CurvatureSign::Pos => {}
    }
    out
}
