#![allow(dead_code)]

use aff_lorentz::geodesics::domain_bounds;
use aff_lorentz::{make_problem, CurvatureSign, Problem};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Random structure of the requested curvature sign with entries in
/// `[-2, 2]`, `det ≥ 0.5` and, for `K ≠ 0`, `|K| ≥ 0.05`.
pub fn random_problem<R: Rng>(rng: &mut R, sign: CurvatureSign) -> Problem {
    loop {
        let a = rng.gen_range(-2.0..2.0);
        let b = rng.gen_range(-2.0..2.0);
        let d = rng.gen_range(-2.0..2.0);
        let c = if sign == CurvatureSign::Zero {
            if rng.gen_bool(0.5) {
                a
            } else {
                -a
            }
        } else {
            rng.gen_range(-2.0..2.0)
        };
        if a * d - b * c < 0.5 {
            continue;
        }
        let p = make_problem(a, b, c, d).expect("det checked");
        if p.sign == sign && (sign == CurvatureSign::Zero || p.curvature.abs() >= 0.05) {
            return p;
        }
    }
}

/// Random `(ψ₀, t)` with `t` in the forward domain, capped at `cap`.
pub fn random_chart<R: Rng>(rng: &mut R, p: &Problem, cap: f64) -> (f64, f64) {
    let psi0 = rng.gen_range(-2.0..2.0);
    let (_, t_max) = domain_bounds(p, psi0);
    (psi0, 0.9 * t_max.min(cap) * rng.gen_range(0.02..1.0))
}

pub const SIGNS: [CurvatureSign; 3] = [CurvatureSign::Neg, CurvatureSign::Zero, CurvatureSign::Pos];
