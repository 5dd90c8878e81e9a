mod common;

use aff_lorentz::isometry::{KillingField, KillingKind};
use aff_lorentz::oracles::flow;
use aff_lorentz::problem::Preset;
use aff_lorentz::{
    classify, distance, distance_from_identity, exp_inverse, exp_map, lightlike_curve, CausalClass, CurvatureSign,
    GroupPoint, LorentzDistance, NullDirection,
};
use common::{random_chart, random_problem, rng, SIGNS};
use rand::Rng;
use std::f64::consts::PI;

fn random_point<R: Rng>(r: &mut R) -> GroupPoint {
    GroupPoint::from_coords(r.gen_range(-4.0..4.0), r.gen_range(0.1..4.0))
}

fn close(a: LorentzDistance, b: LorentzDistance, tol: f64) -> bool {
    match (a, b) {
        (LorentzDistance::Infinite, LorentzDistance::Infinite) => true,
        (LorentzDistance::Finite(x), LorentzDistance::Finite(y)) => (x - y).abs() <= tol * (1.0 + x.abs()),
        _ => false,
    }
}

#[test]
fn inverse_undoes_exponential() {
    let mut r = rng(31);
    for sign in SIGNS {
        for _ in 0..1000 {
            let p = random_problem(&mut r, sign);
            let (psi0, t) = random_chart(&mut r, &p, 10.0);
            let q = exp_map(&p, psi0, t).unwrap();
            let (psi1, t1) = exp_inverse(&p, &q).unwrap();
            assert!((psi1 - psi0).abs() < 1e-9 && (t1 - t).abs() < 1e-9, "{sign:?} ({psi0},{t}) -> ({psi1},{t1})");
        }
    }
}

#[test]
fn distance_is_left_invariant() {
    let mut r = rng(32);
    for sign in SIGNS {
        for _ in 0..500 {
            let p = random_problem(&mut r, sign);
            let (q0, q1, g) = (random_point(&mut r), random_point(&mut r), random_point(&mut r));
            let d = distance(&p, &q0, &q1).distance;
            let dg = distance(&p, &g.mul(&q0), &g.mul(&q1)).distance;
            assert!(close(d, dg, 1e-10), "{d} vs {dg}");
        }
    }
}

#[test]
fn reverse_triangle_inequality() {
    let mut r = rng(33);
    for sign in SIGNS {
        let mut checked = 0;
        while checked < 300 {
            let p = random_problem(&mut r, sign);
            let (psi_a, ta) = random_chart(&mut r, &p, 3.0);
            let (psi_b, tb) = random_chart(&mut r, &p, 3.0);
            let q1 = exp_map(&p, psi_a, ta).unwrap();
            let q2 = q1.mul(&exp_map(&p, psi_b, tb).unwrap());
            let whole = distance_from_identity(&p, &q2).distance;
            let (d1, d12) = (distance_from_identity(&p, &q1), distance(&p, &q1, &q2));
            assert!((d1.distance.value() - ta).abs() < 1e-9 && (d12.distance.value() - tb).abs() < 1e-9);
            assert!(whole.value() >= ta + tb - 1e-8, "{sign:?} {whole} < {ta} + {tb}");
            checked += 1;
        }
        // along one geodesic the inequality is an equality
        for _ in 0..100 {
            let p = random_problem(&mut r, sign);
            let (psi0, t) = random_chart(&mut r, &p, 5.0);
            let s = t * r.gen_range(0.1..0.9);
            let (q1, q2) = (exp_map(&p, psi0, s).unwrap(), exp_map(&p, psi0, t).unwrap());
            let split = distance_from_identity(&p, &q1).distance.value() + distance(&p, &q1, &q2).distance.value();
            assert!((split - distance_from_identity(&p, &q2).distance.value()).abs() < 1e-8);
        }
    }
}

#[test]
fn anti_de_sitter_distances_are_bounded() {
    let mut r = rng(34);
    for _ in 0..1000 {
        let p = random_problem(&mut r, CurvatureSign::Neg);
        let q = random_point(&mut r);
        let rep = distance_from_identity(&p, &q);
        if rep.class == CausalClass::Interior {
            let d = rep.distance.value();
            assert!(d > 0.0 && d < PI / p.cap_delta);
        }
    }
}

#[test]
fn de_sitter_distances_grow_along_the_axis() {
    let mut r = rng(35);
    for _ in 0..100 {
        let p = random_problem(&mut r, CurvatureSign::Pos);
        for k in 1..=20 {
            let y = (p.s1 * k as f64).exp();
            let q = GroupPoint::from_coords(-p.nu * (y - 1.0), y);
            assert_eq!(classify(&p, &q), CausalClass::Interior);
            let d = distance_from_identity(&p, &q).distance.value();
            assert!((d - k as f64 / p.cap_delta).abs() < 1e-9 * k as f64);
        }
    }
    let p2 = Preset::P2.problem();
    for y in [2.0, 10.0, 1e3, 1e8] {
        let d = distance_from_identity(&p2, &GroupPoint::from_coords(0.0, y)).distance.value();
        assert!((d - f64::ln(y)).abs() < 1e-12);
    }
}

#[test]
fn flat_distances_are_unbounded() {
    let mut r = rng(36);
    for _ in 0..100 {
        let p = random_problem(&mut r, CurvatureSign::Zero);
        let mut last = 0.0;
        for k in 1..=10 {
            let psi0 = -p.s1 * k as f64;
            let t_max = aff_lorentz::domain_bounds(&p, psi0).1;
            let t = if t_max.is_finite() { 0.5 * t_max } else { k as f64 };
            let d = distance_from_identity(&p, &exp_map(&p, psi0, t).unwrap()).distance.value();
            assert!((d - t).abs() < 1e-9 * (1.0 + t) && d > last);
            last = d;
        }
        assert!(last >= 10.0 - 1e-8);
    }
}

/// `d(q)/√s` along `q̄ + s·dir` into the interior, halving `s` each time.
fn hoelder_ratios(q_bar: GroupPoint) -> Vec<f64> {
    let p = Preset::P1.problem();
    let dir = [(1.0, 0.0), (-1.0, 0.0), (0.0, 1.0), (0.0, -1.0)]
        .into_iter()
        .find(|(dx, dy)| {
            let q = GroupPoint::from_coords(q_bar.x() + 1e-3 * dx, q_bar.y() + 1e-3 * dy);
            classify(&p, &q) == CausalClass::Interior
        })
        .expect("some axis direction enters the interior");
    // stop before the offset reaches the stratum tolerance
    (8..=26)
        .map(|k| {
            let s = 2f64.powi(-k);
            let q = GroupPoint::from_coords(q_bar.x() + s * dir.0, q_bar.y() + s * dir.1);
            distance_from_identity(&p, &q).distance.value() / s.sqrt()
        })
        .collect()
}

#[test]
fn distance_is_square_root_hoelder_at_the_light_cone() {
    let p = Preset::P1.problem();
    for (dir, t) in [(NullDirection::Plus, 0.5), (NullDirection::Minus, 0.3), (NullDirection::Plus, 2.0)] {
        let q_bar = lightlike_curve(&p, dir, t);
        assert_eq!(distance_from_identity(&p, &q_bar).distance.value(), 0.0);
        let ratios = hoelder_ratios(q_bar);
        let tail = &ratios[ratios.len() - 6..];
        let limit = *tail.last().unwrap();
        assert!(limit > 1e-3 && limit.is_finite(), "{ratios:?}");
        for w in tail.windows(2) {
            assert!((w[1] / w[0] - 1.0).abs() < 0.1, "{ratios:?}");
        }
    }
}

#[test]
fn right_invariant_flows_preserve_distance() {
    let mut r = rng(37);
    for sign in SIGNS {
        let mut n = 0;
        while n < 200 {
            let p = random_problem(&mut r, sign);
            let q1 = random_point(&mut r);
            let (psi0, t) = random_chart(&mut r, &p, 3.0);
            let q2 = q1.mul(&exp_map(&p, psi0, t).unwrap());
            let d = distance(&p, &q1, &q2).distance;
            for kind in [KillingKind::RightX1, KillingKind::RightX2] {
                let field = KillingField::new(&p, kind);
                let (f1, f2) = (flow(&field, &q1, 1e-3, 1).unwrap(), flow(&field, &q2, 1e-3, 1).unwrap());
                let df = distance(&p, &f1, &f2).distance;
                assert!(close(d, df, 1e-6), "{kind:?}: {d} vs {df}");
            }
            n += 1;
        }
    }
}
