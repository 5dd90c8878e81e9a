mod common;

use aff_lorentz::isometry::{
    bracket_coefficients, embed_flat, half_plane_margin, killing_basis, killing_residual, lie_bracket,
    minkowski_distance, VectorField,
};
use aff_lorentz::problem::Preset;
use aff_lorentz::{classify, distance, exp_map, CausalClass, CurvatureSign, GroupPoint, Problem};
use common::{random_chart, random_problem, rng, SIGNS};
use rand::Rng;

fn random_point<R: Rng>(r: &mut R) -> GroupPoint {
    GroupPoint::from_coords(r.gen_range(-3.0..3.0), r.gen_range(0.2..5.0))
}

fn specs() -> Vec<Problem> {
    let mut r = rng(41);
    let mut out: Vec<Problem> = Preset::ALL.iter().map(|p| p.problem()).collect();
    for sign in SIGNS {
        out.extend((0..10).map(|_| random_problem(&mut r, sign)));
    }
    out
}

#[test]
fn basis_fields_are_killing() {
    let mut r = rng(42);
    for p in specs() {
        let basis = killing_basis(&p);
        for _ in 0..100 {
            let q = random_point(&mut r);
            for field in &basis {
                let res = killing_residual(&p, field, &q);
                assert!(res <= 1e-6, "{:?} at {q}: {res}", field.kind);
            }
        }
    }
}

#[test]
fn generic_fields_are_not_killing() {
    let mut r = rng(43);
    let twist = |x: f64, y: f64| (y * y, x);
    for p in specs() {
        let q = random_point(&mut r);
        assert!(killing_residual(&p, &twist, &q) > 1e-2);
    }
}

#[test]
fn brackets_close_on_the_basis() {
    let mut r = rng(44);
    for p in specs() {
        let basis = killing_basis(&p);
        for _ in 0..50 {
            let q = random_point(&mut r);
            let (x, y) = q.coords();
            for i in 0..3 {
                for j in 0..3 {
                    let got = lie_bracket(&basis[i], &basis[j], x, y);
                    let c = bracket_coefficients(&p, i, j);
                    let mut want = (0.0, 0.0);
                    for (k, field) in basis.iter().enumerate() {
                        let v = field.eval(x, y);
                        want.0 += c[k] * v.0;
                        want.1 += c[k] * v.1;
                    }
                    let scale = 1.0 + want.0.abs().max(want.1.abs());
                    assert!(
                        (got.0 - want.0).abs().max((got.1 - want.1).abs()) <= 1e-10 * scale,
                        "[{i},{j}] at {q}: {got:?} vs {want:?}"
                    );
                }
            }
        }
    }
}

#[test]
fn only_right_invariant_fields_are_complete() {
    for p in specs() {
        let complete: Vec<bool> = killing_basis(&p).iter().map(|f| f.is_complete()).collect();
        assert_eq!(complete, [true, true, false]);
    }
}

fn flat_specs() -> Vec<Problem> {
    let mut r = rng(45);
    let mut out = vec![Preset::P3.problem()];
    out.extend((0..20).map(|_| random_problem(&mut r, CurvatureSign::Zero)));
    out
}

#[test]
fn flat_embedding_preserves_distance() {
    let mut r = rng(46);
    for p in flat_specs() {
        for _ in 0..200 {
            let q1 = random_point(&mut r);
            let (psi0, t) = random_chart(&mut r, &p, 5.0);
            let q2 = q1.mul(&exp_map(&p, psi0, t).unwrap());
            let (e1, e2) = (embed_flat(&p, &q1).unwrap(), embed_flat(&p, &q2).unwrap());
            let d = distance(&p, &q1, &q2).distance.value();
            let dm = minkowski_distance(&e1, &e2).value();
            assert!((d - dm).abs() <= 1e-9 * (1.0 + d), "{d} vs {dm}");
        }
    }
}

#[test]
fn flat_embedding_preserves_causality() {
    let mut r = rng(47);
    for p in flat_specs() {
        for _ in 0..500 {
            let (q1, q2) = (random_point(&mut r), random_point(&mut r));
            let (e1, e2) = (embed_flat(&p, &q1).unwrap(), embed_flat(&p, &q2).unwrap());
            let d = distance(&p, &q1, &q2).distance.value();
            let dm = minkowski_distance(&e1, &e2).value();
            assert_eq!(d > 0.0, dm > 0.0, "{q1} -> {q2}");
            if classify(&p, &q1.inverse().mul(&q2)) == CausalClass::Interior {
                assert!((d - dm).abs() <= 1e-9 * (1.0 + d));
            }
            for e in [e1, e2] {
                assert!(half_plane_margin(&p, &e) > 0.0);
            }
        }
    }
}

#[test]
fn embedding_margin_is_reciprocal_height() {
    let mut r = rng(48);
    for p in flat_specs() {
        for _ in 0..100 {
            let q = random_point(&mut r);
            let m = half_plane_margin(&p, &embed_flat(&p, &q).unwrap());
            assert!((m - 1.0 / q.y()).abs() < 1e-12 * (1.0 + 1.0 / q.y()));
        }
    }
    assert!(embed_flat(&Preset::P1.problem(), &GroupPoint::IDENTITY).is_err());
}
