// Lorentzian distance on every stratum, the inverse exponential map, and the
// reverse triangle inequality along a broken geodesic.
//
// Run: cargo run --example distance

use aff_lorentz::{distance, exp_inverse, exp_map, make_problem, GroupPoint, Preset};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let id = GroupPoint::IDENTITY;
    let cases = [
        (Preset::P1, (1.0, 2f64.sqrt())),
        (Preset::P1, (3.0, 2.0)),
        (Preset::P1, (4.0, 2.0)),
        (Preset::P1, (1.0, 2.0)),
        (Preset::P1, (-1.0, 2.0)),
        (Preset::P2, (0.0, 2.0)),
        (Preset::P2, (5.0, 3.0)),
        (Preset::P3, (1.0, 2.0)),
    ];
    println!("{:<4} {:<22} {:<14} {:>20}  maximizer", "", "target", "stratum", "distance");
    for (preset, (x, y)) in cases {
        let q = GroupPoint::new(x, y)?;
        let r = distance(&preset.problem(), &id, &q);
        println!(
            "{preset:<4} {:<22} {:<14} {:>20}  {}",
            q.to_string(),
            r.class.to_string(),
            r.distance.to_string(),
            r.maximizer_exists
        );
    }

    // the inverse map recovers the geodesic
    let spec = make_problem(1.3, -0.4, 0.5, 0.9)?;
    let q = exp_map(&spec, 0.7, 0.8)?;
    let (psi0, t1) = exp_inverse(&spec, &q)?;
    println!("\nexp(0.7, 0.8) = {q}; inverse gives psi0 = {psi0:.15}, t1 = {t1:.15}");

    // broken paths are shorter than the geodesic between their ends
    let q1 = exp_map(&spec, 0.2, 0.3)?;
    let q2 = q1.mul(&exp_map(&spec, -0.5, 0.4)?);
    let direct = distance(&spec, &id, &q2).distance.value();
    let broken = distance(&spec, &id, &q1).distance.value() + distance(&spec, &q1, &q2).distance.value();
    println!("d(Id, q2) = {direct:.6} >= {broken:.6} = d(Id, q1) + d(q1, q2)");
    assert!(direct >= broken);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
