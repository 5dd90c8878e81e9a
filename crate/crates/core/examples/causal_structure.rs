// Stratification of the causal future of the identity for the anti-de
// Sitter model: light cone, finite-distance interior, the frontier ray and
// the region at infinite distance.
//
// Run: cargo run --example causal_structure

use aff_lorentz::causal::{frontier_point, lambda3, point_b};
use aff_lorentz::{classify, in_causal_future, is_globally_hyperbolic, GroupPoint, Preset};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let spec = Preset::P1.problem();
    let (bx, by) = point_b(&spec)?;
    println!("P1: B = ({bx}, {by}), globally hyperbolic: {}", is_globally_hyperbolic(&spec));

    println!("\n{:>6} {:>6}  {:<14} {:>8} {:>8} {:>8}", "x", "y", "stratum", "l1", "l2", "l3");
    for (x, y) in [(0.0, 1.0), (1.0, 2.0), (0.5, 0.5), (1.0, 1.5), (3.0, 2.0), (4.0, 2.0), (-1.0, 2.0)] {
        let q = GroupPoint::new(x, y)?;
        println!(
            "{x:>6} {y:>6}  {:<14} {:>8.3} {:>8.3} {:>8.3}",
            classify(&spec, &q).to_string(),
            spec.lambda1(&q),
            spec.lambda2(&q),
            lambda3(&spec, &q)?
        );
    }

    // the causal relation is transitive
    let (a, b) = (GroupPoint::new(0.5, 1.2)?, GroupPoint::new(1.5, 1.4)?);
    assert!(in_causal_future(&spec, &GroupPoint::IDENTITY, &a));
    assert!(in_causal_future(&spec, &a, &b));
    assert!(in_causal_future(&spec, &GroupPoint::IDENTITY, &b));

    let f = frontier_point(&spec, 5.0)?;
    println!("\nfrontier ray at y = 5: {f} ({})", classify(&spec, &f));

    for preset in [Preset::P2, Preset::P3] {
        let spec = preset.problem();
        let far = GroupPoint::new(40.0, 2.0)?;
        println!(
            "{preset}: globally hyperbolic {}, {far} is {}",
            is_globally_hyperbolic(&spec),
            classify(&spec, &far)
        );
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
