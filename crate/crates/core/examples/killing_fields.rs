// Killing fields: the right-invariant pair plus the field fixing the
// identity, their bracket table, and the Killing identity checked
// numerically against a field that is not Killing.
//
// Run: cargo run --example killing_fields

use aff_lorentz::isometry::{bracket_coefficients, killing_basis, killing_residual, lie_bracket};
use aff_lorentz::oracles::flow;
use aff_lorentz::{distance, GroupPoint, Preset};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let q = GroupPoint::new(1.0, 2.0)?;
    for preset in Preset::ALL {
        let spec = preset.problem();
        let basis = killing_basis(&spec);
        println!("{preset} at {q}:");
        for f in &basis {
            println!(
                "  {:<8} = {:?}, residual {:.1e}, complete {}",
                f.kind.name(),
                f.at(&q),
                killing_residual(&spec, f, &q),
                f.is_complete()
            );
        }
        for (i, j) in [(0, 1), (0, 2), (1, 2)] {
            println!(
                "  [{}, {}] = {:?} at q, table {:?}",
                basis[i].kind.name(),
                basis[j].kind.name(),
                lie_bracket(&basis[i], &basis[j], q.x(), q.y()),
                bracket_coefficients(&spec, i, j)
            );
        }
    }

    let spec = Preset::P1.problem();
    let probe = |_: f64, y: f64| (y * y, 0.0);
    println!("\nP1, y^2 d/dx is not Killing: residual {:.3}", killing_residual(&spec, &probe, &q));

    // flowing both ends along a complete Killing field keeps their distance
    let [_, dilation, _] = killing_basis(&spec);
    let (a, b) = (GroupPoint::new(0.0, 1.0)?, GroupPoint::new(0.8, 1.3)?);
    let before = distance(&spec, &a, &b).distance.value();
    let after = distance(&spec, &flow(&dilation, &a, 0.3, 100)?, &flow(&dilation, &b, 0.3, 100)?).distance.value();
    println!("distance before/after a dilation flow: {before:.12} / {after:.12}");
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
