// Curvature of the three model structures and of an arbitrary matrix,
// computed in closed form and again from the Levi-Civita connection.
//
// Run: cargo run --example curvature

use aff_lorentz::connection::{levi_civita, sectional_curvature_numeric};
use aff_lorentz::{make_problem, Preset};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    for preset in Preset::ALL {
        let spec = preset.problem();
        let numeric = sectional_curvature_numeric(&spec);
        println!(
            "{preset}: K = {:+} ({}), from the connection {:+.3e}",
            spec.curvature, spec.sign, numeric
        );
        assert_eq!(spec.curvature, numeric);
    }

    // a < 0 is normalized by A -> -A, which reverses time
    let spec = make_problem(-2.0, 0.5, 1.0, -1.5)?;
    let conn = levi_civita(&spec);
    println!(
        "\nA = {:?}, time reversed: {}",
        spec.matrix(),
        spec.time_reversed()
    );
    println!("  K = {:.12}, connection gives {:.12}", spec.curvature, sectional_curvature_numeric(&spec));
    println!("  torsion defect {:?}", conn.torsion_defect());

    match make_problem(1.0, 2.0, 2.0, 4.0) {
        Err(e) => println!("\nsingular matrix rejected: {e}"),
        Ok(_) => unreachable!(),
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
