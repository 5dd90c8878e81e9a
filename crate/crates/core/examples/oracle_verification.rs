// Independent numerical checks: RK4 integration of the Hamiltonian system,
// brute-force path maximization, and the full verification table.
//
// Run: cargo run --release --example oracle_verification

use aff_lorentz::oracles::{brute_force_distance, integrate_extremal, SearchBudget};
use aff_lorentz::verify::run_checks;
use aff_lorentz::{exp_map, GroupPoint, Preset};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let spec = Preset::P1.problem();
    let ext = integrate_extremal(&spec, 0.4, 0.9, 10_000)?;
    let end = ext.endpoint();
    let exact = exp_map(&spec, 0.4, 0.9)?;
    println!(
        "RK4 endpoint ({:.12}, {:.12}), closed form {exact}, H drift {:.1e}",
        end.x,
        end.y,
        ext.max_hamiltonian_drift()
    );

    // in the region E the bound keeps growing with the budget
    let target = GroupPoint::new(4.0, 2.0)?;
    for (steps, sweeps, min_height) in [(4, 30, 0.1), (8, 60, 0.05), (16, 120, 0.025)] {
        let b = brute_force_distance(&spec, &target, SearchBudget { steps, sweeps, min_height })?;
        println!("E target, {steps} segments: length >= {:.3}", b.value);
    }

    let q = GroupPoint::new(1.0, 2f64.sqrt())?;
    let b = brute_force_distance(&spec, &q, SearchBudget::default())?;
    println!("interior target {q}: length >= {:.6} (distance pi/4 = {:.6})\n", b.value, std::f64::consts::FRAC_PI_4);

    for preset in Preset::ALL {
        println!("{preset}");
        for c in run_checks(&preset.problem(), false) {
            println!(
                "  {:<42} {:>10.2e} <= {:<7.0e} {}",
                c.name,
                c.residual,
                c.tolerance,
                if c.passed { "PASS" } else { "FAIL" }
            );
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
