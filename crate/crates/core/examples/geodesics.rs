// Timelike geodesics in closed form, their maximal domains, lightlike
// geodesics and geodesic completeness.
//
// Run: cargo run --example geodesics

use std::f64::consts::{FRAC_PI_4, LN_2};

use aff_lorentz::{completeness_report, domain_bounds, exp_map, lightlike_curve, Geodesic, NullDirection, Preset};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let p1 = Preset::P1.problem();
    println!("P1 exp(0, pi/4) = {}", exp_map(&p1, 0.0, FRAC_PI_4)?);
    println!("P2 exp(0, ln 2) = {}", exp_map(&Preset::P2.problem(), 0.0, LN_2)?);
    let psi0 = -(2f64.sqrt()).ln();
    println!(
        "P3 exp(-ln sqrt2, sqrt2 - 1/sqrt2) = {}",
        exp_map(&Preset::P3.problem(), psi0, 2f64.sqrt() - 1.0 / 2f64.sqrt())?
    );

    println!("\nmaximal domains of the geodesic with psi0 = 0.5:");
    for preset in Preset::ALL {
        let (lo, hi) = domain_bounds(&preset.problem(), 0.5);
        println!("  {preset}: ({lo:.6}, {hi:.6})");
    }

    // anti-de Sitter geodesics leave every compact set before t = pi/Delta
    let geo = Geodesic::timelike(&p1, 0.0);
    println!("\nP1, psi0 = 0, approaching t_max = {:.6}:", geo.t_max());
    for k in [1, 4, 8, 16] {
        let t = geo.t_max() * (1.0 - 0.5f64.powi(k));
        let (q, psi) = geo.state(t)?;
        println!("  t = {t:.8}  q = ({:.4e}, {:.4e})  psi = {:.4}", q.x(), q.y(), psi.unwrap_or(f64::NAN));
    }
    match geo.point(2.0) {
        Err(e) => println!("  beyond the domain: {e}"),
        Ok(_) => unreachable!(),
    }

    println!("\nlightlike geodesics of P1 at t = ln 2:");
    for dir in [NullDirection::Plus, NullDirection::Minus] {
        println!("  {dir:?}: {}", lightlike_curve(&p1, dir, LN_2));
    }

    println!("\ncompleteness (future, past):");
    for preset in Preset::ALL {
        let c = completeness_report(&preset.problem())?;
        println!("  {preset}: ({}, {})", c.future_complete, c.past_complete);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
