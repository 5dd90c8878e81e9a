// Lorentzian spheres around the identity: hyperbola arcs, the frontier ray
// at the critical radius, and empty spheres beyond it. Writes an SVG of the
// anti-de Sitter spheres to the system temp directory.
//
// Run: cargo run --example spheres

use std::f64::consts::PI;

use aff_lorentz::plot::{render, Layer};
use aff_lorentz::synthesis::distance_from_identity;
use aff_lorentz::{sphere, Preset};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    for preset in Preset::ALL {
        let spec = preset.problem();
        for radius in [0.2, 0.5, 1.5] {
            let arc = match sphere(&spec, radius, 64) {
                Ok(arc) => arc,
                Err(e) => {
                    println!("{preset} R = {radius}: {e}");
                    continue;
                }
            };
            let worst = arc
                .points
                .iter()
                .map(|q| (distance_from_identity(&spec, q).distance.value() - radius).abs())
                .fold(0.0, f64::max);
            println!(
                "{preset} R = {radius}: {} samples on a {}, hyperbola defect {:.1e}, |d - R| <= {:.1e}",
                arc.points.len(),
                arc.shape.name(),
                arc.max_residual(&spec),
                worst
            );
        }
    }

    let p1 = Preset::P1.problem();
    let ray = sphere(&p1, PI, 3)?;
    println!("\nP1 R = pi: {} through {:?}", ray.shape.name(), ray.points.iter().map(|q| q.to_string()).collect::<Vec<_>>());
    println!("P1 R = 3.5: {}", sphere(&p1, 3.5, 3).unwrap_err());

    let arcs: Vec<_> = [0.5, 1.0, 2.0, 3.0].iter().map(|&r| sphere(&p1, r, 200)).collect::<Result<_, _>>()?;
    let layers: Vec<Layer> = arcs
        .iter()
        .map(|a| Layer::Polyline { points: &a.points, color: "#2e8b57" })
        .collect();
    let path = std::env::temp_dir().join("aff_lorentz_spheres.svg");
    std::fs::write(&path, render(&p1, "spheres in P1", &layers))?;
    println!("\nwrote {}", path.display());
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
