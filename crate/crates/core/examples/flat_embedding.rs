// The flat model embeds isometrically into a half-plane of Minkowski space:
// Lorentzian distances become Minkowski time separations.
//
// Run: cargo run --example flat_embedding

use aff_lorentz::isometry::{embed_flat, half_plane_margin, minkowski_distance};
use aff_lorentz::{distance, make_problem, GroupPoint, Preset};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let spec = Preset::P3.problem();
    let pairs = [((0.0, 1.0), (1.0, 2.0)), ((0.2, 0.5), (1.5, 3.0)), ((0.0, 1.0), (-1.0, 2.0)), ((1.0, 1.0), (2.0, 1.0))];
    for ((x0, y0), (x1, y1)) in pairs {
        let (q0, q1) = (GroupPoint::new(x0, y0)?, GroupPoint::new(x1, y1)?);
        let (e0, e1) = (embed_flat(&spec, &q0)?, embed_flat(&spec, &q1)?);
        let d = distance(&spec, &q0, &q1).distance.value();
        // the closed form behind the isometry
        let formula = ((x1 - x0) * (y1 - y0) / (y0 * y1)).max(0.0).sqrt();
        println!(
            "{q0} -> {q1}: d = {d:.15}, Minkowski {:.15}, formula {formula:.15}",
            minkowski_distance(&e0, &e1).value()
        );
    }

    let q = GroupPoint::new(1.0, 2.0)?;
    let image = embed_flat(&spec, &q)?;
    println!("\ni{q} = ({}, {}), half-plane margin {}", image.xt, image.yt, half_plane_margin(&spec, &image));

    // other flat structures embed too, with their own half-plane
    let other = make_problem(1.0, 0.3, 1.0, 2.0)?;
    let e = embed_flat(&other, &q)?;
    println!("gamma = {:.4}: i{q} = ({:.6}, {:.6}), margin {:.6}", other.gamma, e.xt, e.yt, half_plane_margin(&other, &e));

    println!("non-flat structure: {}", embed_flat(&Preset::P1.problem(), &q).unwrap_err());
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
