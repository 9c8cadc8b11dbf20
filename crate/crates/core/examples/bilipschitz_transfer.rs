//! A bi-Lipschitz map with constant L sends (δ, s)-supported points to
//! (δ/L², s)-supported points.

use bslemma::experiments::{check_bilipschitz_transfer, TransferMap};
use bslemma::{generate_configuration, GeneratorFamily, GeneratorSpec, SolverMode};

fn main() -> bslemma::Result<()> {
    let c = generate_configuration(&GeneratorSpec::new(
        GeneratorFamily::UniformSquare { dim: 2 },
        30,
        11,
    ))?;
    let maps = [
        ("identity", TransferMap::identity(2)),
        ("scale by 3", TransferMap::scaling(2, 3.0)),
        (
            "stretch x by 2",
            TransferMap::new(vec![vec![2.0, 0.0], vec![0.0, 1.0]], vec![0.0; 2], 2.0)?,
        ),
    ];
    for (name, map) in maps {
        let r = check_bilipschitz_transfer(&c, &map, 0.4, 3, SolverMode::EuclideanExact2D)?;
        println!(
            "{name:<15} L={} image delta={:.4}: {} source-supported, {} image-supported, holds={}",
            r.lipschitz,
            r.image_delta,
            r.source_supported.len(),
            r.image_supported.len(),
            r.holds
        );
    }
    Ok(())
}
