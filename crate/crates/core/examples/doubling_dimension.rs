//! Sampled doubling ratios and the dimension they suggest.

use bslemma::{
    estimate_doubling, generate_configuration, GeneratorFamily, GeneratorSpec, MetricSpace,
    PointConfiguration,
};

fn main() -> bslemma::Result<()> {
    let families = [
        (
            "64-point line",
            GeneratorFamily::IntegerGrid {
                dim: 1,
                width: None,
            },
            64,
        ),
        (
            "32x32 grid",
            GeneratorFamily::IntegerGrid {
                dim: 2,
                width: Some(32),
            },
            1024,
        ),
        (
            "uniform square",
            GeneratorFamily::UniformSquare { dim: 2 },
            1000,
        ),
        (
            "hyperbolic disk R=6",
            GeneratorFamily::HyperbolicDisk { radius: 6.0 },
            400,
        ),
        (
            "hyperbolic disk R=8",
            GeneratorFamily::HyperbolicDisk { radius: 8.0 },
            2800,
        ),
    ];
    for (name, family, count) in families {
        let c = generate_configuration(&GeneratorSpec::new(family, count, 0))?;
        let e = estimate_doubling(&c, 200, 0)?;
        println!(
            "{name:<20} D_hat {:>6.2}  dim_hat {:>5.2}",
            e.d_hat, e.dim_hat
        );
    }
    let e = estimate_doubling(
        &PointConfiguration::all_of(MetricSpace::equilateral(64))?,
        50,
        0,
    )?;
    println!(
        "{:<20} D_hat {:>6.2}  dim_hat {:>5.2}",
        "equilateral(64)", e.d_hat, e.dim_hat
    );
    Ok(())
}
