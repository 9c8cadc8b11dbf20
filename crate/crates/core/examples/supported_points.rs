//! Classify the points of a random planar configuration as (δ, s)-supported.
//!
//! ```text
//! cargo run --example supported_points -- 0.25 6
//! ```

use bslemma::{
    generate_configuration, supported_points, GeneratorFamily, GeneratorSpec, SolverMode,
    SupportParams,
};

fn main() -> bslemma::Result<()> {
    let mut args = std::env::args().skip(1);
    let delta: f64 = args.next().map_or(0.25, |a| a.parse().expect("delta"));
    let s: usize = args.next().map_or(6, |a| a.parse().expect("s"));

    let config = generate_configuration(&GeneratorSpec::new(
        GeneratorFamily::UniformSquare { dim: 2 },
        200,
        7,
    ))?;
    let params = SupportParams::new(delta, s)?;

    for mode in [
        SolverMode::EuclideanExact2D,
        SolverMode::CandidateGrid { resolution: 32 },
        SolverMode::RestrictedToC,
    ] {
        let report = supported_points(&config, params, mode)?;
        println!(
            "{:<22} {:?}: {} of {} points are ({delta}, {s})-supported",
            mode.to_string(),
            report.exactness,
            report.supported_indices().len(),
            config.len()
        );
    }

    let report = supported_points(&config, params, SolverMode::EuclideanExact2D)?;
    println!("\nindex  rho       outer  deficit");
    for p in report.points.iter().take(8) {
        println!(
            "{:>5}  {:.5}  {:>5}  {:>7}",
            p.index, p.isolation_radius, p.outer_count, p.deficit
        );
    }
    Ok(())
}
