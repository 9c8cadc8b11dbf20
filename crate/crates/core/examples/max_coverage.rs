//! Best placement of a single removal ball, in the plane and in the hyperbolic plane.

use bslemma::{
    generate_configuration, max_ball_coverage, GeneratorFamily, GeneratorSpec, SolverMode,
};

fn main() -> bslemma::Result<()> {
    let square = generate_configuration(&GeneratorSpec::new(
        GeneratorFamily::UniformSquare { dim: 2 },
        300,
        1,
    ))?;
    let all: Vec<usize> = (0..square.len()).collect();
    for r in [0.05, 0.1, 0.2] {
        let exact = max_ball_coverage(&square, &all, r, SolverMode::EuclideanExact2D)?;
        let on_points = max_ball_coverage(&square, &all, r, SolverMode::RestrictedToC)?;
        println!(
            "square, r={r}: exact {} at {:?}, centers restricted to C {}",
            exact.count,
            exact.center.coords().unwrap(),
            on_points.count
        );
    }

    let disk = generate_configuration(&GeneratorSpec::new(
        GeneratorFamily::HyperbolicDisk { radius: 5.0 },
        400,
        1,
    ))?;
    // The candidate grid spans the bounding box of the eligible points, so
    // keep them local: everything within 3r of the first point.
    for r in [0.5, 1.0, 2.0] {
        let near = disk.ball_members(disk.point(0), 3.0 * r)?;
        let grid = max_ball_coverage(
            &disk,
            &near,
            r,
            SolverMode::CandidateGrid { resolution: 48 },
        )?;
        let on_points = max_ball_coverage(&disk, &near, r, SolverMode::RestrictedToC)?;
        println!(
            "hyperbolic disk, r={r}: {} eligible, grid {} restricted {}",
            near.len(),
            grid.count,
            on_points.count
        );
    }
    Ok(())
}
