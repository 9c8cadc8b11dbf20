//! Supported sets under d^ε at δ coincide with those under d at δ^(1/ε).

use bslemma::experiments::check_snowflake_transfer;
use bslemma::{generate_configuration, GeneratorFamily, GeneratorSpec, SolverMode};

fn main() -> bslemma::Result<()> {
    let c = generate_configuration(&GeneratorSpec::new(
        GeneratorFamily::UniformSquare { dim: 2 },
        60,
        3,
    ))?;
    for epsilon in [0.25, 0.5, 0.75] {
        for delta in [0.1, 0.3, 0.6] {
            let r = check_snowflake_transfer(&c, epsilon, delta, SolverMode::EuclideanExact2D)?;
            println!(
                "eps={epsilon} delta={delta} base delta={:.3e}: equal={} supported at s=4: {}",
                r.base_delta,
                r.equal,
                r.snowflake_supported(4).len()
            );
        }
    }
    Ok(())
}
