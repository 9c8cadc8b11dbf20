//! Well-separated witness sets: every center is (1/20, |C| - 1)-supported,
//! so no bound of the form c·|C|/s can hold once |C| is large.

use bslemma::{
    construct_witness, generate_configuration, GeneratorFamily, GeneratorSpec, MetricSpace,
    PointConfiguration,
};

fn main() -> bslemma::Result<()> {
    for n in [10, 100, 1000] {
        let a = PointConfiguration::all_of(MetricSpace::equilateral(n))?;
        let w = construct_witness(&a)?;
        println!(
            "equilateral({n}): |C| = {}, s = {}, verified = {}",
            w.centers.len(),
            w.s_achieved,
            w.verified
        );
    }

    for radius in [4.0, 6.0, 8.0] {
        let a = generate_configuration(&GeneratorSpec::new(
            GeneratorFamily::HyperbolicCircle { radius },
            2000,
            0,
        ))?;
        let w = construct_witness(&a)?;
        println!(
            "hyperbolic circle R={radius}: diameter {:.3}, |C| = {}, min separation {:.3} >= {:.3}, verified = {}",
            w.diameter,
            w.centers.len(),
            w.min_separation,
            w.separation_bound,
            w.verified
        );
    }
    Ok(())
}
