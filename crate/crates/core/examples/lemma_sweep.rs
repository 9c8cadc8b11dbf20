//! Supported fractions over a (δ, s) grid, and the empirical constant c(δ)
//! next to the reference curve δ^-2 log(1/δ). Writes both tables as CSV.

use std::io;

use bslemma::experiments::{bs_sweep, fit_c_delta, SweepSpec, FIT_HEADER, SWEEP_HEADER};
use bslemma::records::{write_records_to, Format};
use bslemma::{GeneratorFamily, GeneratorSpec};

fn main() -> bslemma::Result<()> {
    let spec = SweepSpec {
        generator: GeneratorSpec::new(GeneratorFamily::UniformSquare { dim: 2 }, 500, 0),
        deltas: vec![0.5, 0.25, 0.125, 0.0625],
        s_values: vec![2, 4, 8, 16, 32],
        trials: 20,
        seed: 1,
        solver: None,
    };
    let records = bs_sweep(&spec)?;
    write_records_to(io::stdout().lock(), &records, &SWEEP_HEADER, Format::Csv)?;
    println!();
    let fits = fit_c_delta(&records, 2)?;
    write_records_to(io::stdout().lock(), &fits, &FIT_HEADER, Format::Csv)?;
    Ok(())
}
