use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::generate::{generate_configuration, GeneratorSpec};
use crate::support::{check_delta, point_deficits, SolverMode};

/// A grid of `(δ, s)` cells evaluated on `trials` seeded configurations.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SweepSpec {
    /// Configuration family; its own `seed` is replaced per trial.
    pub generator: GeneratorSpec,
    pub deltas: Vec<f64>,
    pub s_values: Vec<usize>,
    pub trials: usize,
    /// Trial `t` uses generator seed `seed + t`.
    pub seed: u64,
    /// Solver override; defaults to [`SolverMode::best_for`] the generated space.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub solver: Option<SolverMode>,
}

impl SweepSpec {
    pub fn validate(&self) -> Result<()> {
        if self.deltas.is_empty() || self.s_values.is_empty() {
            return Err(Error::EmptyInput(
                "sweep needs at least one delta and one s".into(),
            ));
        }
        for &d in &self.deltas {
            check_delta(d)?;
        }
        if let Some(&s) = self.s_values.iter().find(|&&s| s < 2) {
            return Err(Error::InvalidParameter(format!(
                "s must be at least 2, got {s}"
            )));
        }
        if self.trials == 0 {
            return Err(Error::InvalidParameter("trials must be at least 1".into()));
        }
        Ok(())
    }

    pub fn trial_seed(&self, trial: usize) -> u64 {
        self.seed.wrapping_add(trial as u64)
    }
}

/// One `(δ, s)` cell, averaged over trials.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SweepRecord {
    pub delta: f64,
    pub s: usize,
    pub n: usize,
    /// Mean number of `(δ, s)`-supported points per configuration.
    pub supported_count: f64,
    pub fraction: f64,
    /// `fraction · s`, the empirical constant for this cell.
    pub c_hat_cell: f64,
    pub solver: SolverMode,
    pub seed: u64,
}

pub const SWEEP_HEADER: [&str; 8] = [
    "delta",
    "s",
    "n",
    "supported_count",
    "fraction",
    "c_hat_cell",
    "solver",
    "seed",
];

pub fn bs_sweep(spec: &SweepSpec) -> Result<Vec<SweepRecord>> {
    spec.validate()?;
    let mut deltas = spec.deltas.clone();
    deltas.sort_by(f64::total_cmp);
    deltas.dedup();
    let mut s_values = spec.s_values.clone();
    s_values.sort_unstable();
    s_values.dedup();

    // totals[d][k] = supported points summed over trials
    let mut totals = vec![vec![0usize; s_values.len()]; deltas.len()];
    let mut n = 0;
    let mut solver = None;
    for trial in 0..spec.trials {
        let config = generate_configuration(&spec.generator.with_seed(spec.trial_seed(trial)))?;
        n = config.len();
        let mode = spec
            .solver
            .unwrap_or_else(|| SolverMode::best_for(config.space()));
        solver = Some(mode);
        for (di, &delta) in deltas.iter().enumerate() {
            let deficits = point_deficits(&config, delta, mode)?;
            for (si, &s) in s_values.iter().enumerate() {
                totals[di][si] += deficits.iter().filter(|p| p.deficit >= s).count();
            }
        }
    }
    let solver = solver.expect("at least one trial");

    let trials = spec.trials as f64;
    let mut records = Vec::with_capacity(deltas.len() * s_values.len());
    for (di, &delta) in deltas.iter().enumerate() {
        for (si, &s) in s_values.iter().enumerate() {
            let supported_count = totals[di][si] as f64 / trials;
            let fraction = supported_count / n as f64;
            records.push(SweepRecord {
                delta,
                s,
                n,
                supported_count,
                fraction,
                c_hat_cell: fraction * s as f64,
                solver,
                seed: spec.seed,
            });
        }
    }
    Ok(records)
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CDeltaFit {
    pub delta: f64,
    /// Largest `c_hat_cell` over the `s` cells at this `δ`.
    pub c_hat: f64,
    /// `δ^{-n} log(1/δ)` for the reference dimension `n`.
    pub reference_curve: f64,
}

pub const FIT_HEADER: [&str; 3] = ["delta", "c_hat", "reference_curve"];

pub fn reference_curve(delta: f64, dim: u32) -> f64 {
    delta.powi(-(dim as i32)) * (1.0 / delta).ln()
}

/// Empirical `c(δ)`: the max of `c_hat_cell` over `s` at each `δ`, ascending in `δ`.
pub fn fit_c_delta(records: &[SweepRecord], reference_dim: u32) -> Result<Vec<CDeltaFit>> {
    if records.is_empty() {
        return Err(Error::EmptyInput("no sweep records to fit".into()));
    }
    let mut fits: Vec<CDeltaFit> = Vec::new();
    let mut sorted: Vec<&SweepRecord> = records.iter().collect();
    sorted.sort_by(|a, b| a.delta.total_cmp(&b.delta));
    for r in sorted {
        match fits.last_mut() {
            Some(f) if f.delta == r.delta => f.c_hat = f.c_hat.max(r.c_hat_cell),
            _ => fits.push(CDeltaFit {
                delta: r.delta,
                c_hat: r.c_hat_cell,
                reference_curve: reference_curve(r.delta, reference_dim),
            }),
        }
    }
    Ok(fits)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::GeneratorFamily;

    fn record(delta: f64, s: usize, fraction: f64) -> SweepRecord {
        SweepRecord {
            delta,
            s,
            n: 100,
            supported_count: fraction * 100.0,
            fraction,
            c_hat_cell: fraction * s as f64,
            solver: SolverMode::EuclideanExact2D,
            seed: 0,
        }
    }

    #[test]
    fn fit_single_record() {
        let fit = fit_c_delta(&[record(0.25, 10, 0.1)], 2).unwrap();
        assert_eq!(fit.len(), 1);
        assert!((fit[0].c_hat - 1.0).abs() < 1e-15);
        assert!((fit[0].reference_curve - 16.0 * 4f64.ln()).abs() < 1e-12);
    }

    #[test]
    fn fit_takes_max_over_s_and_handles_zero() {
        let recs = [
            record(0.5, 2, 0.0),
            record(0.5, 4, 0.0),
            record(0.25, 2, 0.3),
            record(0.25, 8, 0.1),
        ];
        let fit = fit_c_delta(&recs, 2).unwrap();
        assert_eq!(fit[0].delta, 0.25);
        assert!((fit[0].c_hat - 0.8).abs() < 1e-12);
        assert_eq!(fit[1].c_hat, 0.0);
        assert!(fit_c_delta(&[], 2).is_err());
    }

    #[test]
    fn oversized_s_gives_zero() {
        let spec = SweepSpec {
            generator: GeneratorSpec::new(GeneratorFamily::UniformSquare { dim: 2 }, 20, 0),
            deltas: vec![0.25, 0.5],
            s_values: vec![21, 40],
            trials: 3,
            seed: 11,
            solver: None,
        };
        let recs = bs_sweep(&spec).unwrap();
        assert_eq!(recs.len(), 4);
        assert!(recs
            .iter()
            .all(|r| r.supported_count == 0.0 && r.c_hat_cell == 0.0));
        assert!(recs
            .iter()
            .all(|r| r.solver == SolverMode::EuclideanExact2D));
    }

    #[test]
    fn equilateral_cells() {
        let spec = SweepSpec {
            generator: GeneratorSpec::new(GeneratorFamily::Equilateral, 12, 0),
            deltas: vec![0.05],
            s_values: vec![11],
            trials: 2,
            seed: 0,
            solver: None,
        };
        let recs = bs_sweep(&spec).unwrap();
        assert_eq!(recs[0].fraction, 1.0);
        assert_eq!(recs[0].c_hat_cell, 11.0);
        assert_eq!(recs[0].solver, SolverMode::RestrictedToC);
    }

    #[test]
    fn sweep_validation() {
        let mut spec = SweepSpec {
            generator: GeneratorSpec::new(GeneratorFamily::Equilateral, 4, 0),
            deltas: vec![1.0],
            s_values: vec![2],
            trials: 1,
            seed: 0,
            solver: None,
        };
        assert!(bs_sweep(&spec).is_err());
        spec.deltas = vec![0.5];
        spec.s_values = vec![1];
        assert!(bs_sweep(&spec).is_err());
        spec.s_values = vec![2];
        spec.trials = 0;
        assert!(bs_sweep(&spec).is_err());
    }
}
