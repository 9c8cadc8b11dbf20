//! Non-doubling witnesses.
//!
//! Given a finite set `A` of diameter `d`, cover it by the balls of radius
//! `d/10` centered at its own points, keep a disjoint subfamily whose 5-fold
//! dilates still cover, and take `C` to be the kept centers. Then
//!
//! * kept centers are pairwise at least `d/5` apart, so a ball of radius
//!   `ρ/20 < d/10` anywhere in the space holds at most one of them;
//! * every isolation radius `ρ` satisfies `ρ <= d < 2d`, and
//!   `B(x, ρ/(1/20)) ⊇ B(x, 4d)` holds every center.
//!
//! So each center is `(1/20, |C| − 1)`-supported, with no optimization needed.
//! The check in [`verify_witness_analytic`] is exactly this chain.

use serde::{Deserialize, Serialize};

use crate::covering::{vitali_disjoint_subfamily, BallFamily};
use crate::error::{Error, Result};
use crate::metric::PointConfiguration;
use crate::support::isolation_radius;

/// The fixed support parameter of the construction.
pub const WITNESS_DELTA: f64 = 1.0 / 20.0;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct WitnessResult {
    /// Indices into `A` of the selected centers.
    pub centers: Vec<usize>,
    pub delta: f64,
    pub s_achieved: usize,
    /// Diameter of `A`.
    pub diameter: f64,
    /// Radius of the covering balls, `diameter / 10`.
    pub ball_radius: f64,
    pub min_separation: f64,
    pub max_isolation_radius: f64,
    /// Required lower bound on `min_separation`: `diameter / 5`.
    pub separation_bound: f64,
    /// Strict upper bound on every isolation radius: `2 · diameter`.
    pub radius_bound: f64,
    pub verified: bool,
}

pub fn construct_witness(a: &PointConfiguration) -> Result<WitnessResult> {
    if a.len() < 2 {
        return Err(Error::TooFewPoints(a.len()));
    }
    let diameter = a.diameter();
    let ball_radius = diameter / 10.0;
    let family = BallFamily::around_all(a, ball_radius)?;
    let centers = vitali_disjoint_subfamily(a, &family)?;
    if centers.len() < 2 {
        return Err(Error::DegenerateWitness(centers.len()));
    }
    let c = a.subset(&centers)?;
    let (min_separation, max_isolation_radius) = separation_and_radius(&c)?;
    let mut result = WitnessResult {
        s_achieved: centers.len() - 1,
        centers,
        delta: WITNESS_DELTA,
        diameter,
        ball_radius,
        min_separation,
        max_isolation_radius,
        separation_bound: diameter / 5.0,
        radius_bound: 2.0 * diameter,
        verified: false,
    };
    result.verified = verify_witness_analytic(a, &result);
    Ok(result)
}

fn separation_and_radius(c: &PointConfiguration) -> Result<(f64, f64)> {
    let mut max_rho: f64 = 0.0;
    for w in 0..c.len() {
        max_rho = max_rho.max(isolation_radius(c, w)?);
    }
    Ok((c.min_pairwise_distance(), max_rho))
}

/// Recomputes separation and isolation radii of the centers named in `result`
/// directly from the points of `a`, and checks
/// `min separation >= d/5` and `ρ < 2d` for every center.
pub fn verify_witness_analytic(a: &PointConfiguration, result: &WitnessResult) -> bool {
    if result.centers.len() < 2 || result.centers.iter().any(|&i| i >= a.len()) {
        return false;
    }
    let Ok(c) = a.subset(&result.centers) else {
        return false;
    };
    let Ok((sep, max_rho)) = separation_and_radius(&c) else {
        return false;
    };
    let d = result.diameter;
    sep >= d / 5.0 && max_rho < 2.0 * d
}

/// The witness centers as their own configuration.
pub fn witness_configuration(
    a: &PointConfiguration,
    result: &WitnessResult,
) -> Result<PointConfiguration> {
    a.subset(&result.centers)
}
