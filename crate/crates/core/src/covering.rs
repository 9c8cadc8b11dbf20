//! Greedy nets, Vitali-type disjoint subfamilies, and doubling estimates.
//!
//! Nets use closed coverage (`d <= r`), unlike the open balls of the support
//! computations; the covering arguments here do not depend on the boundary.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::metric::PointConfiguration;

/// Balls of one common radius centered at points of a configuration.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BallFamily {
    pub centers: Vec<usize>,
    pub radius: f64,
}

impl BallFamily {
    pub fn new(centers: Vec<usize>, radius: f64) -> Result<Self> {
        if centers.is_empty() {
            return Err(Error::EmptyInput("ball family has no balls".into()));
        }
        if radius.is_nan() || radius <= 0.0 {
            return Err(Error::InvalidParameter(format!(
                "ball radius must be positive, got {radius}"
            )));
        }
        Ok(Self { centers, radius })
    }

    /// One ball of radius `radius` around every point of the configuration.
    pub fn around_all(config: &PointConfiguration, radius: f64) -> Result<Self> {
        Self::new((0..config.len()).collect(), radius)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct NetResult {
    pub net: Vec<usize>,
    /// Every configuration point lies within this (closed) distance of the net.
    pub covering_radius: f64,
    /// Net points are pairwise strictly farther apart than this.
    pub separation: f64,
}

/// Greedy `r`-net in index order: a point joins iff no earlier net point is
/// within distance `<= r`.
pub fn greedy_net(config: &PointConfiguration, r: f64) -> Result<NetResult> {
    if r.is_nan() || r <= 0.0 {
        return Err(Error::InvalidParameter(format!(
            "net radius must be positive, got {r}"
        )));
    }
    let all: Vec<usize> = (0..config.len()).collect();
    Ok(NetResult {
        net: greedy_net_of(config, &all, r),
        covering_radius: r,
        separation: r,
    })
}

/// Greedy net of a subset, scanned in the subset's order.
pub fn greedy_net_of(config: &PointConfiguration, subset: &[usize], r: f64) -> Vec<usize> {
    let mut net: Vec<usize> = Vec::new();
    for &i in subset {
        if net.iter().all(|&j| config.distance(i, j) > r) {
            net.push(i);
        }
    }
    net
}

/// Disjoint subfamily whose 5-fold dilates cover every ball of the family.
///
/// Centers are scanned in the family's order; a ball is kept iff its center is
/// at distance `>= 2r` from every kept center. A skipped center lies within
/// `< 2r` of a kept one, so its `r`-ball sits inside that ball's `3r`-dilate.
pub fn vitali_disjoint_subfamily(
    config: &PointConfiguration,
    family: &BallFamily,
) -> Result<Vec<usize>> {
    let family = BallFamily::new(family.centers.clone(), family.radius)?;
    if let Some(&bad) = family.centers.iter().find(|&&c| c >= config.len()) {
        return Err(Error::InvalidParameter(format!(
            "ball center index {bad} out of range for {} points",
            config.len()
        )));
    }
    let gap = 2.0 * family.radius;
    let mut kept: Vec<usize> = Vec::new();
    for &c in &family.centers {
        if kept.iter().all(|&k| config.distance(c, k) >= gap) {
            kept.push(c);
        }
    }
    Ok(kept)
}

/// Indices within closed distance `radius` of `C[center]`.
fn closed_ball(config: &PointConfiguration, center: usize, radius: f64) -> Vec<usize> {
    (0..config.len())
        .filter(|&i| config.distance(center, i) <= radius)
        .collect()
}

/// Size of the greedy `R/2`-net of `C ∩ B̄(C[center], R)`: an upper bound on
/// the number of `R/2`-balls needed to cover that piece of the configuration.
pub fn doubling_count(config: &PointConfiguration, center: usize, radius: f64) -> Result<usize> {
    if radius.is_nan() || radius <= 0.0 {
        return Err(Error::InvalidParameter(format!(
            "radius must be positive, got {radius}"
        )));
    }
    if center >= config.len() {
        return Err(Error::InvalidParameter(format!(
            "center index {center} out of range"
        )));
    }
    let ball = closed_ball(config, center, radius);
    Ok(greedy_net_of(config, &ball, radius / 2.0).len())
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct DoublingSample {
    pub center: usize,
    pub radius: f64,
    /// Greedy `R/2`-net size of the sampled ball ([`doubling_count`]).
    pub cover_count: usize,
    /// Greedy `R`-net size of the same ball.
    pub coarse_count: usize,
    /// `cover_count / coarse_count`: growth of the covering number when the
    /// scale halves.
    pub ratio: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct DoublingEstimate {
    pub samples: Vec<DoublingSample>,
    /// Largest sampled ratio.
    pub d_hat: f64,
    /// `log2(d_hat)`.
    pub dim_hat: f64,
    /// Largest raw `cover_count` seen.
    pub max_cover_count: usize,
}

/// Samples balls (uniform center, log-uniform radius between the minimum
/// pairwise distance and the diameter) and reports the largest growth of the
/// greedy covering number from scale `R` to scale `R/2` within a sampled ball.
///
/// The raw half-scale count of a ball overstates the doubling behaviour of
/// regular sets: a segment of length `2R` already takes 3 closed `R/2`-balls,
/// a disk 7. Dividing by the same ball's `R`-net size cancels that fixed
/// overhead, so `log2(d_hat)` lands near the dimension for lattices while an
/// equilateral space still gives `d_hat = N` at `R = 1`.
pub fn estimate_doubling(
    config: &PointConfiguration,
    sample_count: usize,
    seed: u64,
) -> Result<DoublingEstimate> {
    if sample_count == 0 {
        return Err(Error::InvalidParameter(
            "sample_count must be at least 1".into(),
        ));
    }
    let lo = config.min_pairwise_distance();
    let hi = config.diameter();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let draws: Vec<(usize, f64)> = (0..sample_count)
        .map(|_| {
            let center = rng.gen_range(0..config.len());
            let u: f64 = rng.gen();
            (center, lo * (hi / lo).powf(u))
        })
        .collect();

    let samples: Vec<DoublingSample> = draws
        .into_iter()
        .map(|(center, radius)| {
            let ball = closed_ball(config, center, radius);
            let cover_count = greedy_net_of(config, &ball, radius / 2.0).len();
            let coarse_count = greedy_net_of(config, &ball, radius).len();
            DoublingSample {
                center,
                radius,
                cover_count,
                coarse_count,
                ratio: cover_count as f64 / coarse_count as f64,
            }
        })
        .collect();

    let d_hat = samples.iter().map(|s| s.ratio).fold(1.0, f64::max);
    let max_cover_count = samples.iter().map(|s| s.cover_count).max().unwrap_or(0);
    Ok(DoublingEstimate {
        samples,
        d_hat,
        dim_hat: d_hat.log2(),
        max_cover_count,
    })
}

/// Convenience for tests and examples: does every point lie within `r` of the net?
pub fn is_covering(config: &PointConfiguration, net: &[usize], r: f64) -> bool {
    (0..config.len()).all(|i| net.iter().any(|&j| config.distance(i, j) <= r))
}

/// Are all pairs of net points strictly farther apart than `r`?
pub fn is_separated(config: &PointConfiguration, net: &[usize], r: f64) -> bool {
    net.iter()
        .enumerate()
        .all(|(a, &i)| net[a + 1..].iter().all(|&j| config.distance(i, j) > r))
}

/// Center of the ball whose dilate contains the given ball, if any.
pub fn dilate_container(
    config: &PointConfiguration,
    kept: &[usize],
    center: usize,
    radius: f64,
    factor: f64,
) -> Option<usize> {
    // B(c, r) ⊂ B(k, factor·r) whenever d(c, k) + r <= factor·r.
    kept.iter()
        .copied()
        .find(|&k| config.distance(center, k) + radius <= factor * radius)
}
