//! Transfer laws for supported points.
//!
//! * Snowflake: with `ρ_ε = ρ^ε`, the balls `B^ε(w, ρ_ε/δ)` and
//!   `B(w, ρ/δ^{1/ε})` coincide, as do `B^ε(p, δρ_ε)` and `B(p, δ^{1/ε}ρ)`.
//!   Supported sets under `(d^ε, δ)` and `(d, δ^{1/ε})` are therefore equal.
//! * Bi-Lipschitz: if `f` distorts distances by at most `L`, then
//!   `ρ/L <= ρ' <= Lρ`, and every `(δ, s)`-supported point maps to a
//!   `(δ/L², s)`-supported point of the image. Only this inclusion is checked.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::metric::{MetricSpace, Point, PointConfiguration, DEFAULT_TOLERANCE};
use crate::support::{check_delta, isolation_radii, point_deficits, SolverMode};

/// A point that falls on different sides of two balls that should coincide,
/// while lying within tolerance of the boundary.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BoundaryHit {
    pub center: usize,
    pub point: usize,
    /// `d(center, point) / radius − 1` in the base metric.
    pub relative_gap: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SnowflakeTransferReport {
    pub equal: bool,
    pub epsilon: f64,
    pub delta: f64,
    /// `δ^{1/ε}`.
    pub base_delta: f64,
    /// Points where `ρ` under `d^ε` differs from `ρ^ε` by more than a few ulps.
    pub radius_mismatches: Vec<usize>,
    /// Centers whose outer balls disagree away from any boundary.
    pub outer_mismatches: Vec<usize>,
    pub boundary_hits: Vec<BoundaryHit>,
    /// Points whose deficits differ between the two sides.
    pub deficit_mismatches: Vec<usize>,
    pub snowflake_deficits: Vec<usize>,
    pub base_deficits: Vec<usize>,
}

impl SnowflakeTransferReport {
    /// Supported set on the snowflake side at `s`.
    pub fn snowflake_supported(&self, s: usize) -> Vec<usize> {
        at_least(&self.snowflake_deficits, s)
    }

    /// Supported set on the base side at `s`.
    pub fn base_supported(&self, s: usize) -> Vec<usize> {
        at_least(&self.base_deficits, s)
    }
}

fn at_least(deficits: &[usize], s: usize) -> Vec<usize> {
    deficits
        .iter()
        .enumerate()
        .filter(|(_, &d)| d >= s)
        .map(|(i, _)| i)
        .collect()
}

fn close(a: f64, b: f64) -> bool {
    (a - b).abs() <= 8.0 * f64::EPSILON * a.abs().max(b.abs())
}

/// Compares `config` viewed under `d^ε` at `δ` with `config` under `d` at `δ^{1/ε}`.
pub fn check_snowflake_transfer(
    config: &PointConfiguration,
    epsilon: f64,
    delta: f64,
    mode: SolverMode,
) -> Result<SnowflakeTransferReport> {
    check_delta(delta)?;
    let snow = config.with_space(MetricSpace::snowflake(config.space().clone(), epsilon)?)?;
    let base_delta = delta.powf(1.0 / epsilon);
    check_delta(base_delta)?;

    let rho_base = isolation_radii(config);
    let rho_snow = isolation_radii(&snow);
    let radius_mismatches: Vec<usize> = (0..config.len())
        .filter(|&w| !close(rho_snow[w], rho_base[w].powf(epsilon)))
        .collect();

    let mut outer_mismatches = Vec::new();
    let mut boundary_hits = Vec::new();
    for w in 0..config.len() {
        let r_snow = rho_snow[w] / delta;
        let r_base = rho_base[w] / base_delta;
        let mut clean = true;
        for i in 0..config.len() {
            let in_snow = snow.distance(w, i) < r_snow;
            let d = config.distance(w, i);
            if in_snow != (d < r_base) {
                let gap = d / r_base - 1.0;
                if gap.abs() <= DEFAULT_TOLERANCE {
                    boundary_hits.push(BoundaryHit {
                        center: w,
                        point: i,
                        relative_gap: gap,
                    });
                } else {
                    clean = false;
                }
            }
        }
        if !clean {
            outer_mismatches.push(w);
        }
    }

    let snowflake_deficits: Vec<usize> = point_deficits(&snow, delta, mode)?
        .into_iter()
        .map(|p| p.deficit)
        .collect();
    let base_deficits: Vec<usize> = point_deficits(config, base_delta, mode)?
        .into_iter()
        .map(|p| p.deficit)
        .collect();
    let deficit_mismatches: Vec<usize> = (0..config.len())
        .filter(|&w| snowflake_deficits[w] != base_deficits[w])
        .collect();

    let equal = radius_mismatches.is_empty()
        && outer_mismatches.is_empty()
        && deficit_mismatches.is_empty();
    Ok(SnowflakeTransferReport {
        equal,
        epsilon,
        delta,
        base_delta,
        radius_mismatches,
        outer_mismatches,
        boundary_hits,
        deficit_mismatches,
        snowflake_deficits,
        base_deficits,
    })
}

/// Affine map `x ↦ Ax + b` on `R^n` with a declared bi-Lipschitz constant.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TransferMap {
    /// Row-major `n × n` matrix.
    pub matrix: Vec<Vec<f64>>,
    pub offset: Vec<f64>,
    pub lipschitz: f64,
}

impl TransferMap {
    pub fn new(matrix: Vec<Vec<f64>>, offset: Vec<f64>, lipschitz: f64) -> Result<Self> {
        let n = matrix.len();
        if n == 0 || matrix.iter().any(|row| row.len() != n) || offset.len() != n {
            return Err(Error::InvalidMap(format!(
                "matrix must be square with an offset of matching length (got {n} rows, offset {})",
                offset.len()
            )));
        }
        if !(lipschitz >= 1.0 && lipschitz.is_finite()) {
            return Err(Error::InvalidMap(format!(
                "Lipschitz constant must be a finite real >= 1, got {lipschitz}"
            )));
        }
        Ok(Self {
            matrix,
            offset,
            lipschitz,
        })
    }

    pub fn identity(dim: usize) -> Self {
        Self::scaling(dim, 1.0)
    }

    /// `x ↦ c·x`, with `L = max(c, 1/c)`.
    pub fn scaling(dim: usize, c: f64) -> Self {
        let matrix = (0..dim)
            .map(|i| (0..dim).map(|j| if i == j { c } else { 0.0 }).collect())
            .collect();
        Self {
            matrix,
            offset: vec![0.0; dim],
            lipschitz: c.max(1.0 / c),
        }
    }

    pub fn dim(&self) -> usize {
        self.matrix.len()
    }

    pub fn apply(&self, x: &[f64]) -> Vec<f64> {
        self.matrix
            .iter()
            .zip(&self.offset)
            .map(|(row, b)| row.iter().zip(x).map(|(a, xi)| a * xi).sum::<f64>() + b)
            .collect()
    }

    /// The image configuration, after checking `d/L <= d' <= L·d` on every
    /// pair (with relative slack [`DEFAULT_TOLERANCE`]).
    pub fn image(&self, config: &PointConfiguration) -> Result<PointConfiguration> {
        let n = self.dim();
        if config.space() != &MetricSpace::euclidean(n) {
            return Err(Error::InvalidMap(format!(
                "map acts on euclidean({n}), configuration lives in {}",
                config.space().label()
            )));
        }
        let points: Vec<Point> = config
            .points()
            .iter()
            .map(|p| Point::Coords(self.apply(p.coords().expect("euclidean coordinates"))))
            .collect();
        let space = MetricSpace::euclidean(n);
        let l = self.lipschitz;
        let slack = 1.0 + DEFAULT_TOLERANCE;
        for i in 0..config.len() {
            for j in (i + 1)..config.len() {
                let d = config.distance(i, j);
                let di = space.distance(&points[i], &points[j])?;
                if di > l * d * slack || di * l * slack < d {
                    return Err(Error::InvalidMap(format!(
                        "declared L = {l} violated on pair ({i}, {j}): d = {d}, d' = {di}"
                    )));
                }
            }
        }
        PointConfiguration::new(space, points)
            .map_err(|e| Error::InvalidMap(format!("image is not a valid configuration: {e}")))
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BiLipschitzReport {
    pub holds: bool,
    pub lipschitz: f64,
    pub delta: f64,
    /// `δ / L²`.
    pub image_delta: f64,
    pub s: usize,
    /// Points where `ρ/L <= ρ' <= Lρ` fails.
    pub radius_violations: Vec<usize>,
    pub source_supported: Vec<usize>,
    pub image_supported: Vec<usize>,
    /// Source-supported points whose images are not supported at `δ/L²`.
    pub violations: Vec<usize>,
}

pub fn check_bilipschitz_transfer(
    config: &PointConfiguration,
    map: &TransferMap,
    delta: f64,
    s: usize,
    mode: SolverMode,
) -> Result<BiLipschitzReport> {
    check_delta(delta)?;
    if s < 2 {
        return Err(Error::InvalidParameter(format!(
            "s must be at least 2, got {s}"
        )));
    }
    let image = map.image(config)?;
    let l = map.lipschitz;
    let image_delta = delta / (l * l);

    let slack = 1.0 + DEFAULT_TOLERANCE;
    let rho = isolation_radii(config);
    let rho_img = isolation_radii(&image);
    let radius_violations = (0..config.len())
        .filter(|&w| rho_img[w] * l * slack < rho[w] || rho_img[w] > l * rho[w] * slack)
        .collect::<Vec<_>>();

    let source_supported = at_least(
        &point_deficits(config, delta, mode)?
            .into_iter()
            .map(|p| p.deficit)
            .collect::<Vec<_>>(),
        s,
    );
    let image_supported = at_least(
        &point_deficits(&image, image_delta, mode)?
            .into_iter()
            .map(|p| p.deficit)
            .collect::<Vec<_>>(),
        s,
    );
    let violations: Vec<usize> = source_supported
        .iter()
        .copied()
        .filter(|w| image_supported.binary_search(w).is_err())
        .collect();

    Ok(BiLipschitzReport {
        holds: radius_violations.is_empty() && violations.is_empty(),
        lipschitz: l,
        delta,
        image_delta,
        s,
        radius_violations,
        source_supported,
        image_supported,
        violations,
    })
}
