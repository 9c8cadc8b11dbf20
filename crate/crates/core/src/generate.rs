//! Seeded generators for the configuration families used in sweeps and
//! witness constructions.

use std::collections::HashSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::metric::{MetricSpace, Point, PointConfiguration};

const MAX_RESAMPLES: usize = 1000;

fn two() -> usize {
    2
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "kebab-case")]
pub enum GeneratorFamily {
    /// Uniform in the unit cube `[0, 1]^dim` (a square by default).
    UniformSquare {
        #[serde(default = "two")]
        dim: usize,
    },
    /// First `count` lattice points in row-major order (x varies fastest).
    /// `width` defaults to `ceil(sqrt(count))` in two dimensions.
    IntegerGrid {
        #[serde(default = "two")]
        dim: usize,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        width: Option<usize>,
    },
    /// Equally spaced points on the hyperbolic circle of this radius about `(0, 1)`.
    HyperbolicCircle { radius: f64 },
    /// Area-uniform points in the hyperbolic disk of this radius about `(0, 1)`.
    HyperbolicDisk { radius: f64 },
    /// All points of `Equilateral(count)`.
    Equilateral,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct GeneratorSpec {
    #[serde(flatten)]
    pub family: GeneratorFamily,
    pub count: usize,
    #[serde(default)]
    pub seed: u64,
}

impl GeneratorSpec {
    pub fn new(family: GeneratorFamily, count: usize, seed: u64) -> Self {
        Self {
            family,
            count,
            seed,
        }
    }

    pub fn with_seed(&self, seed: u64) -> Self {
        Self {
            seed,
            ..self.clone()
        }
    }
}

pub fn generate_configuration(spec: &GeneratorSpec) -> Result<PointConfiguration> {
    let n = spec.count;
    if n < 2 {
        return Err(Error::InvalidParameter(format!(
            "generator count must be at least 2, got {n}"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    match &spec.family {
        GeneratorFamily::UniformSquare { dim } => {
            if *dim == 0 {
                return Err(Error::InvalidParameter("dimension must be positive".into()));
            }
            let points = sample_distinct(n, || (0..*dim).map(|_| rng.gen::<f64>()).collect())?;
            PointConfiguration::new(MetricSpace::euclidean(*dim), points)
        }
        GeneratorFamily::IntegerGrid { dim, width } => {
            let points = match dim {
                1 => (0..n).map(|i| Point::Coords(vec![i as f64])).collect(),
                2 => {
                    let w = width
                        .unwrap_or_else(|| (n as f64).sqrt().ceil() as usize)
                        .max(1);
                    (0..n)
                        .map(|i| Point::Coords(vec![(i % w) as f64, (i / w) as f64]))
                        .collect()
                }
                d => {
                    return Err(Error::InvalidParameter(format!(
                        "integer grid supports dimension 1 or 2, got {d}"
                    )))
                }
            };
            PointConfiguration::new(MetricSpace::euclidean(*dim), points)
        }
        GeneratorFamily::HyperbolicCircle { radius } => {
            check_radius(*radius)?;
            let points = (0..n)
                .map(|k| {
                    let theta = std::f64::consts::TAU * k as f64 / n as f64;
                    Point::Coords(polar_to_half_plane(*radius, theta).to_vec())
                })
                .collect();
            PointConfiguration::new(MetricSpace::HyperbolicHalfPlane, points)
                .map_err(|e| Error::Generation(format!("hyperbolic circle: {e}")))
        }
        GeneratorFamily::HyperbolicDisk { radius } => {
            check_radius(*radius)?;
            let cosh_r = radius.cosh();
            let points = sample_distinct(n, || {
                let u: f64 = rng.gen();
                let theta = std::f64::consts::TAU * rng.gen::<f64>();
                let r = (1.0 + u * (cosh_r - 1.0)).acosh();
                polar_to_half_plane(r, theta).to_vec()
            })?;
            PointConfiguration::new(MetricSpace::HyperbolicHalfPlane, points)
        }
        GeneratorFamily::Equilateral => PointConfiguration::all_of(MetricSpace::equilateral(n)),
    }
}

fn check_radius(r: f64) -> Result<()> {
    if r > 0.0 && r.is_finite() {
        Ok(())
    } else {
        Err(Error::InvalidParameter(format!(
            "radius must be positive, got {r}"
        )))
    }
}

/// Point at hyperbolic distance `r` from `(0, 1)` in direction `theta`.
///
/// Uses `y = 1 / D`, `x = sinh(r) sin(theta) / D` with
/// `D = cosh r - sinh r cos theta = e^{-r} + 2 sinh r sin²(theta/2)`.
pub fn polar_to_half_plane(r: f64, theta: f64) -> [f64; 2] {
    let half = (theta / 2.0).sin();
    let denom = (-r).exp() + 2.0 * r.sinh() * half * half;
    [r.sinh() * theta.sin() / denom, 1.0 / denom]
}

fn sample_distinct(n: usize, mut draw: impl FnMut() -> Vec<f64>) -> Result<Vec<Point>> {
    let mut seen = HashSet::with_capacity(n);
    let mut points = Vec::with_capacity(n);
    for _ in 0..n {
        let mut tries = 0;
        loop {
            let p = draw();
            let key: Vec<u64> = p.iter().map(|x| x.to_bits()).collect();
            if seen.insert(key) {
                points.push(Point::Coords(p));
                break;
            }
            tries += 1;
            if tries >= MAX_RESAMPLES {
                return Err(Error::Generation(format!(
                    "could not draw a distinct point after {MAX_RESAMPLES} attempts"
                )));
            }
        }
    }
    Ok(points)
}
