//! Isolation radii, deficits and `(δ, s)`-supported points.
//!
//! For a point `w` of a configuration `C` with isolation radius `ρ_w`, the
//! *deficit* is
//!
//! ```text
//! inf_{p ∈ X} | (B(w, ρ_w/δ) \ B(p, δ ρ_w)) ∩ C |
//!     = |B(w, ρ_w/δ) ∩ C| − sup_p |B(p, δ ρ_w) ∩ B(w, ρ_w/δ) ∩ C|
//! ```
//!
//! and `w` is `(δ, s)`-supported iff its deficit is at least `s`. The
//! supremum is a fixed-radius maximum-coverage problem, solved by one of the
//! [`SolverMode`]s. Only [`SolverMode::EuclideanExact2D`] ranges over the whole
//! ambient space; the other modes restrict `p` to a finite candidate set and
//! therefore report an upper bound on the deficit.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::metric::{DistanceTable, MetricSpace, Point, PointConfiguration, DEFAULT_TOLERANCE};

/// Configurations up to this size get a dense distance table.
const TABLE_LIMIT: usize = 2048;

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct SupportParams {
    pub delta: f64,
    pub s: usize,
}

impl SupportParams {
    pub fn new(delta: f64, s: usize) -> Result<Self> {
        check_delta(delta)?;
        if s < 2 {
            return Err(Error::InvalidParameter(format!(
                "s must be at least 2, got {s}"
            )));
        }
        Ok(Self { delta, s })
    }
}

pub(crate) fn check_delta(delta: f64) -> Result<()> {
    if delta > 0.0 && delta < 1.0 {
        Ok(())
    } else {
        Err(Error::InvalidParameter(format!(
            "delta must lie in (0, 1), got {delta}"
        )))
    }
}

/// How the supremum over removal-ball centers `p` is realized.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SolverMode {
    /// `p` ranges over the points of `C`.
    RestrictedToC,
    /// `p` ranges over all of the plane (Euclidean spaces of dimension 1 or 2,
    /// possibly under Scaled/Snowflake wrappers). Exact.
    EuclideanExact2D,
    /// `p` ranges over the points of the eligible set plus a
    /// `resolution^dim` lattice spanning every center that can reach them.
    CandidateGrid { resolution: usize },
}

pub const MIN_GRID_RESOLUTION: usize = 8;

impl SolverMode {
    /// The most accurate solver implemented for this space.
    pub fn best_for(space: &MetricSpace) -> Self {
        match space.innermost() {
            MetricSpace::Euclidean { dim } if *dim <= 2 => SolverMode::EuclideanExact2D,
            MetricSpace::DistanceMatrix(_) | MetricSpace::Equilateral { .. } => {
                SolverMode::RestrictedToC
            }
            _ => SolverMode::CandidateGrid { resolution: 64 },
        }
    }

    pub fn exactness(self) -> Exactness {
        match self {
            SolverMode::EuclideanExact2D => Exactness::Exact,
            _ => Exactness::UpperBound,
        }
    }

    pub fn check_space(self, space: &MetricSpace) -> Result<()> {
        match self {
            SolverMode::RestrictedToC => Ok(()),
            SolverMode::EuclideanExact2D => match space.innermost() {
                MetricSpace::Euclidean { dim } if *dim <= 2 => Ok(()),
                _ => Err(Error::ModeMismatch(format!(
                    "exact planar solver needs a Euclidean space of dimension 1 or 2, got {}",
                    space.label()
                ))),
            },
            SolverMode::CandidateGrid { resolution } => {
                if resolution < MIN_GRID_RESOLUTION {
                    return Err(Error::InvalidParameter(format!(
                        "grid resolution must be at least {MIN_GRID_RESOLUTION}, got {resolution}"
                    )));
                }
                if space.coordinate_dim().is_none() {
                    return Err(Error::ModeMismatch(format!(
                        "candidate grid needs a coordinate space, got {}",
                        space.label()
                    )));
                }
                Ok(())
            }
        }
    }
}

impl fmt::Display for SolverMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SolverMode::RestrictedToC => f.write_str("restricted-to-c"),
            SolverMode::EuclideanExact2D => f.write_str("euclidean-exact-2d"),
            SolverMode::CandidateGrid { resolution } => write!(f, "candidate-grid-{resolution}"),
        }
    }
}

impl FromStr for SolverMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "restricted-to-c" | "restricted" => Ok(SolverMode::RestrictedToC),
            "euclidean-exact-2d" | "exact" => Ok(SolverMode::EuclideanExact2D),
            other => {
                let res = other
                    .strip_prefix("candidate-grid-")
                    .or_else(|| other.strip_prefix("grid:"))
                    .and_then(|r| r.parse().ok())
                    .ok_or_else(|| Error::InvalidParameter(format!("unknown solver {other:?}")))?;
                Ok(SolverMode::CandidateGrid { resolution: res })
            }
        }
    }
}

impl Serialize for SolverMode {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for SolverMode {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Whether a reported deficit is the true infimum or only an upper bound on it.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Exactness {
    Exact,
    UpperBound,
}

/// Best removal ball found: how many eligible points it holds, and where.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Coverage {
    pub count: usize,
    pub center: Point,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct PointSupport {
    pub index: usize,
    pub isolation_radius: f64,
    /// `|B(w, ρ_w/δ) ∩ C|`.
    pub outer_count: usize,
    pub deficit: usize,
    pub supported: bool,
    /// Center of the best removal ball found (informational).
    pub removal_center: Point,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SupportReport {
    pub delta: f64,
    pub s: usize,
    pub solver: SolverMode,
    pub exactness: Exactness,
    pub points: Vec<PointSupport>,
}

impl SupportReport {
    pub fn supported_indices(&self) -> Vec<usize> {
        self.points
            .iter()
            .filter(|p| p.supported)
            .map(|p| p.index)
            .collect()
    }

    pub fn deficits(&self) -> Vec<usize> {
        self.points.iter().map(|p| p.deficit).collect()
    }
}

pub fn isolation_radius(config: &PointConfiguration, w: usize) -> Result<f64> {
    if config.len() < 2 {
        return Err(Error::TooFewPoints(config.len()));
    }
    check_index(config, w)?;
    Ok((0..config.len())
        .filter(|&v| v != w)
        .map(|v| config.distance(w, v))
        .fold(f64::INFINITY, f64::min))
}

pub fn isolation_radii(config: &PointConfiguration) -> Vec<f64> {
    Engine::new(config).isolation_radii()
}

fn check_index(config: &PointConfiguration, i: usize) -> Result<()> {
    if i < config.len() {
        Ok(())
    } else {
        Err(Error::InvalidParameter(format!(
            "index {i} out of range for a configuration of {} points",
            config.len()
        )))
    }
}

/// Maximum number of `eligible` points inside one open ball of radius `r`,
/// over the centers allowed by `mode`. Ties go to the first candidate.
pub fn max_ball_coverage(
    config: &PointConfiguration,
    eligible: &[usize],
    r: f64,
    mode: SolverMode,
) -> Result<Coverage> {
    if r.is_nan() || r <= 0.0 {
        return Err(Error::InvalidParameter(format!(
            "radius must be positive, got {r}"
        )));
    }
    for &i in eligible {
        check_index(config, i)?;
    }
    mode.check_space(config.space())?;
    Ok(Engine::new(config).max_coverage(eligible, r, mode))
}

/// The deficit of `C[w]` at `δ`. Exact under [`SolverMode::EuclideanExact2D`],
/// an upper bound otherwise.
pub fn supported_deficit(
    config: &PointConfiguration,
    w: usize,
    delta: f64,
    mode: SolverMode,
) -> Result<usize> {
    check_delta(delta)?;
    check_index(config, w)?;
    mode.check_space(config.space())?;
    let engine = Engine::new(config);
    let rho = engine.isolation_radius(w);
    Ok(engine.point_support(w, rho, delta, mode).deficit)
}

/// Deficits of every point at `δ`, with `supported` left `false`.
///
/// The deficit does not depend on `s`, so sweeps over many `s` values share
/// one call.
pub fn point_deficits(
    config: &PointConfiguration,
    delta: f64,
    mode: SolverMode,
) -> Result<Vec<PointSupport>> {
    check_delta(delta)?;
    mode.check_space(config.space())?;
    let engine = Engine::new(config);
    let radii = engine.isolation_radii();
    Ok(radii
        .iter()
        .enumerate()
        .map(|(w, &rho)| engine.point_support(w, rho, delta, mode))
        .collect())
}

pub fn supported_points(
    config: &PointConfiguration,
    params: SupportParams,
    mode: SolverMode,
) -> Result<SupportReport> {
    let params = SupportParams::new(params.delta, params.s)?;
    let mut points = point_deficits(config, params.delta, mode)?;
    for p in &mut points {
        p.supported = p.deficit >= params.s;
    }
    Ok(SupportReport {
        delta: params.delta,
        s: params.s,
        solver: mode,
        exactness: mode.exactness(),
        points,
    })
}

/// Precomputed views of a configuration shared by the solvers.
struct Engine<'a> {
    config: &'a PointConfiguration,
    table: Option<DistanceTable>,
    /// Planar coordinates (y = 0 for 1-D) when the innermost space is Euclidean(≤ 2).
    planar: Option<Vec<[f64; 2]>>,
}

impl<'a> Engine<'a> {
    fn new(config: &'a PointConfiguration) -> Self {
        let table = (config.len() <= TABLE_LIMIT).then(|| config.distance_table());
        let planar = match config.space().innermost() {
            MetricSpace::Euclidean { dim } if *dim <= 2 => Some(
                config
                    .points()
                    .iter()
                    .map(|p| {
                        let c = p.coords().expect("euclidean points carry coordinates");
                        [c[0], c.get(1).copied().unwrap_or(0.0)]
                    })
                    .collect(),
            ),
            _ => None,
        };
        Self {
            config,
            table,
            planar,
        }
    }

    #[inline]
    fn dist(&self, i: usize, j: usize) -> f64 {
        match &self.table {
            Some(t) => t.get(i, j),
            None => self.config.distance(i, j),
        }
    }

    fn isolation_radius(&self, w: usize) -> f64 {
        (0..self.config.len())
            .filter(|&v| v != w)
            .map(|v| self.dist(w, v))
            .fold(f64::INFINITY, f64::min)
    }

    fn isolation_radii(&self) -> Vec<f64> {
        (0..self.config.len())
            .map(|w| self.isolation_radius(w))
            .collect()
    }

    fn point_support(&self, w: usize, rho: f64, delta: f64, mode: SolverMode) -> PointSupport {
        let outer_radius = rho / delta;
        let outer: Vec<usize> = (0..self.config.len())
            .filter(|&i| self.dist(w, i) < outer_radius)
            .collect();
        let cov = self.max_coverage(&outer, delta * rho, mode);
        PointSupport {
            index: w,
            isolation_radius: rho,
            outer_count: outer.len(),
            deficit: outer.len() - cov.count,
            supported: false,
            removal_center: cov.center,
        }
    }

    fn max_coverage(&self, eligible: &[usize], r: f64, mode: SolverMode) -> Coverage {
        if eligible.is_empty() {
            return Coverage {
                count: 0,
                center: self.config.point(0).clone(),
            };
        }
        match mode {
            SolverMode::RestrictedToC => self.restricted(eligible, r),
            SolverMode::EuclideanExact2D => self.exact_planar(eligible, r),
            SolverMode::CandidateGrid { resolution } => self.grid(eligible, r, resolution),
        }
    }

    fn restricted(&self, eligible: &[usize], r: f64) -> Coverage {
        let mut best = (0, 0);
        for p in 0..self.config.len() {
            let count = eligible.iter().filter(|&&i| self.dist(p, i) < r).count();
            if count > best.0 {
                best = (count, p);
                if count == eligible.len() {
                    break;
                }
            }
        }
        Coverage {
            count: best.0,
            center: self.config.point(best.1).clone(),
        }
    }

    /// Fixed-radius maximum coverage over the whole plane.
    ///
    /// The open-ball supremum at radius `r` equals the closed-ball maximum at
    /// `r' = r(1 − tol)` for any finite set not in degenerate position at that
    /// scale, and some optimal closed disk is either centered on a point or has
    /// two points on its boundary. The candidates are therefore every eligible
    /// point and both intersections of the radius-`r'` circles around each pair
    /// closer than `2r'`.
    fn exact_planar(&self, eligible: &[usize], r: f64) -> Coverage {
        let xy = self.planar.as_ref().expect("planar coordinates");
        let one_dim = self.config.space().coordinate_dim() == Some(1);
        let rp = self.config.space().base_radius(r) * (1.0 - DEFAULT_TOLERANCE);
        let reach = rp * (1.0 + 1e-2 * DEFAULT_TOLERANCE);
        let reach2 = reach * reach;

        let mut sorted: Vec<usize> = eligible.to_vec();
        sorted.sort_by(|&a, &b| xy[a][0].total_cmp(&xy[b][0]).then(a.cmp(&b)));
        let xs: Vec<f64> = sorted.iter().map(|&i| xy[i][0]).collect();

        // Count of eligible points within `reach` of anchor + offset. The offset
        // is kept separate so the test runs at the scale of `r`, not of the
        // coordinates.
        let count_at = |anchor: usize, off: [f64; 2]| -> usize {
            let a = xy[anchor];
            let cx = a[0] + off[0];
            let lo = xs.partition_point(|&x| x < cx - 2.0 * reach);
            let hi = xs.partition_point(|&x| x <= cx + 2.0 * reach);
            sorted[lo..hi]
                .iter()
                .filter(|&&i| {
                    let dx = (a[0] - xy[i][0]) + off[0];
                    let dy = (a[1] - xy[i][1]) + off[1];
                    dx * dx + dy * dy <= reach2
                })
                .count()
        };

        let mut best_count = 0;
        let mut best_center = (eligible[0], [0.0, 0.0]);
        let mut consider = |anchor: usize, off: [f64; 2], best_count: &mut usize| {
            let c = count_at(anchor, off);
            if c > *best_count {
                *best_count = c;
                best_center = (anchor, off);
            }
        };

        for &i in eligible {
            consider(i, [0.0, 0.0], &mut best_count);
        }

        if best_count < eligible.len() {
            let mut pairs = Vec::new();
            for (a_pos, &a) in sorted.iter().enumerate() {
                for &b in &sorted[a_pos + 1..] {
                    if xy[b][0] - xy[a][0] >= 2.0 * rp {
                        break;
                    }
                    let dx = xy[b][0] - xy[a][0];
                    let dy = xy[b][1] - xy[a][1];
                    if dx * dx + dy * dy < 4.0 * rp * rp {
                        pairs.push((a.min(b), a.max(b)));
                    }
                }
            }
            pairs.sort_unstable();
            for (a, b) in pairs {
                let dx = xy[b][0] - xy[a][0];
                let dy = xy[b][1] - xy[a][1];
                if one_dim {
                    // projecting onto the line only brings the center closer
                    consider(a, [dx / 2.0, 0.0], &mut best_count);
                } else {
                    let d = dx.hypot(dy);
                    let h = (rp * rp - d * d / 4.0).max(0.0).sqrt();
                    let (ux, uy) = (-dy / d, dx / d);
                    consider(a, [dx / 2.0 + h * ux, dy / 2.0 + h * uy], &mut best_count);
                    consider(a, [dx / 2.0 - h * ux, dy / 2.0 - h * uy], &mut best_count);
                }
                if best_count == eligible.len() {
                    break;
                }
            }
        }

        let (anchor, off) = best_center;
        let a = xy[anchor];
        let center = if one_dim {
            Point::Coords(vec![a[0] + off[0]])
        } else {
            Point::Coords(vec![a[0] + off[0], a[1] + off[1]])
        };
        Coverage {
            count: best_count,
            center,
        }
    }

    fn grid(&self, eligible: &[usize], r: f64, resolution: usize) -> Coverage {
        let mut best = self.restricted_to(eligible, eligible, r);
        if best.count == eligible.len() {
            return best;
        }
        let (lo, hi) = grid_bounds(self.config, eligible, r);
        let dims = lo.len();
        let step: Vec<f64> = (0..dims)
            .map(|k| (hi[k] - lo[k]) / (resolution - 1) as f64)
            .collect();
        let total = resolution.pow(dims as u32);
        let mut coords = vec![0.0; dims];
        for flat in 0..total {
            let mut rem = flat;
            for k in (0..dims).rev() {
                coords[k] = lo[k] + step[k] * (rem % resolution) as f64;
                rem /= resolution;
            }
            let p = Point::Coords(coords.clone());
            let count = eligible
                .iter()
                .filter(|&&i| self.config.distance_to(&p, i) < r)
                .count();
            if count > best.count {
                best = Coverage { count, center: p };
                if count == eligible.len() {
                    break;
                }
            }
        }
        best
    }

    fn restricted_to(&self, candidates: &[usize], eligible: &[usize], r: f64) -> Coverage {
        let mut best = (0, candidates[0]);
        for &p in candidates {
            let count = eligible.iter().filter(|&&i| self.dist(p, i) < r).count();
            if count > best.0 {
                best = (count, p);
            }
        }
        Coverage {
            count: best.0,
            center: self.config.point(best.1).clone(),
        }
    }
}

/// Coordinate box containing every center within distance `r` of an eligible point.
fn grid_bounds(config: &PointConfiguration, eligible: &[usize], r: f64) -> (Vec<f64>, Vec<f64>) {
    let rb = config.space().base_radius(r);
    let dims = config.space().coordinate_dim().expect("coordinate space");
    let mut lo = vec![f64::INFINITY; dims];
    let mut hi = vec![f64::NEG_INFINITY; dims];
    for &i in eligible {
        let c = config.point(i).coords().expect("coordinates");
        let (l, h): (Vec<f64>, Vec<f64>) = match config.space().innermost() {
            MetricSpace::HyperbolicHalfPlane => {
                let sx = c[1] * rb.sinh();
                (
                    vec![c[0] - sx, c[1] * (-rb).exp()],
                    vec![c[0] + sx, c[1] * rb.exp()],
                )
            }
            MetricSpace::HeisenbergGauge => {
                let st = rb * rb + 2.0 * (c[0].abs() + c[1].abs()) * rb;
                (
                    vec![c[0] - rb, c[1] - rb, c[2] - st],
                    vec![c[0] + rb, c[1] + rb, c[2] + st],
                )
            }
            _ => (
                c.iter().map(|x| x - rb).collect(),
                c.iter().map(|x| x + rb).collect(),
            ),
        };
        for k in 0..dims {
            lo[k] = lo[k].min(l[k]);
            hi[k] = hi[k].max(h[k]);
        }
    }
    (lo, hi)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::{generate_configuration, GeneratorFamily, GeneratorSpec};

    fn line(xs: &[f64]) -> PointConfiguration {
        PointConfiguration::new(
            MetricSpace::euclidean(1),
            xs.iter().map(|&x| Point::Coords(vec![x])).collect(),
        )
        .unwrap()
    }

    /// Brute force over a dense 1-D lattice of centers; independent of the solver.
    fn lattice_coverage_1d(xs: &[f64], r: f64, pitch: f64) -> usize {
        let lo = xs.iter().copied().fold(f64::INFINITY, f64::min) - r;
        let hi = xs.iter().copied().fold(f64::NEG_INFINITY, f64::max) + r;
        let steps = ((hi - lo) / pitch).ceil() as usize;
        (0..=steps)
            .map(|k| {
                let c = lo + k as f64 * pitch;
                xs.iter().filter(|&&x| (x - c).abs() < r).count()
            })
            .max()
            .unwrap()
    }

    #[test]
    fn isolation_radius_examples() {
        let c = line(&[0.0, 1.0, 3.0]);
        assert_eq!(isolation_radii(&c), vec![1.0, 1.0, 2.0]);
        assert_eq!(isolation_radius(&c, 2).unwrap(), 2.0);
        assert!(isolation_radius(&c, 3).is_err());

        let eq = PointConfiguration::all_of(MetricSpace::equilateral(6)).unwrap();
        assert!(isolation_radii(&eq).iter().all(|&r| r == 1.0));

        let snow = line(&[0.0, 4.0, 9.0])
            .with_space(MetricSpace::snowflake(MetricSpace::euclidean(1), 0.5).unwrap())
            .unwrap();
        assert_eq!(isolation_radius(&snow, 0).unwrap(), 2.0);
    }

    #[test]
    fn coverage_three_points_on_a_line() {
        let xs = [0.0, 0.5, 1.0];
        let c = line(&xs);
        let cov = max_ball_coverage(&c, &[0, 1, 2], 0.6, SolverMode::EuclideanExact2D).unwrap();
        assert_eq!(lattice_coverage_1d(&xs, 0.6, 1e-4), 3);
        assert_eq!(cov.count, 3);
        assert_eq!(cov.center, Point::Coords(vec![0.5]));
    }

    #[test]
    fn coverage_two_points_unit_apart() {
        let xs = [0.0, 1.0];
        let c = line(&xs);
        assert_eq!(lattice_coverage_1d(&xs, 0.5, 1e-4), 1);
        for mode in [SolverMode::EuclideanExact2D, SolverMode::RestrictedToC] {
            assert_eq!(max_ball_coverage(&c, &[0, 1], 0.5, mode).unwrap().count, 1);
        }
    }

    #[test]
    fn coverage_equilateral_is_singleton() {
        let eq = PointConfiguration::all_of(MetricSpace::equilateral(9)).unwrap();
        let all: Vec<usize> = (0..9).collect();
        let cov = max_ball_coverage(&eq, &all, 0.05, SolverMode::RestrictedToC).unwrap();
        assert_eq!(cov.count, 1);
        assert_eq!(cov.center, Point::Index(0));
    }

    #[test]
    fn exact_mode_rejects_non_planar() {
        let eq = PointConfiguration::all_of(MetricSpace::equilateral(3)).unwrap();
        assert!(matches!(
            max_ball_coverage(&eq, &[0], 0.5, SolverMode::EuclideanExact2D),
            Err(Error::ModeMismatch(_))
        ));
        assert!(matches!(
            max_ball_coverage(&eq, &[0], 0.5, SolverMode::CandidateGrid { resolution: 16 }),
            Err(Error::ModeMismatch(_))
        ));
        let c = line(&[0.0, 1.0]);
        assert!(
            max_ball_coverage(&c, &[0], 0.5, SolverMode::CandidateGrid { resolution: 4 }).is_err()
        );
    }

    #[test]
    fn deficit_two_points() {
        let c = line(&[0.0, 1.0]);
        assert_eq!(
            supported_deficit(&c, 0, 0.5, SolverMode::EuclideanExact2D).unwrap(),
            1
        );
        let rep = supported_points(
            &c,
            SupportParams::new(0.5, 2).unwrap(),
            SolverMode::EuclideanExact2D,
        )
        .unwrap();
        assert!(rep.supported_indices().is_empty());
        assert_eq!(rep.deficits(), vec![1, 1]);
    }

    #[test]
    fn deficit_center_of_five_by_five_grid() {
        let grid = generate_configuration(&GeneratorSpec::new(
            GeneratorFamily::IntegerGrid {
                dim: 2,
                width: Some(5),
            },
            25,
            0,
        ))
        .unwrap();
        // outer open ball of radius 2 about (2, 2): center, 4 axis and 4 diagonal neighbors
        let outer = grid
            .ball_members(&Point::Coords(vec![2.0, 2.0]), 2.0)
            .unwrap();
        assert_eq!(outer.len(), 9);
        let d = supported_deficit(&grid, 12, 0.5, SolverMode::EuclideanExact2D).unwrap();
        assert_eq!(d, 8);
        let g = supported_deficit(&grid, 12, 0.5, SolverMode::CandidateGrid { resolution: 32 })
            .unwrap();
        assert_eq!(g, 8);
    }

    #[test]
    fn equilateral_is_fully_supported() {
        for n in [2usize, 5, 10] {
            let eq = PointConfiguration::all_of(MetricSpace::equilateral(n)).unwrap();
            for w in 0..n {
                let d = supported_deficit(&eq, w, 0.05, SolverMode::RestrictedToC).unwrap();
                assert_eq!(d, n - 1);
            }
        }
        let eq = PointConfiguration::all_of(MetricSpace::equilateral(10)).unwrap();
        let rep = supported_points(
            &eq,
            SupportParams::new(1.0 / 20.0, 9).unwrap(),
            SolverMode::RestrictedToC,
        )
        .unwrap();
        assert_eq!(rep.supported_indices(), (0..10).collect::<Vec<_>>());
        assert_eq!(rep.exactness, Exactness::UpperBound);
    }

    #[test]
    fn s_beyond_size_supports_nothing() {
        let c = generate_configuration(&GeneratorSpec::new(
            GeneratorFamily::UniformSquare { dim: 2 },
            30,
            7,
        ))
        .unwrap();
        let rep = supported_points(
            &c,
            SupportParams::new(0.1, 31).unwrap(),
            SolverMode::EuclideanExact2D,
        )
        .unwrap();
        assert!(rep.supported_indices().is_empty());
    }

    #[test]
    fn params_validated() {
        assert!(SupportParams::new(1.5, 2).is_err());
        assert!(SupportParams::new(0.0, 2).is_err());
        assert!(SupportParams::new(0.5, 1).is_err());
    }

    #[test]
    fn solver_names_round_trip() {
        for m in [
            SolverMode::RestrictedToC,
            SolverMode::EuclideanExact2D,
            SolverMode::CandidateGrid { resolution: 64 },
        ] {
            assert_eq!(m.to_string().parse::<SolverMode>().unwrap(), m);
        }
        assert_eq!(
            "grid:16".parse::<SolverMode>().unwrap(),
            SolverMode::CandidateGrid { resolution: 16 }
        );
    }

    #[test]
    fn hyperbolic_grid_solver_runs() {
        let c = generate_configuration(&GeneratorSpec::new(
            GeneratorFamily::HyperbolicDisk { radius: 3.0 },
            40,
            1,
        ))
        .unwrap();
        let grid = point_deficits(&c, 0.25, SolverMode::CandidateGrid { resolution: 16 }).unwrap();
        let restricted = point_deficits(&c, 0.25, SolverMode::RestrictedToC).unwrap();
        for (g, r) in grid.iter().zip(&restricted) {
            assert!(g.deficit <= r.deficit);
            assert!(g.deficit < g.outer_count);
        }
    }

    #[test]
    fn heisenberg_grid_solver_runs() {
        let pts = (0..12)
            .map(|k| {
                let t = k as f64;
                Point::Coords(vec![(t * 0.7).sin(), (t * 1.3).cos(), 0.2 * t])
            })
            .collect();
        let c = PointConfiguration::new(MetricSpace::HeisenbergGauge, pts).unwrap();
        let rep = supported_points(
            &c,
            SupportParams::new(0.3, 2).unwrap(),
            SolverMode::CandidateGrid { resolution: 8 },
        )
        .unwrap();
        assert_eq!(rep.points.len(), 12);
    }
}
