//! Metric spaces as distance oracles, and finite point configurations in them.
//!
//! A [`MetricSpace`] is a declarative recipe: concrete families (Euclidean,
//! explicit distance matrices, the hyperbolic half-plane, the Heisenberg group
//! with its Korányi gauge, equilateral spaces) plus the two wrappers that
//! transform an existing metric, [`MetricSpace::Snowflake`] (`d^ε`) and
//! [`MetricSpace::Scaled`] (`λ·d`). Wrappers nest freely.
//!
//! A [`PointConfiguration`] is a finite, duplicate-free list of points of one
//! space. Every computation in the crate takes a configuration as its universe.

use serde::{Deserialize, Serialize};

use crate::config::SpaceSpec;
use crate::error::{Error, Result};

/// Relative tolerance used where a comparison needs slack (matrix validation,
/// boundary detection, the planar solver's radius shrink).
pub const DEFAULT_TOLERANCE: f64 = 1e-12;

/// Quasi-triangle constant `K` of the Heisenberg gauge distance:
/// `d(a, c) <= K (d(a, b) + d(b, c))`.
///
/// With the group law `(x, y, t)·(x', y', t') = (x + x', y + y', t + t' + 2(x y' - y x'))`
/// the Korányi gauge `((x² + y²)² + t²)^{1/4}` induces the Cygan–Korányi
/// distance, which satisfies the plain triangle inequality, so `K = 1`.
pub const HEISENBERG_QUASI_TRIANGLE_K: f64 = 1.0;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "SpaceSpec", into = "SpaceSpec")]
pub enum MetricSpace {
    /// `R^dim` with the Euclidean norm.
    Euclidean { dim: usize },
    /// Abstract finite space given by a validated distance matrix.
    DistanceMatrix(DistanceMatrix),
    /// `d^ε` for `0 < ε < 1`.
    Snowflake {
        base: Box<MetricSpace>,
        epsilon: f64,
    },
    /// `λ·d` for `λ > 0`.
    Scaled { base: Box<MetricSpace>, lambda: f64 },
    /// Upper half-plane `{(x, y) : y > 0}` with curvature −1.
    HyperbolicHalfPlane,
    /// Heisenberg group `(x, y, t)` with the Korányi gauge distance.
    HeisenbergGauge,
    /// `size` abstract points at mutual distance 1.
    Equilateral { size: usize },
}

/// A point of some [`MetricSpace`]: coordinates for geometric spaces, an
/// index for abstract ones.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Point {
    Index(usize),
    Coords(Vec<f64>),
}

impl Point {
    pub fn coords(&self) -> Option<&[f64]> {
        match self {
            Point::Coords(c) => Some(c),
            Point::Index(_) => None,
        }
    }

    pub fn index(&self) -> Option<usize> {
        match self {
            Point::Index(i) => Some(*i),
            Point::Coords(_) => None,
        }
    }
}

impl From<Vec<f64>> for Point {
    fn from(c: Vec<f64>) -> Self {
        Point::Coords(c)
    }
}

/// Symmetric, zero-diagonal, positive off-diagonal matrix satisfying the
/// triangle inequality. Validation happens once, at construction.
#[derive(Clone, Debug, PartialEq)]
pub struct DistanceMatrix {
    n: usize,
    data: Vec<f64>,
}

impl DistanceMatrix {
    pub fn new(rows: Vec<Vec<f64>>) -> Result<Self> {
        let n = rows.len();
        if n < 2 {
            return Err(Error::InvalidSpace(format!(
                "distance matrix must have at least 2 rows, got {n}"
            )));
        }
        let mut data = Vec::with_capacity(n * n);
        for (i, row) in rows.into_iter().enumerate() {
            if row.len() != n {
                return Err(Error::InvalidSpace(format!(
                    "row {i} has {} entries, expected {n}",
                    row.len()
                )));
            }
            data.extend(row);
        }
        let m = Self { n, data };
        m.validate()?;
        Ok(m)
    }

    fn validate(&self) -> Result<()> {
        let n = self.n;
        let mut scale: f64 = 0.0;
        for i in 0..n {
            for j in 0..n {
                let v = self.get(i, j);
                if !v.is_finite() || v < 0.0 {
                    return Err(Error::MetricAxiom(format!(
                        "entry ({i}, {j}) = {v} is not a finite nonnegative real"
                    )));
                }
                if i == j && v != 0.0 {
                    return Err(Error::MetricAxiom(format!(
                        "diagonal entry ({i}, {i}) = {v}"
                    )));
                }
                if i != j && v == 0.0 {
                    return Err(Error::MetricAxiom(format!(
                        "off-diagonal entry ({i}, {j}) is zero"
                    )));
                }
                if v != self.get(j, i) {
                    return Err(Error::MetricAxiom(format!(
                        "asymmetric entries ({i}, {j}) = {v} and ({j}, {i}) = {}",
                        self.get(j, i)
                    )));
                }
                scale = scale.max(v);
            }
        }
        let slack = DEFAULT_TOLERANCE * scale;
        for i in 0..n {
            for j in 0..n {
                let dij = self.get(i, j);
                for k in 0..n {
                    if self.get(i, k) > dij + self.get(j, k) + slack {
                        return Err(Error::MetricAxiom(format!(
                            "triangle inequality fails: d({i},{k}) = {} > d({i},{j}) + d({j},{k}) = {}",
                            self.get(i, k),
                            dij + self.get(j, k)
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    /// Parses header-less CSV: `n` rows of `n` comma-separated reals.
    pub fn from_csv<R: std::io::Read>(reader: R) -> Result<Self> {
        let mut rdr = csv::ReaderBuilder::new()
            .has_headers(false)
            .trim(csv::Trim::All)
            .from_reader(reader);
        let mut rows = Vec::new();
        for record in rdr.records() {
            let record = record?;
            let row = record
                .iter()
                .map(|field| {
                    field
                        .parse::<f64>()
                        .map_err(|e| Error::Parse(format!("matrix entry {field:?}: {e}")))
                })
                .collect::<Result<Vec<_>>>()?;
            rows.push(row);
        }
        Self::new(rows)
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.data[i * self.n + j]
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn rows(&self) -> Vec<Vec<f64>> {
        self.data.chunks(self.n).map(<[f64]>::to_vec).collect()
    }
}

impl MetricSpace {
    pub fn euclidean(dim: usize) -> Self {
        MetricSpace::Euclidean { dim }
    }

    pub fn equilateral(size: usize) -> Self {
        MetricSpace::Equilateral { size }
    }

    pub fn snowflake(base: MetricSpace, epsilon: f64) -> Result<Self> {
        let s = MetricSpace::Snowflake {
            base: Box::new(base),
            epsilon,
        };
        s.validate()?;
        Ok(s)
    }

    pub fn scaled(base: MetricSpace, lambda: f64) -> Result<Self> {
        let s = MetricSpace::Scaled {
            base: Box::new(base),
            lambda,
        };
        s.validate()?;
        Ok(s)
    }

    pub fn validate(&self) -> Result<()> {
        match self {
            MetricSpace::Euclidean { dim } if *dim == 0 => Err(Error::InvalidSpace(
                "Euclidean dimension must be positive".into(),
            )),
            MetricSpace::Snowflake { base, epsilon } => {
                if !(*epsilon > 0.0 && *epsilon < 1.0) {
                    return Err(Error::InvalidSpace(format!(
                        "snowflake exponent must lie in (0, 1), got {epsilon}"
                    )));
                }
                base.validate()
            }
            MetricSpace::Scaled { base, lambda } => {
                if !(*lambda > 0.0 && lambda.is_finite()) {
                    return Err(Error::InvalidSpace(format!(
                        "scale factor must be a positive finite real, got {lambda}"
                    )));
                }
                base.validate()
            }
            MetricSpace::Equilateral { size } if *size < 2 => Err(Error::InvalidSpace(format!(
                "equilateral space needs at least 2 points, got {size}"
            ))),
            _ => Ok(()),
        }
    }

    /// The concrete space underneath any Snowflake/Scaled wrappers.
    pub fn innermost(&self) -> &MetricSpace {
        match self {
            MetricSpace::Snowflake { base, .. } | MetricSpace::Scaled { base, .. } => {
                base.innermost()
            }
            other => other,
        }
    }

    /// Coordinate arity of points, or `None` for index-addressed spaces.
    pub fn coordinate_dim(&self) -> Option<usize> {
        match self.innermost() {
            MetricSpace::Euclidean { dim } => Some(*dim),
            MetricSpace::HyperbolicHalfPlane => Some(2),
            MetricSpace::HeisenbergGauge => Some(3),
            _ => None,
        }
    }

    /// Number of points for index-addressed spaces.
    pub fn abstract_size(&self) -> Option<usize> {
        match self.innermost() {
            MetricSpace::DistanceMatrix(m) => Some(m.len()),
            MetricSpace::Equilateral { size } => Some(*size),
            _ => None,
        }
    }

    /// Translates a radius in this space into the innermost space's units:
    /// `d(a, b) < r` here iff `d_inner(a, b) < base_radius(r)`.
    pub fn base_radius(&self, r: f64) -> f64 {
        match self {
            MetricSpace::Snowflake { base, epsilon } => base.base_radius(r.powf(1.0 / epsilon)),
            MetricSpace::Scaled { base, lambda } => base.base_radius(r / lambda),
            _ => r,
        }
    }

    pub fn quasi_triangle_constant(&self) -> f64 {
        match self.innermost() {
            MetricSpace::HeisenbergGauge => HEISENBERG_QUASI_TRIANGLE_K,
            _ => 1.0,
        }
    }

    /// Short human-readable label, e.g. `snowflake(euclidean(2), 0.5)`.
    pub fn label(&self) -> String {
        match self {
            MetricSpace::Euclidean { dim } => format!("euclidean({dim})"),
            MetricSpace::DistanceMatrix(m) => format!("distance-matrix({})", m.len()),
            MetricSpace::Snowflake { base, epsilon } => {
                format!("snowflake({}, {epsilon})", base.label())
            }
            MetricSpace::Scaled { base, lambda } => format!("scaled({}, {lambda})", base.label()),
            MetricSpace::HyperbolicHalfPlane => "hyperbolic-half-plane".into(),
            MetricSpace::HeisenbergGauge => "heisenberg-gauge".into(),
            MetricSpace::Equilateral { size } => format!("equilateral({size})"),
        }
    }

    pub fn check_point(&self, p: &Point) -> Result<()> {
        match (self.innermost(), p) {
            (MetricSpace::Euclidean { dim }, Point::Coords(c)) if c.len() == *dim => {
                finite_coords(c)
            }
            (MetricSpace::HyperbolicHalfPlane, Point::Coords(c)) if c.len() == 2 => {
                finite_coords(c)?;
                if c[1] > 0.0 {
                    Ok(())
                } else {
                    Err(Error::InvalidPoint(format!(
                        "half-plane point needs y > 0, got {c:?}"
                    )))
                }
            }
            (MetricSpace::HeisenbergGauge, Point::Coords(c)) if c.len() == 3 => finite_coords(c),
            (MetricSpace::DistanceMatrix(m), Point::Index(i)) if *i < m.len() => Ok(()),
            (MetricSpace::Equilateral { size }, Point::Index(i)) if i < size => Ok(()),
            (space, p) => Err(Error::InvalidPoint(format!(
                "{p:?} is not a point of {}",
                space.label()
            ))),
        }
    }

    /// Distance between two points, validating both.
    pub fn distance(&self, a: &Point, b: &Point) -> Result<f64> {
        self.check_point(a)?;
        self.check_point(b)?;
        Ok(self.dist(a, b))
    }

    /// Distance between two points already known to be valid.
    #[inline]
    pub(crate) fn dist(&self, a: &Point, b: &Point) -> f64 {
        match self {
            MetricSpace::Euclidean { .. } => euclidean(coords(a), coords(b)),
            MetricSpace::DistanceMatrix(m) => m.get(index(a), index(b)),
            MetricSpace::Snowflake { base, epsilon } => base.dist(a, b).powf(*epsilon),
            MetricSpace::Scaled { base, lambda } => lambda * base.dist(a, b),
            MetricSpace::HyperbolicHalfPlane => hyperbolic(coords(a), coords(b)),
            MetricSpace::HeisenbergGauge => koranyi(coords(a), coords(b)),
            MetricSpace::Equilateral { .. } => {
                if index(a) == index(b) {
                    0.0
                } else {
                    1.0
                }
            }
        }
    }
}

fn finite_coords(c: &[f64]) -> Result<()> {
    if c.iter().all(|x| x.is_finite()) {
        Ok(())
    } else {
        Err(Error::InvalidPoint(format!(
            "non-finite coordinate in {c:?}"
        )))
    }
}

#[inline]
fn coords(p: &Point) -> &[f64] {
    match p {
        Point::Coords(c) => c,
        Point::Index(_) => unreachable!("coordinate space received an index point"),
    }
}

#[inline]
fn index(p: &Point) -> usize {
    match p {
        Point::Index(i) => *i,
        Point::Coords(_) => unreachable!("abstract space received a coordinate point"),
    }
}

#[inline]
fn euclidean(a: &[f64], b: &[f64]) -> f64 {
    a.iter()
        .zip(b)
        .map(|(x, y)| (x - y) * (x - y))
        .sum::<f64>()
        .sqrt()
}

/// `2 asinh(|p - q| / (2 sqrt(y_p y_q)))`, the half-plane distance written
/// without the cancellation of the `acosh` form.
#[inline]
fn hyperbolic(a: &[f64], b: &[f64]) -> f64 {
    let chord = (a[0] - b[0]).hypot(a[1] - b[1]);
    2.0 * (chord / (2.0 * (a[1] * b[1]).sqrt())).asinh()
}

#[inline]
fn koranyi(a: &[f64], b: &[f64]) -> f64 {
    let dx = b[0] - a[0];
    let dy = b[1] - a[1];
    let dt = b[2] - a[2] + 2.0 * (a[0] * b[1] - a[1] * b[0]);
    let r2 = dx * dx + dy * dy;
    (r2 * r2 + dt * dt).sqrt().sqrt()
}

/// Ordered, duplicate-free finite set of points of one space.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct PointConfiguration {
    space: MetricSpace,
    points: Vec<Point>,
}

impl PointConfiguration {
    /// Validates the space, every point, `|C| >= 2`, and that all pairwise
    /// distances are strictly positive. O(n²) distance evaluations.
    pub fn new(space: MetricSpace, points: Vec<Point>) -> Result<Self> {
        space.validate()?;
        if points.len() < 2 {
            return Err(Error::TooFewPoints(points.len()));
        }
        for p in &points {
            space.check_point(p)?;
        }
        for i in 0..points.len() {
            for j in (i + 1)..points.len() {
                let d = space.dist(&points[i], &points[j]);
                if d.is_nan() {
                    return Err(Error::InvalidPoint(format!(
                        "distance between points {i} and {j} is NaN"
                    )));
                }
                if d <= 0.0 {
                    return Err(Error::DuplicatePoint {
                        first: i,
                        second: j,
                    });
                }
            }
        }
        Ok(Self { space, points })
    }

    /// Every point of an index-addressed space, in index order.
    pub fn all_of(space: MetricSpace) -> Result<Self> {
        let n = space.abstract_size().ok_or_else(|| {
            Error::InvalidSpace(format!("{} has no finite point set", space.label()))
        })?;
        Self::new(space, (0..n).map(Point::Index).collect())
    }

    /// The same points viewed in another space (typically a wrapper of this one).
    pub fn with_space(&self, space: MetricSpace) -> Result<Self> {
        Self::new(space, self.points.clone())
    }

    /// Sub-configuration made of the given indices, in the given order.
    pub fn subset(&self, indices: &[usize]) -> Result<Self> {
        Self::new(
            self.space.clone(),
            indices.iter().map(|&i| self.points[i].clone()).collect(),
        )
    }

    pub fn space(&self) -> &MetricSpace {
        &self.space
    }

    pub fn points(&self) -> &[Point] {
        &self.points
    }

    pub fn point(&self, i: usize) -> &Point {
        &self.points[i]
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    #[inline]
    pub fn distance(&self, i: usize, j: usize) -> f64 {
        self.space.dist(&self.points[i], &self.points[j])
    }

    /// Distance from an arbitrary (validated) point of the space to `C[j]`.
    #[inline]
    pub(crate) fn distance_to(&self, p: &Point, j: usize) -> f64 {
        self.space.dist(p, &self.points[j])
    }

    /// Indices `i` with `d(center, C[i]) < r` (open ball).
    pub fn ball_members(&self, center: &Point, r: f64) -> Result<Vec<usize>> {
        self.space.check_point(center)?;
        if r.is_nan() || r <= 0.0 {
            return Err(Error::InvalidParameter(format!(
                "ball radius must be positive, got {r}"
            )));
        }
        Ok((0..self.len())
            .filter(|&i| self.distance_to(center, i) < r)
            .collect())
    }

    pub fn diameter(&self) -> f64 {
        let mut best: f64 = 0.0;
        for i in 0..self.len() {
            for j in (i + 1)..self.len() {
                best = best.max(self.distance(i, j));
            }
        }
        best
    }

    pub fn min_pairwise_distance(&self) -> f64 {
        let mut best = f64::INFINITY;
        for i in 0..self.len() {
            for j in (i + 1)..self.len() {
                best = best.min(self.distance(i, j));
            }
        }
        best
    }

    pub fn distance_table(&self) -> DistanceTable {
        DistanceTable::new(self)
    }
}

/// Dense `n × n` table of pairwise distances of a configuration.
#[derive(Clone, Debug)]
pub struct DistanceTable {
    n: usize,
    data: Vec<f64>,
}

impl DistanceTable {
    pub fn new(config: &PointConfiguration) -> Self {
        let n = config.len();
        let mut data = vec![0.0; n * n];
        for i in 0..n {
            for j in (i + 1)..n {
                let d = config.distance(i, j);
                data[i * n + j] = d;
                data[j * n + i] = d;
            }
        }
        Self { n, data }
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.data[i * self.n + j]
    }

    pub fn row(&self, i: usize) -> &[f64] {
        &self.data[i * self.n..(i + 1) * self.n]
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }
}
