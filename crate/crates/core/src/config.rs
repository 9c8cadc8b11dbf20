//! JSON configuration files.
//!
//! A configuration names a space and either an explicit point list or a
//! generator. The space may be a full descriptor object
//!
//! ```json
//! { "space": { "type": "snowflake", "epsilon": 0.5,
//!              "base": { "type": "euclidean", "dim": 2 } },
//!   "points": [[0, 0], [1, 0], [0, 2]] }
//! ```
//!
//! or a bare family name with its parameter alongside it:
//!
//! ```json
//! { "space": "equilateral", "n": 10 }
//! ```
//!
//! Index-addressed spaces (equilateral, distance matrix) default to all of
//! their points when neither `points` nor `generator` is given. Distance
//! matrices may be inline (`"matrix": [[...]]`) or point at a header-less CSV
//! file (`"csv": "dist.csv"`, resolved relative to the config file).

use std::fs::File;
use std::io::BufReader;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::{Error, Result};
use crate::generate::{generate_configuration, GeneratorSpec};
use crate::metric::{DistanceMatrix, MetricSpace, Point, PointConfiguration};

/// Serialized form of [`MetricSpace`].
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum SpaceSpec {
    Euclidean {
        dim: usize,
    },
    DistanceMatrix {
        #[serde(default, skip_serializing_if = "Option::is_none")]
        matrix: Option<Vec<Vec<f64>>>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        csv: Option<PathBuf>,
    },
    Snowflake {
        base: Box<SpaceSpec>,
        epsilon: f64,
    },
    Scaled {
        base: Box<SpaceSpec>,
        lambda: f64,
    },
    #[serde(alias = "hyperbolic")]
    HyperbolicHalfPlane,
    #[serde(alias = "heisenberg")]
    HeisenbergGauge,
    Equilateral {
        size: usize,
    },
}

impl SpaceSpec {
    fn resolve_paths(&mut self, dir: &Path) {
        match self {
            SpaceSpec::DistanceMatrix {
                csv: Some(path), ..
            } if path.is_relative() => {
                *path = dir.join(&*path);
            }
            SpaceSpec::Snowflake { base, .. } | SpaceSpec::Scaled { base, .. } => {
                base.resolve_paths(dir)
            }
            _ => {}
        }
    }
}

impl TryFrom<SpaceSpec> for MetricSpace {
    type Error = Error;

    fn try_from(spec: SpaceSpec) -> Result<Self> {
        let space = match spec {
            SpaceSpec::Euclidean { dim } => MetricSpace::Euclidean { dim },
            SpaceSpec::DistanceMatrix {
                matrix: Some(rows),
                csv: None,
            } => MetricSpace::DistanceMatrix(DistanceMatrix::new(rows)?),
            SpaceSpec::DistanceMatrix {
                matrix: None,
                csv: Some(path),
            } => {
                let file = File::open(&path)?;
                MetricSpace::DistanceMatrix(DistanceMatrix::from_csv(BufReader::new(file))?)
            }
            SpaceSpec::DistanceMatrix { .. } => {
                return Err(Error::InvalidSpace(
                    "distance_matrix needs exactly one of `matrix` or `csv`".into(),
                ))
            }
            SpaceSpec::Snowflake { base, epsilon } => MetricSpace::Snowflake {
                base: Box::new(MetricSpace::try_from(*base)?),
                epsilon,
            },
            SpaceSpec::Scaled { base, lambda } => MetricSpace::Scaled {
                base: Box::new(MetricSpace::try_from(*base)?),
                lambda,
            },
            SpaceSpec::HyperbolicHalfPlane => MetricSpace::HyperbolicHalfPlane,
            SpaceSpec::HeisenbergGauge => MetricSpace::HeisenbergGauge,
            SpaceSpec::Equilateral { size } => MetricSpace::Equilateral { size },
        };
        space.validate()?;
        Ok(space)
    }
}

impl From<MetricSpace> for SpaceSpec {
    fn from(space: MetricSpace) -> Self {
        match space {
            MetricSpace::Euclidean { dim } => SpaceSpec::Euclidean { dim },
            MetricSpace::DistanceMatrix(m) => SpaceSpec::DistanceMatrix {
                matrix: Some(m.rows()),
                csv: None,
            },
            MetricSpace::Snowflake { base, epsilon } => SpaceSpec::Snowflake {
                base: Box::new((*base).into()),
                epsilon,
            },
            MetricSpace::Scaled { base, lambda } => SpaceSpec::Scaled {
                base: Box::new((*base).into()),
                lambda,
            },
            MetricSpace::HyperbolicHalfPlane => SpaceSpec::HyperbolicHalfPlane,
            MetricSpace::HeisenbergGauge => SpaceSpec::HeisenbergGauge,
            MetricSpace::Equilateral { size } => SpaceSpec::Equilateral { size },
        }
    }
}

/// On-disk layout of a configuration file.
#[derive(Clone, Debug, Default, Serialize, Deserialize)]
pub struct ConfigFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub space: Option<Value>,
    /// Size parameter for the bare-name form (`"space": "equilateral"`).
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
    /// Dimension parameter for the bare-name form (`"space": "euclidean"`).
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub dim: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub points: Option<Vec<Value>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub generator: Option<GeneratorSpec>,
}

/// Where the points of a loaded configuration come from.
#[derive(Clone, Debug)]
pub enum PointSource {
    Points(PointConfiguration),
    Generator {
        /// Space the generated points are re-viewed in, if the file names one.
        space: Option<MetricSpace>,
        spec: GeneratorSpec,
    },
}

impl PointSource {
    /// Concrete configuration: explicit points as-is, generators run.
    pub fn materialize(&self) -> Result<PointConfiguration> {
        match self {
            PointSource::Points(c) => Ok(c.clone()),
            PointSource::Generator { space, spec } => {
                let generated = generate_configuration(spec)?;
                match space {
                    Some(s) => generated.with_space(s.clone()),
                    None => Ok(generated),
                }
            }
        }
    }
}

pub fn load_config(path: impl AsRef<Path>) -> Result<PointSource> {
    let path = path.as_ref();
    let file = File::open(path)?;
    let raw: ConfigFile = serde_json::from_reader(BufReader::new(file))?;
    let dir = path.parent().unwrap_or_else(|| Path::new("."));
    parse_config(raw, dir)
}

pub fn parse_config_str(json: &str, base_dir: &Path) -> Result<PointSource> {
    let raw: ConfigFile = serde_json::from_str(json)?;
    parse_config(raw, base_dir)
}

fn parse_config(raw: ConfigFile, dir: &Path) -> Result<PointSource> {
    let space = raw
        .space
        .as_ref()
        .map(|v| parse_space(v, &raw, dir))
        .transpose()?;

    match (raw.points, raw.generator) {
        (Some(_), Some(_)) => Err(Error::Parse(
            "configuration has both `points` and `generator`".into(),
        )),
        (None, Some(spec)) => Ok(PointSource::Generator { space, spec }),
        (Some(values), None) => {
            let space = space.ok_or_else(|| Error::Parse("`points` requires `space`".into()))?;
            let points = values
                .iter()
                .map(|v| parse_point(v, &space))
                .collect::<Result<Vec<_>>>()?;
            Ok(PointSource::Points(PointConfiguration::new(space, points)?))
        }
        (None, None) => {
            let space = space
                .ok_or_else(|| Error::Parse("configuration needs `space` or `generator`".into()))?;
            Ok(PointSource::Points(PointConfiguration::all_of(space)?))
        }
    }
}

fn parse_space(v: &Value, raw: &ConfigFile, dir: &Path) -> Result<MetricSpace> {
    let mut spec = match v {
        Value::String(name) => match name.as_str() {
            "euclidean" => SpaceSpec::Euclidean {
                dim: raw
                    .dim
                    .ok_or_else(|| Error::Parse("\"euclidean\" needs `dim`".into()))?,
            },
            "equilateral" => SpaceSpec::Equilateral {
                size: raw
                    .n
                    .ok_or_else(|| Error::Parse("\"equilateral\" needs `n`".into()))?,
            },
            "hyperbolic" | "hyperbolic_half_plane" => SpaceSpec::HyperbolicHalfPlane,
            "heisenberg" | "heisenberg_gauge" => SpaceSpec::HeisenbergGauge,
            other => return Err(Error::Parse(format!("unknown space name {other:?}"))),
        },
        other => SpaceSpec::deserialize(other)?,
    };
    spec.resolve_paths(dir);
    MetricSpace::try_from(spec)
}

fn parse_point(v: &Value, space: &MetricSpace) -> Result<Point> {
    let bad = || Error::Parse(format!("cannot read {v} as a point of {}", space.label()));
    match v {
        Value::Number(num) if space.abstract_size().is_some() => {
            let i = num.as_u64().ok_or_else(bad)?;
            Ok(Point::Index(i as usize))
        }
        Value::Number(num) if space.coordinate_dim() == Some(1) => {
            Ok(Point::Coords(vec![num.as_f64().ok_or_else(bad)?]))
        }
        Value::Array(items) => items
            .iter()
            .map(|x| x.as_f64().ok_or_else(bad))
            .collect::<Result<Vec<_>>>()
            .map(Point::Coords),
        _ => Err(bad()),
    }
}

impl ConfigFile {
    /// Explicit-points form of a configuration, suitable for writing back out.
    pub fn from_configuration(config: &PointConfiguration) -> Self {
        let space: SpaceSpec = config.space().clone().into();
        let points = config
            .points()
            .iter()
            .map(|p| serde_json::to_value(p).expect("points serialize"))
            .collect();
        ConfigFile {
            space: Some(serde_json::to_value(space).expect("space serializes")),
            points: Some(points),
            ..Default::default()
        }
    }
}

pub fn write_config(path: impl AsRef<Path>, config: &PointConfiguration) -> Result<()> {
    let file = File::create(path)?;
    serde_json::to_writer_pretty(file, &ConfigFile::from_configuration(config))?;
    Ok(())
}
