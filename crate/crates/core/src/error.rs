use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid point: {0}")]
    InvalidPoint(String),

    #[error("invalid space descriptor: {0}")]
    InvalidSpace(String),

    #[error("metric axiom violated: {0}")]
    MetricAxiom(String),

    #[error("duplicate points at indices {first} and {second} (zero distance)")]
    DuplicatePoint { first: usize, second: usize },

    #[error("configuration has {0} point(s); at least 2 are required")]
    TooFewPoints(usize),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("solver mode mismatch: {0}")]
    ModeMismatch(String),

    #[error("generation failed: {0}")]
    Generation(String),

    #[error("degenerate witness: only {0} center(s) selected")]
    DegenerateWitness(usize),

    #[error("invalid transfer map: {0}")]
    InvalidMap(String),

    #[error("empty input: {0}")]
    EmptyInput(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("I/O error: {0}")]
    Io(#[from] std::io::Error),
}

impl Error {
    /// Short machine-readable tag for diagnostics.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::InvalidPoint(_) => "invalid_point",
            Error::InvalidSpace(_) => "invalid_space",
            Error::MetricAxiom(_) => "metric_axiom",
            Error::DuplicatePoint { .. } => "duplicate_point",
            Error::TooFewPoints(_) => "too_few_points",
            Error::InvalidParameter(_) => "invalid_parameter",
            Error::ModeMismatch(_) => "mode_mismatch",
            Error::Generation(_) => "generation",
            Error::DegenerateWitness(_) => "degenerate_witness",
            Error::InvalidMap(_) => "invalid_map",
            Error::EmptyInput(_) => "empty_input",
            Error::Parse(_) => "parse",
            Error::Io(_) => "io",
        }
    }

    /// Internal errors are failures of the environment rather than of the input.
    pub fn is_internal(&self) -> bool {
        matches!(self, Error::Io(_) | Error::Generation(_))
    }
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        if e.is_io() {
            Error::Io(std::io::Error::other(e))
        } else {
            Error::Parse(e.to_string())
        }
    }
}

impl From<csv::Error> for Error {
    fn from(e: csv::Error) -> Self {
        match e.into_kind() {
            csv::ErrorKind::Io(io) => Error::Io(io),
            other => Error::Parse(format!("{other:?}")),
        }
    }
}
