//! Supported points and doubling in finite metric configurations.
//!
//! A point `w` of a finite set `C` with nearest-neighbour distance `ρ_w` is
//! `(δ, s)`-supported when no single ball of radius `δρ_w` can remove all but
//! fewer than `s` points of `C` from the ball `B(w, ρ_w/δ)`. In doubling spaces
//! such points make up at most a `c(δ)/s` fraction of any `C`; in non-doubling
//! spaces, well-separated sets of any size consist entirely of them.
//!
//! The crate computes these quantities and the objects around them:
//!
//! * [`metric`]: distance oracles ([`MetricSpace`]) and configurations
//!   ([`PointConfiguration`]); [`generate`] builds seeded families.
//! * [`support`]: isolation radii, deficits and supported sets, with an exact
//!   planar solver and conservative finite-candidate solvers.
//! * [`covering`]: greedy nets, Vitali-type disjoint subfamilies, doubling estimates.
//! * [`witness`]: the well-separated center sets that defeat any uniform bound
//!   in non-doubling spaces, verified analytically.
//! * [`experiments`]: sweeps of supported fractions and the snowflake and
//!   bi-Lipschitz transfer checks.
//! * [`config`], [`records`], [`cli`]: JSON input, CSV/JSON output, and the
//!   `bslemma` binary.
//!
//! ```
//! use bslemma::{construct_witness, MetricSpace, PointConfiguration};
//!
//! let a = PointConfiguration::all_of(MetricSpace::equilateral(10)).unwrap();
//! let w = construct_witness(&a).unwrap();
//! assert!(w.verified);
//! assert_eq!(w.s_achieved, 9);
//! ```

pub mod cli;
pub mod config;
pub mod covering;
pub mod error;
pub mod experiments;
pub mod generate;
pub mod metric;
pub mod records;
pub mod support;
pub mod witness;

pub use config::{load_config, write_config, PointSource};
pub use covering::{
    doubling_count, estimate_doubling, greedy_net, vitali_disjoint_subfamily, BallFamily,
    DoublingEstimate, NetResult,
};
pub use error::{Error, Result};
pub use generate::{generate_configuration, GeneratorFamily, GeneratorSpec};
pub use metric::{DistanceMatrix, MetricSpace, Point, PointConfiguration, DEFAULT_TOLERANCE};
pub use support::{
    isolation_radius, max_ball_coverage, supported_deficit, supported_points, Exactness,
    SolverMode, SupportParams, SupportReport,
};
pub use witness::{construct_witness, verify_witness_analytic, WitnessResult, WITNESS_DELTA};
