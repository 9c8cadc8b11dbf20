//! Property bodies shared by the property-test target and the acceptance run.
//! Each runs a deterministic proptest runner over `CASES` seeded instances.

use std::fmt::Debug;

use proptest::prelude::*;
use proptest::test_runner::{Config, RngAlgorithm, TestCaseError, TestRng, TestRunner};

use bslemma::covering::{dilate_container, is_covering, is_separated};
use bslemma::support::point_deficits;
use bslemma::{
    estimate_doubling, generate_configuration, greedy_net, supported_points,
    vitali_disjoint_subfamily, BallFamily, GeneratorFamily, GeneratorSpec, MetricSpace, Point,
    PointConfiguration, SolverMode, SupportParams,
};

use super::{coords2, planar, uniform};

pub const CASES: u32 = 128;

const EXACT: SolverMode = SolverMode::EuclideanExact2D;

fn check<S>(strategy: S, test: impl Fn(S::Value) -> Result<(), TestCaseError>) -> Result<(), String>
where
    S: Strategy,
    S::Value: Debug,
{
    let config = Config {
        cases: CASES,
        failure_persistence: None,
        ..Config::default()
    };
    let mut runner =
        TestRunner::new_with_rng(config, TestRng::deterministic_rng(RngAlgorithm::ChaCha));
    runner.run(&strategy, test).map_err(|e| e.to_string())
}

fn deficits(c: &PointConfiguration, delta: f64, mode: SolverMode) -> Vec<usize> {
    point_deficits(c, delta, mode)
        .unwrap()
        .into_iter()
        .map(|p| p.deficit)
        .collect()
}

fn transformed(c: &PointConfiguration, f: impl Fn([f64; 2]) -> [f64; 2]) -> PointConfiguration {
    let pts: Vec<[f64; 2]> = coords2(c).into_iter().map(f).collect();
    planar(&pts)
}

pub fn supported_sets_shrink_as_s_grows() -> Result<(), String> {
    check(
        (any::<u64>(), 3usize..=30, 0.05f64..0.95, 2usize..=12),
        |(seed, n, delta, s)| {
            let c = uniform(2, n, seed);
            let a = supported_points(&c, SupportParams::new(delta, s).unwrap(), EXACT).unwrap();
            let b = supported_points(&c, SupportParams::new(delta, s + 1).unwrap(), EXACT).unwrap();
            prop_assert_eq!(a.deficits(), b.deficits());
            let wide = a.supported_indices();
            prop_assert!(b.supported_indices().iter().all(|i| wide.contains(i)));
            Ok(())
        },
    )
}

pub fn deficits_grow_as_delta_shrinks() -> Result<(), String> {
    check(
        (any::<u64>(), 3usize..=30, 0.05f64..0.95, 0.05f64..0.95),
        |(seed, n, d1, d2)| {
            let (lo, hi) = (d1.min(d2), d1.max(d2));
            let c = uniform(2, n, seed);
            for mode in [EXACT, SolverMode::RestrictedToC] {
                let small = deficits(&c, lo, mode);
                let large = deficits(&c, hi, mode);
                prop_assert!(
                    small.iter().zip(&large).all(|(a, b)| a >= b),
                    "{mode}: {small:?} vs {large:?}"
                );
            }
            Ok(())
        },
    )
}

pub fn deficits_survive_rigid_motions() -> Result<(), String> {
    let strategy = (
        any::<u64>(),
        3usize..=30,
        0.05f64..0.95,
        0.0f64..std::f64::consts::TAU,
        -5.0f64..5.0,
        -5.0f64..5.0,
    );
    check(strategy, |(seed, n, delta, theta, tx, ty)| {
        let c = uniform(2, n, seed);
        let (sin, cos) = theta.sin_cos();
        let moved = transformed(&c, |[x, y]| {
            [cos * x - sin * y + tx, sin * x + cos * y + ty]
        });
        prop_assert_eq!(deficits(&c, delta, EXACT), deficits(&moved, delta, EXACT));
        Ok(())
    })
}

pub fn deficits_survive_scaling() -> Result<(), String> {
    check(
        (any::<u64>(), 3usize..=30, 0.05f64..0.95, -3.0f64..3.0),
        |(seed, n, delta, e)| {
            let c = uniform(2, n, seed);
            let lam = 10f64.powf(e);
            let scaled = transformed(&c, |[x, y]| [lam * x, lam * y]);
            prop_assert_eq!(deficits(&c, delta, EXACT), deficits(&scaled, delta, EXACT));
            Ok(())
        },
    )
}

fn planar_or_hyperbolic(seed: u64, n: usize, hyperbolic: bool) -> PointConfiguration {
    let family = if hyperbolic {
        GeneratorFamily::HyperbolicDisk { radius: 3.0 }
    } else {
        GeneratorFamily::UniformSquare { dim: 2 }
    };
    generate_configuration(&GeneratorSpec::new(family, n, seed)).unwrap()
}

pub fn greedy_nets_cover_and_separate() -> Result<(), String> {
    check(
        (any::<u64>(), 2usize..=60, -3.0f64..0.5, any::<bool>()),
        |(seed, n, e, hyp)| {
            let c = planar_or_hyperbolic(seed, n, hyp);
            let r = 10f64.powf(e);
            let net = greedy_net(&c, r).unwrap();
            prop_assert!(is_covering(&c, &net.net, r));
            prop_assert!(is_separated(&c, &net.net, r));
            Ok(())
        },
    )
}

pub fn vitali_subfamily_is_disjoint_and_dilates_cover() -> Result<(), String> {
    check(
        (any::<u64>(), 2usize..=60, -3.0f64..0.5, any::<bool>()),
        |(seed, n, e, hyp)| {
            let c = planar_or_hyperbolic(seed, n, hyp);
            let r = 10f64.powf(e);
            let family = BallFamily::around_all(&c, r).unwrap();
            let kept = vitali_disjoint_subfamily(&c, &family).unwrap();
            for (a, &i) in kept.iter().enumerate() {
                for &j in &kept[a + 1..] {
                    prop_assert!(c.distance(i, j) >= 2.0 * r);
                    let shared = (0..c.len()).any(|p| c.distance(p, i) < r && c.distance(p, j) < r);
                    prop_assert!(!shared);
                }
            }
            for &center in &family.centers {
                prop_assert!(dilate_container(&c, &kept, center, r, 5.0).is_some());
            }
            Ok(())
        },
    )
}

pub fn doubling_estimate_is_deterministic() -> Result<(), String> {
    check(
        (any::<u64>(), 4usize..=60, any::<u64>()),
        |(seed, n, sample_seed)| {
            let c = uniform(2, n, seed);
            let a = estimate_doubling(&c, 40, sample_seed).unwrap();
            let b = estimate_doubling(&c, 40, sample_seed).unwrap();
            prop_assert_eq!(&a, &b);
            // scaling by 4 is exact in binary floating point
            let scaled = transformed(&c, |[x, y]| [4.0 * x, 4.0 * y]);
            let s = estimate_doubling(&scaled, 40, sample_seed).unwrap();
            prop_assert_eq!(a.d_hat, s.d_hat);
            let counts = |e: &bslemma::DoublingEstimate| {
                e.samples
                    .iter()
                    .map(|x| (x.center, x.cover_count, x.coarse_count))
                    .collect::<Vec<_>>()
            };
            prop_assert_eq!(counts(&a), counts(&s));
            Ok(())
        },
    )
}

pub fn metric_axioms_hold() -> Result<(), String> {
    check(
        (
            0usize..4,
            prop::array::uniform9(-3.0f64..3.0),
            0.05f64..0.95,
        ),
        |(kind, v, eps)| {
            let (space, pts): (MetricSpace, Vec<Vec<f64>>) = match kind {
                0 => (
                    MetricSpace::euclidean(3),
                    v.chunks(3).map(|c| c.to_vec()).collect(),
                ),
                1 => (
                    MetricSpace::HyperbolicHalfPlane,
                    v.chunks(3).map(|c| vec![c[0], c[1].abs() + 0.05]).collect(),
                ),
                2 => (
                    MetricSpace::HeisenbergGauge,
                    v.chunks(3).map(|c| c.to_vec()).collect(),
                ),
                _ => (
                    MetricSpace::snowflake(MetricSpace::euclidean(2), eps).unwrap(),
                    v.chunks(3).map(|c| vec![c[0], c[1]]).collect(),
                ),
            };
            let p: Vec<Point> = pts.into_iter().map(Point::Coords).collect();
            let d = |a: usize, b: usize| space.distance(&p[a], &p[b]).unwrap();
            let k = space.quasi_triangle_constant();
            for a in 0..3 {
                prop_assert_eq!(d(a, a), 0.0);
                for b in 0..3 {
                    prop_assert_eq!(d(a, b), d(b, a));
                    for m in 0..3 {
                        prop_assert!(d(a, b) <= k * (d(a, m) + d(m, b)) * (1.0 + 1e-12) + 1e-300);
                    }
                }
            }
            Ok(())
        },
    )
}

pub fn snowflakes_compose() -> Result<(), String> {
    check(
        (
            prop::array::uniform4(-10.0f64..10.0),
            0.05f64..0.95,
            0.05f64..0.95,
        ),
        |(v, a, b)| {
            let twice = MetricSpace::snowflake(
                MetricSpace::snowflake(MetricSpace::euclidean(2), a).unwrap(),
                b,
            )
            .unwrap();
            let (p, q) = (
                Point::Coords(vec![v[0], v[1]]),
                Point::Coords(vec![v[2], v[3]]),
            );
            let base = MetricSpace::euclidean(2).distance(&p, &q).unwrap();
            let got = twice.distance(&p, &q).unwrap();
            let want = base.powf(a * b);
            prop_assert!(
                (got - want).abs() <= 1e-12 * want.max(1e-300),
                "{got} vs {want}"
            );
            Ok(())
        },
    )
}

pub fn solvers_are_ordered() -> Result<(), String> {
    check(
        (any::<u64>(), 3usize..=15, 0.1f64..0.95),
        |(seed, n, delta)| {
            let c = uniform(2, n, seed);
            let exact = deficits(&c, delta, EXACT);
            let grid = deficits(&c, delta, SolverMode::CandidateGrid { resolution: 16 });
            let restricted = deficits(&c, delta, SolverMode::RestrictedToC);
            for w in 0..n {
                prop_assert!(exact[w] <= grid[w] && grid[w] <= restricted[w]);
            }
            Ok(())
        },
    )
}

pub fn snowflake_transfer_is_exact() -> Result<(), String> {
    check(
        (
            any::<u64>(),
            3usize..=25,
            1usize..=2,
            0.1f64..0.95,
            0.05f64..0.95,
        ),
        |(seed, n, dim, eps, delta)| {
            let c = uniform(dim, n, seed);
            let report =
                bslemma::experiments::check_snowflake_transfer(&c, eps, delta, EXACT).unwrap();
            prop_assert!(report.equal);
            prop_assert!(report.boundary_hits.is_empty());
            Ok(())
        },
    )
}

pub type Property = (&'static str, fn() -> Result<(), String>);

/// The invariant suite, in reporting order.
pub const ALL: [Property; 11] = [
    (
        "supported sets shrink as s grows",
        supported_sets_shrink_as_s_grows,
    ),
    (
        "deficits grow as delta shrinks",
        deficits_grow_as_delta_shrinks,
    ),
    (
        "deficits survive rigid motions",
        deficits_survive_rigid_motions,
    ),
    ("deficits survive scaling", deficits_survive_scaling),
    (
        "greedy nets cover and separate",
        greedy_nets_cover_and_separate,
    ),
    (
        "vitali subfamily disjoint, 5-dilates cover",
        vitali_subfamily_is_disjoint_and_dilates_cover,
    ),
    (
        "doubling estimate deterministic",
        doubling_estimate_is_deterministic,
    ),
    ("metric axioms", metric_axioms_hold),
    ("snowflakes compose", snowflakes_compose),
    ("solver ordering", solvers_are_ordered),
    ("snowflake transfer exact", snowflake_transfer_is_exact),
];
