#![allow(dead_code)]

pub mod props;

use bslemma::{
    generate_configuration, GeneratorFamily, GeneratorSpec, MetricSpace, Point, PointConfiguration,
};

pub fn uniform(dim: usize, count: usize, seed: u64) -> PointConfiguration {
    generate_configuration(&GeneratorSpec::new(
        GeneratorFamily::UniformSquare { dim },
        count,
        seed,
    ))
    .unwrap()
}

pub fn planar(points: &[[f64; 2]]) -> PointConfiguration {
    PointConfiguration::new(
        MetricSpace::euclidean(2),
        points.iter().map(|p| Point::Coords(p.to_vec())).collect(),
    )
    .unwrap()
}

pub fn coords2(config: &PointConfiguration) -> Vec<[f64; 2]> {
    config
        .points()
        .iter()
        .map(|p| {
            let c = p.coords().unwrap();
            [c[0], c[1]]
        })
        .collect()
}

fn dist(a: [f64; 2], b: [f64; 2]) -> f64 {
    ((a[0] - b[0]).powi(2) + (a[1] - b[1]).powi(2)).sqrt()
}

/// Brute-force maximum number of `pts` inside one open disk of radius `r`.
///
/// Centers run over horizontal lines spaced `pitch · (box side)` apart across
/// the box of all centers that can reach any point. On each line the disk
/// around a point is an open interval of centers, and the best center on the
/// line is found by sweeping interval endpoints. Intervals are shrunk by a
/// relative `1e-12` so that points exactly `2r` apart, as the nearest pair
/// is at `δ = 1/2`, never share a disk through rounding.
pub fn grid_coverage(pts: &[[f64; 2]], r: f64, pitch: f64) -> usize {
    if pts.is_empty() {
        return 0;
    }
    let r = r * (1.0 - 1e-12);
    let (mut x0, mut x1, mut y0, mut y1) = (f64::MAX, f64::MIN, f64::MAX, f64::MIN);
    for p in pts {
        x0 = x0.min(p[0] - r);
        x1 = x1.max(p[0] + r);
        y0 = y0.min(p[1] - r);
        y1 = y1.max(p[1] + r);
    }
    let h = pitch * (x1 - x0).max(y1 - y0);
    let rows = ((y1 - y0) / h).ceil() as usize;
    let mut best = 0;
    let mut events: Vec<(f64, i32)> = Vec::with_capacity(2 * pts.len());
    for k in 0..=rows {
        let y = y0 + k as f64 * h;
        events.clear();
        for p in pts {
            let dy = p[1] - y;
            let w2 = r * r - dy * dy;
            if w2 > 0.0 {
                let w = w2.sqrt();
                events.push((p[0] - w, 1));
                events.push((p[0] + w, -1));
            }
        }
        // open intervals: at equal x, close before opening
        events.sort_by(|a, b| a.0.total_cmp(&b.0).then(a.1.cmp(&b.1)));
        let mut depth = 0i32;
        for &(_, e) in &events {
            depth += e;
            best = best.max(depth as usize);
        }
    }
    best
}

pub fn brute_isolation(pts: &[[f64; 2]], w: usize) -> f64 {
    (0..pts.len())
        .filter(|&i| i != w)
        .map(|i| dist(pts[w], pts[i]))
        .fold(f64::INFINITY, f64::min)
}

/// Deficit of every point, from first principles and [`grid_coverage`].
pub fn grid_deficits(pts: &[[f64; 2]], delta: f64, pitch: f64) -> Vec<usize> {
    (0..pts.len())
        .map(|w| {
            let rho = brute_isolation(pts, w);
            let outer: Vec<[f64; 2]> = pts
                .iter()
                .copied()
                .filter(|&p| dist(pts[w], p) < rho / delta)
                .collect();
            outer.len() - grid_coverage(&outer, delta * rho, pitch)
        })
        .collect()
}
