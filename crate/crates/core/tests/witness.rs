use bslemma::generate::polar_to_half_plane;
use bslemma::{
    construct_witness, generate_configuration, verify_witness_analytic, GeneratorFamily,
    GeneratorSpec,
};

/// Hyperbolic distance in the acosh form, independent of the library's asinh form.
fn acosh_distance(p: [f64; 2], q: [f64; 2]) -> f64 {
    let sq = (p[0] - q[0]).powi(2) + (p[1] - q[1]).powi(2);
    (1.0 + sq / (2.0 * p[1] * q[1])).acosh()
}

/// Keep a point iff it is at least `gap` from every kept point, in index order.
fn replay(points: &[[f64; 2]], gap: f64) -> Vec<usize> {
    let mut kept: Vec<usize> = Vec::new();
    for i in 0..points.len() {
        if kept
            .iter()
            .all(|&k| acosh_distance(points[i], points[k]) >= gap)
        {
            kept.push(i);
        }
    }
    kept
}

#[test]
fn hyperbolic_circle_witnesses_grow_with_radius() {
    let count = 2000;
    let mut sizes = Vec::new();
    for radius in [4.0, 6.0, 8.0] {
        let a = generate_configuration(&GeneratorSpec::new(
            GeneratorFamily::HyperbolicCircle { radius },
            count,
            0,
        ))
        .unwrap();
        let w = construct_witness(&a).unwrap();
        assert!(w.verified);
        assert!(verify_witness_analytic(&a, &w));

        // equally spaced angles, as the generator promises
        let points: Vec<[f64; 2]> = (0..count)
            .map(|k| polar_to_half_plane(radius, std::f64::consts::TAU * k as f64 / count as f64))
            .collect();
        for (k, p) in a.points().iter().enumerate() {
            let c = p.coords().unwrap();
            assert!((c[0] - points[k][0]).abs() < 1e-9 && (c[1] - points[k][1]).abs() < 1e-9);
        }
        // antipodal points realize the diameter 2R
        assert!((w.diameter - 2.0 * radius).abs() < 1e-6 * radius);
        let expected = replay(&points, 2.0 * w.diameter / 10.0);
        assert_eq!(w.centers, expected, "radius {radius}");
        sizes.push(w.centers.len());
    }
    assert!(sizes.windows(2).all(|s| s[1] > s[0]), "{sizes:?}");
}
