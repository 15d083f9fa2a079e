//! Coordinate-first generators. Figures are drawn first and their angles
//! measured here, independently of the realizer.
#![allow(dead_code)]

use rand::Rng;
use trirealize::{AngleAssignment, Figure, Point2};

pub struct Drawn {
    pub figure: Figure,
    pub points: Vec<Point2>,
    pub angles: AngleAssignment,
}

/// Angle at `x` between the rays to `p` and `q`, in degrees.
pub fn corner(x: Point2, p: Point2, q: Point2) -> f64 {
    let (u, v) = (p - x, q - x);
    u.cross(v).atan2(u.dot(v)).abs().to_degrees()
}

pub fn measure(points: &[Point2], triangles: &[[usize; 3]]) -> Vec<[f64; 3]> {
    triangles
        .iter()
        .map(|&[a, b, c]| {
            let [pa, pb, pc] = [points[a], points[b], points[c]];
            [corner(pa, pb, pc), corner(pb, pc, pa), corner(pc, pa, pb)]
        })
        .collect()
}

fn orient(a: Point2, b: Point2, c: Point2) -> f64 {
    (b - a).cross(c - a)
}

fn assemble(name: &str, points: Vec<Point2>, triangles: Vec<[usize; 3]>) -> Drawn {
    let labels: Vec<String> = (0..points.len()).map(|i| format!("v{i}")).collect();
    let tris: Vec<[String; 3]> = triangles.iter().map(|t| t.map(|k| labels[k].clone())).collect();
    let figure = Figure::new_valid(name, &labels, &tris).expect("generated figure is valid");
    let angles = AngleAssignment::new(&figure, measure(&points, &triangles)).unwrap();
    Drawn { figure, points, angles }
}

/// Convex polygon with vertices on the unit circle, fan-triangulated, with
/// interior points inserted one at a time by splitting the triangle that
/// contains each. Every angle stays above `min_angle` degrees.
pub fn random_convex_triangulation(rng: &mut impl Rng, min_angle: f64) -> Drawn {
    'retry: loop {
        let k = rng.random_range(3..=8);
        let mut headings: Vec<f64> = (0..k).map(|_| rng.random_range(0.0..360.0)).collect();
        headings.sort_by(f64::total_cmp);
        let mut points: Vec<Point2> = headings.iter().map(|&h| Point2::from_angle_deg(h)).collect();
        let mut triangles: Vec<[usize; 3]> = (1..k - 1).map(|i| [0, i, i + 1]).collect();
        let inner = rng.random_range(0..=6);
        for _ in 0..inner {
            let t = rng.random_range(0..triangles.len());
            let [a, b, c] = triangles[t];
            // random barycentric point away from the sides
            let w: [f64; 3] = [rng.random_range(0.2..1.0), rng.random_range(0.2..1.0), rng.random_range(0.2..1.0)];
            let s = w[0] + w[1] + w[2];
            let p = points[a] * (w[0] / s) + points[b] * (w[1] / s) + points[c] * (w[2] / s);
            let n = points.len();
            points.push(p);
            triangles[t] = [a, b, n];
            triangles.push([b, c, n]);
            triangles.push([c, a, n]);
        }
        for &[a, b, c] in &triangles {
            debug_assert!(orient(points[a], points[b], points[c]) > 0.0);
        }
        if measure(&points, &triangles).iter().flatten().any(|&x| x < min_angle) {
            continue 'retry;
        }
        return assemble("random", points, triangles);
    }
}

/// Fan of `n` triangles around an interior center `O` (index 0) with rim
/// points at random headings and distances. Non-central angles are at least
/// `min_angle` and central angles stay below 180.
pub fn random_fan(rng: &mut impl Rng, n: usize, min_angle: f64) -> Drawn {
    loop {
        let mut headings: Vec<f64> = (0..n).map(|_| rng.random_range(0.0..360.0)).collect();
        headings.sort_by(f64::total_cmp);
        let gaps_ok = (0..n).all(|i| {
            let next = if i + 1 == n { headings[0] + 360.0 } else { headings[i + 1] };
            let g = next - headings[i];
            g > min_angle && g < 180.0 - 2.0 * min_angle
        });
        if !gaps_ok {
            continue;
        }
        let mut points = vec![Point2::ORIGIN];
        points.extend(headings.iter().map(|&h| Point2::from_angle_deg(h) * rng.random_range(0.5..2.0)));
        let triangles: Vec<[usize; 3]> = (0..n).map(|i| [0, i + 1, (i + 1) % n + 1]).collect();
        if measure(&points, &triangles).iter().flatten().any(|&x| x < min_angle) {
            continue;
        }
        // the rim must stay convex for the figure to be a convex fan
        let convex = (0..n).all(|i| {
            let [a, b, c] = [i, (i + 1) % n, (i + 2) % n].map(|k| points[k + 1]);
            orient(a, b, c) > 0.0
        });
        if convex {
            return assemble("fan", points, triangles);
        }
    }
}
