//! Direct coordinate constructions: rays, line intersections, circle points
//! and angle measurement. Nothing here goes through the realizer.

use crate::figure::Figure;
use crate::geom::Point2;

/// A line through `p` with direction `u` (not necessarily unit).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Line {
    pub p: Point2,
    pub u: Point2,
}

impl Line {
    pub fn through(a: Point2, b: Point2) -> Self {
        Self { p: a, u: b - a }
    }

    pub fn distance(&self, q: Point2) -> f64 {
        (q - self.p).cross(self.u).abs() / self.u.norm()
    }

    /// Parameter `s` with `self.p + s·self.u` closest to `q`.
    pub fn param(&self, q: Point2) -> f64 {
        (q - self.p).dot(self.u) / self.u.dot(self.u)
    }
}

/// Intersection of two lines, `None` when they are parallel to working
/// precision.
pub fn meet(l: Line, m: Line) -> Option<Point2> {
    let den = l.u.cross(m.u);
    if den.abs() <= 1e-14 * l.u.norm() * m.u.norm() {
        return None;
    }
    let s = (m.p - l.p).cross(m.u) / den;
    Some(l.p + l.u * s)
}

/// Unit vector at `deg` degrees counterclockwise from the x axis.
pub fn unit(deg: f64) -> Point2 {
    let r = deg.to_radians();
    Point2::new(r.cos(), r.sin())
}

/// Direction of `to − from` in degrees.
pub fn heading(from: Point2, to: Point2) -> f64 {
    let d = to - from;
    d.y.atan2(d.x).to_degrees()
}

/// Ray from `x` obtained by turning the direction `x → p` by `deg` degrees
/// toward `x → q`.
pub fn toward(x: Point2, p: Point2, q: Point2, deg: f64) -> Line {
    let sign = if (p - x).cross(q - x) >= 0.0 { 1.0 } else { -1.0 };
    Line { p: x, u: unit(heading(x, p) + sign * deg) }
}

/// Unsigned angle `a x b` at `x`, in degrees, computed from the two headings.
pub fn angle(x: Point2, a: Point2, b: Point2) -> f64 {
    let d = (heading(x, a) - heading(x, b)).abs() % 360.0;
    if d > 180.0 {
        360.0 - d
    } else {
        d
    }
}

pub fn incenter(a: Point2, b: Point2, c: Point2) -> Point2 {
    let (la, lb, lc) = (b.dist(c), c.dist(a), a.dist(b));
    (a * la + b * lb + c * lc) * (1.0 / (la + lb + lc))
}

/// Corner angles of every triangle of `figure` drawn at `points`.
pub fn measure(figure: &Figure, points: &[Point2]) -> Vec<[f64; 3]> {
    figure
        .triangles()
        .iter()
        .map(|t| {
            let [a, b, c] = t.corners.map(|k| points[k]);
            [angle(a, b, c), angle(b, c, a), angle(c, a, b)]
        })
        .collect()
}

pub fn diameter(points: &[Point2]) -> f64 {
    let mut d: f64 = 0.0;
    for (i, p) in points.iter().enumerate() {
        for q in &points[i + 1..] {
            d = d.max(p.dist(*q));
        }
    }
    d
}

/// Largest `|x/y − 1|` over ordered pairs of the three sides of `pqr`.
pub fn equilateral_deviation(p: Point2, q: Point2, r: Point2) -> f64 {
    let s = [p.dist(q), q.dist(r), r.dist(p)];
    let mut worst: f64 = 0.0;
    for x in s {
        for y in s {
            worst = worst.max((x / y - 1.0).abs());
        }
    }
    worst
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn meet_and_angle() {
        let l = Line::through(Point2::new(0.0, 0.0), Point2::new(1.0, 1.0));
        let m = Line::through(Point2::new(0.0, 2.0), Point2::new(2.0, 0.0));
        let x = meet(l, m).unwrap();
        assert!(x.dist(Point2::new(1.0, 1.0)) < 1e-15);
        assert!(meet(l, Line { p: Point2::new(0.0, 1.0), u: l.u }).is_none());
        assert!((angle(Point2::ORIGIN, Point2::new(1.0, 0.0), Point2::new(-1.0, 1e-12)) - 180.0).abs() < 1e-9);
        assert!((angle(Point2::ORIGIN, Point2::new(1.0, 0.0), Point2::new(0.0, -3.0)) - 90.0).abs() < 1e-12);
    }

    #[test]
    fn toward_turns_inside() {
        let (a, b, c) = (Point2::ORIGIN, Point2::new(1.0, 0.0), Point2::new(0.0, 1.0));
        assert!((heading(a, a + toward(a, b, c, 30.0).u) - 30.0).abs() < 1e-12);
        assert!((heading(a, a + toward(a, c, b, 30.0).u) - 60.0).abs() < 1e-12);
    }

    #[test]
    fn incenter_of_right_triangle() {
        let i = incenter(Point2::ORIGIN, Point2::new(3.0, 0.0), Point2::new(0.0, 4.0));
        assert!(i.dist(Point2::new(1.0, 1.0)) < 1e-15);
    }
}
