//! Planar construction of a realizable assignment.
//!
//! Starting from a seed triangle, the fans of interior vertices are completed
//! first, then those of perimeter vertices. A triangle with one placed edge
//! gets its third corner by intersecting the two rays its base angles define
//! (lengths by the sine rule). When all three corners of a triangle are
//! already placed it is closed by joining them, and the angles the joining
//! segment actually makes are compared with the assignment.

mod svg;

pub use svg::to_svg;

use crate::angles::AngleAssignment;
use crate::figure::{Fan, FanShape, Figure, VertexId};
use crate::geom::{diameter, fmt9, normalize_pose, orient2, Point2};
use serde::Serialize;
use std::collections::HashMap;
use std::fmt;
use thiserror::Error;

/// Angles this close to 0 or 180 are rejected before construction.
pub const DEGENERATE_ANGLE: f64 = 1e-9;
/// Minimum triangle area relative to the squared figure diameter.
pub const MIN_RELATIVE_AREA: f64 = 1e-12;
/// Tolerance on normalized cross products in the convexity test.
pub const CONVEX_TOL: f64 = 1e-9;
/// Angles below this many degrees trigger a conditioning warning.
pub const WARN_ANGLE: f64 = 1.0;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum RealizeError {
    #[error("angle block has {got} rows for {expected} triangles")]
    MissingAngles { expected: usize, got: usize },
    #[error("angle {value} at triangle {triangle} corner {slot} is within {DEGENERATE_ANGLE} of 0 or 180")]
    DegenerateAngle { triangle: usize, slot: usize, value: f64 },
    #[error("seed triangle {0} does not exist")]
    BadSeed(usize),
    #[error("closing triangle {triangle} at {vertex} misses its angles by {residual} degrees")]
    Closure { vertex: String, triangle: usize, residual: f64 },
    #[error("triangle {triangle} corner {slot}: measured angle differs from assignment by {residual} degrees")]
    AngleMismatch { triangle: usize, slot: usize, residual: f64 },
    #[error("triangle {triangle} is degenerate or inverted (relative signed area {relative_area})")]
    Degenerate { triangle: usize, relative_area: f64 },
    #[error("triangles {0} and {1} overlap")]
    Overlap(usize, usize),
    #[error("perimeter is not convex")]
    Concave,
    #[error("boundary edges do not form a single closed cycle")]
    Boundary,
    #[error("triangle {0} is not reachable from the seed")]
    Unreachable(usize),
    #[error("vertex {0} is not interior")]
    NotInterior(String),
}

/// Closure discrepancy of a fan's last triangle: `|r − a_odd|` and
/// `|s − a_even|`, where `r` and `s` are the angles the joining segment makes.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ClosureResidual {
    pub vertex: String,
    pub triangle: usize,
    pub residual_r: f64,
    pub residual_s: f64,
}

impl ClosureResidual {
    pub fn max(&self) -> f64 {
        self.residual_r.max(self.residual_s)
    }
}

/// Vertex coordinates in canonical pose: corner 0 of triangle 0 at the
/// origin, corner 1 at `(1, 0)`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Realization {
    pub labels: Vec<VertexId>,
    pub coords: Vec<Point2>,
    pub closures: Vec<ClosureResidual>,
    pub warnings: Vec<String>,
}

impl Realization {
    pub fn point(&self, label: &str) -> Option<Point2> {
        self.labels.iter().position(|l| l.as_str() == label).map(|i| self.coords[i])
    }

    pub fn diameter(&self) -> f64 {
        diameter(&self.coords)
    }

    pub fn by_label(&self) -> HashMap<String, Point2> {
        self.labels.iter().map(|l| l.to_string()).zip(self.coords.iter().copied()).collect()
    }

    pub fn max_closure_residual(&self) -> f64 {
        self.closures.iter().map(ClosureResidual::max).fold(0.0, f64::max)
    }
}

impl fmt::Display for Realization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (l, p) in self.labels.iter().zip(&self.coords) {
            writeln!(f, "{l} {} {}", fmt9(p.x), fmt9(p.y))?;
        }
        Ok(())
    }
}

struct Placer<'a> {
    figure: &'a Figure,
    angles: &'a AngleAssignment,
    coords: Vec<Option<Point2>>,
    done: Vec<bool>,
    closures: Vec<ClosureResidual>,
}

impl<'a> Placer<'a> {
    fn new(figure: &'a Figure, angles: &'a AngleAssignment) -> Self {
        Self {
            figure,
            angles,
            coords: vec![None; figure.vertex_count()],
            done: vec![false; figure.triangles().len()],
            closures: Vec::new(),
        }
    }

    /// Places the corner of `t` in `slot` from the other two, which must
    /// already be placed. The new corner lands to the left of the directed
    /// edge between them.
    fn place_corner(&mut self, t: usize, slot: usize) {
        let tri = self.figure.triangle(t);
        let (ks, kt) = ((slot + 1) % 3, (slot + 2) % 3);
        let p = self.coords[tri.corners[ks]].expect("base placed");
        let q = self.coords[tri.corners[kt]].expect("base placed");
        let alpha = self.angles.get(t, ks);
        let beta = self.angles.get(t, kt);
        let base = q - p;
        let len = base.norm() * beta.to_radians().sin() / (alpha + beta).to_radians().sin();
        let dir = base.rotate_deg(alpha) * (1.0 / base.norm());
        self.coords[tri.corners[slot]] = Some(p + dir * len);
    }

    fn measured(&self, t: usize, slot: usize) -> f64 {
        let tri = self.figure.triangle(t);
        let p = |k: usize| self.coords[tri.corners[k]].expect("placed");
        corner_angle(p(slot), p((slot + 1) % 3), p((slot + 2) % 3))
    }

    /// Completes triangle `t`, reached through the fan of `center`.
    fn realize_triangle(
        &mut self,
        t: usize,
        center: usize,
        odd_slot: usize,
        even_slot: usize,
        tol: f64,
    ) -> Result<(), RealizeError> {
        let tri = *self.figure.triangle(t);
        let missing: Vec<usize> = (0..3).filter(|&k| self.coords[tri.corners[k]].is_none()).collect();
        match missing.as_slice() {
            [] => {
                let r = self.measured(t, odd_slot);
                let s = self.measured(t, even_slot);
                let res = ClosureResidual {
                    vertex: self.figure.label(center).to_string(),
                    triangle: t,
                    residual_r: (r - self.angles.get(t, odd_slot)).abs(),
                    residual_s: (s - self.angles.get(t, even_slot)).abs(),
                };
                let worst = res.max();
                let inverted = orient2(
                    self.coords[tri.corners[0]].unwrap(),
                    self.coords[tri.corners[1]].unwrap(),
                    self.coords[tri.corners[2]].unwrap(),
                ) <= 0.0;
                self.closures.push(res);
                if worst > tol || !worst.is_finite() || inverted {
                    return Err(RealizeError::Closure {
                        vertex: self.figure.label(center).to_string(),
                        triangle: t,
                        residual: if inverted { f64::INFINITY } else { worst },
                    });
                }
            }
            [k] => self.place_corner(t, *k),
            _ => return Err(RealizeError::Unreachable(t)),
        }
        self.done[t] = true;
        Ok(())
    }

    /// Walks the fan of `v` outward from its first realized triangle.
    fn complete_fan(&mut self, v: usize, tol: f64) -> Result<bool, RealizeError> {
        let fan: &Fan = self.figure.fan(v);
        let m = fan.entries.len();
        let Some(start) = fan.entries.iter().position(|e| self.done[e.triangle]) else {
            return Ok(false);
        };
        let cyclic = fan.shape == FanShape::Cycle;
        let mut progressed = false;
        for forward in [true, false] {
            let mut i = start;
            loop {
                let next = if forward {
                    if i + 1 < m {
                        i + 1
                    } else if cyclic {
                        0
                    } else {
                        break;
                    }
                } else if i > 0 {
                    i - 1
                } else if cyclic {
                    m - 1
                } else {
                    break;
                };
                let e = fan.entries[next];
                if self.done[e.triangle] {
                    break;
                }
                self.realize_triangle(e.triangle, v, e.odd_slot, e.even_slot, tol)?;
                progressed = true;
                i = next;
            }
        }
        Ok(progressed)
    }
}

/// Interior angle at `v` between the rays to `a` and `b`, in degrees.
fn corner_angle(v: Point2, a: Point2, b: Point2) -> f64 {
    let (da, db) = (a - v, b - v);
    da.cross(db).abs().atan2(da.dot(db)).to_degrees()
}

fn precheck(figure: &Figure, angles: &AngleAssignment) -> Result<(), RealizeError> {
    if angles.len() != figure.triangles().len() {
        return Err(RealizeError::MissingAngles { expected: figure.triangles().len(), got: angles.len() });
    }
    for (t, row) in angles.values().iter().enumerate() {
        for (slot, &value) in row.iter().enumerate() {
            if !(value > DEGENERATE_ANGLE && value < 180.0 - DEGENERATE_ANGLE) {
                return Err(RealizeError::DegenerateAngle { triangle: t, slot, value });
            }
        }
    }
    Ok(())
}

/// Realizes `angles` on `figure` starting from triangle 0. `tol` bounds the
/// closure residuals and the final per-corner angle error, in degrees.
pub fn realize(figure: &Figure, angles: &AngleAssignment, tol: f64) -> Result<Realization, RealizeError> {
    realize_from(figure, angles, 0, tol)
}

/// Same as [`realize`] with an explicit seed triangle. The result is
/// normalized to the canonical pose regardless of the seed.
pub fn realize_from(
    figure: &Figure,
    angles: &AngleAssignment,
    seed: usize,
    tol: f64,
) -> Result<Realization, RealizeError> {
    precheck(figure, angles)?;
    if seed >= figure.triangles().len() {
        return Err(RealizeError::BadSeed(seed));
    }
    let mut placer = Placer::new(figure, angles);
    let st = *figure.triangle(seed);
    placer.coords[st.corners[0]] = Some(Point2::ORIGIN);
    placer.coords[st.corners[1]] = Some(Point2::new(1.0, 0.0));
    placer.place_corner(seed, 2);
    placer.done[seed] = true;

    let interior: Vec<usize> = figure.interior_vertices().collect();
    let exterior: Vec<usize> = (0..figure.vertex_count()).filter(|v| !figure.is_interior(*v)).collect();
    'outer: loop {
        for &v in &interior {
            if placer.complete_fan(v, tol)? {
                continue 'outer;
            }
        }
        for &v in &exterior {
            if placer.complete_fan(v, tol)? {
                continue 'outer;
            }
        }
        break;
    }
    if let Some(t) = placer.done.iter().position(|d| !d) {
        return Err(RealizeError::Unreachable(t));
    }

    let raw: Vec<Point2> = placer.coords.iter().map(|p| p.expect("all triangles done")).collect();
    let t0 = figure.triangle(0);
    let coords = normalize_pose(&raw, t0.corners[0], t0.corners[1]);
    let mut real =
        Realization { labels: figure.labels().to_vec(), coords, closures: placer.closures, warnings: Vec::new() };

    check_areas(&real, figure)?;
    let measured = measure_angles(&real, figure)?;
    for t in 0..figure.triangles().len() {
        for k in 0..3 {
            let residual = (measured.get(t, k) - angles.get(t, k)).abs();
            if residual > tol {
                return Err(RealizeError::AngleMismatch { triangle: t, slot: k, residual });
            }
        }
    }
    if !verify_convex(&real, figure)? {
        return Err(RealizeError::Concave);
    }
    if let Some((a, b)) = find_overlaps(&real, figure).first() {
        return Err(RealizeError::Overlap(*a, *b));
    }

    let (mut worst, mut at) = (180.0, (0, 0));
    for (t, row) in angles.values().iter().enumerate() {
        for (k, &a) in row.iter().enumerate() {
            if a < worst {
                worst = a;
                at = (t, k);
            }
        }
    }
    if worst < WARN_ANGLE {
        real.warnings.push(format!(
            "ill-conditioned: smallest angle {} degrees at triangle {} corner {}",
            fmt9(worst),
            at.0,
            at.1
        ));
    }
    Ok(real)
}

fn check_areas(real: &Realization, figure: &Figure) -> Result<(), RealizeError> {
    let d = real.diameter();
    for t in figure.triangles() {
        let [a, b, c] = t.corners.map(|k| real.coords[k]);
        let relative_area = 0.5 * orient2(a, b, c) / (d * d);
        if relative_area.is_nan() || relative_area < MIN_RELATIVE_AREA {
            return Err(RealizeError::Degenerate { triangle: t.index, relative_area });
        }
    }
    Ok(())
}

/// Realizes the fan of interior vertex `vertex` on its own, walking it in
/// fan order, and reports how well the joining segment of the last triangle
/// matches the assigned angles.
pub fn closure_residual(
    figure: &Figure,
    angles: &AngleAssignment,
    vertex: usize,
) -> Result<ClosureResidual, RealizeError> {
    if !figure.is_interior(vertex) {
        return Err(RealizeError::NotInterior(figure.label(vertex).to_string()));
    }
    precheck(figure, angles)?;
    let fan = figure.fan(vertex);
    let mut placer = Placer::new(figure, angles);
    let first = fan.entries[0];
    let tri = figure.triangle(first.triangle);
    placer.coords[vertex] = Some(Point2::ORIGIN);
    placer.coords[tri.corners[first.even_slot]] = Some(Point2::new(1.0, 0.0));
    placer.place_corner(first.triangle, first.odd_slot);
    placer.done[first.triangle] = true;
    for e in &fan.entries[1..] {
        // the last entry closes; errors are reported through the residual
        match placer.realize_triangle(e.triangle, vertex, e.odd_slot, e.even_slot, f64::INFINITY) {
            Ok(()) => {}
            Err(RealizeError::Closure { .. }) => {}
            Err(err) => return Err(err),
        }
    }
    placer.closures.pop().ok_or(RealizeError::NotInterior(figure.label(vertex).to_string()))
}

/// Reads the corner angles off a realization.
pub fn measure_angles(real: &Realization, figure: &Figure) -> Result<AngleAssignment, RealizeError> {
    check_areas(real, figure)?;
    let rows = figure
        .triangles()
        .iter()
        .map(|t| {
            let p = t.corners.map(|k| real.coords[k]);
            [corner_angle(p[0], p[1], p[2]), corner_angle(p[1], p[2], p[0]), corner_angle(p[2], p[0], p[1])]
        })
        .collect();
    Ok(AngleAssignment::new(figure, rows).expect("one row per triangle"))
}

/// Perimeter cycle as vertex indices, counterclockwise for counterclockwise
/// input.
pub fn perimeter(figure: &Figure) -> Result<Vec<usize>, RealizeError> {
    let edges = figure.boundary_edges();
    let mut next: HashMap<usize, usize> = HashMap::new();
    for &(a, b) in &edges {
        if next.insert(a, b).is_some() {
            return Err(RealizeError::Boundary);
        }
    }
    let Some(&(start, _)) = edges.first() else {
        return Err(RealizeError::Boundary);
    };
    let mut cycle = vec![start];
    let mut cur = next[&start];
    while cur != start {
        if cycle.len() > edges.len() {
            return Err(RealizeError::Boundary);
        }
        cycle.push(cur);
        cur = *next.get(&cur).ok_or(RealizeError::Boundary)?;
    }
    if cycle.len() != edges.len() {
        return Err(RealizeError::Boundary);
    }
    Ok(cycle)
}

/// True when the perimeter turns left (or goes straight) at every vertex and
/// winds exactly once.
pub fn verify_convex(real: &Realization, figure: &Figure) -> Result<bool, RealizeError> {
    let cycle = perimeter(figure)?;
    let n = cycle.len();
    let mut turning = 0.0;
    for i in 0..n {
        let a = real.coords[cycle[i]];
        let b = real.coords[cycle[(i + 1) % n]];
        let c = real.coords[cycle[(i + 2) % n]];
        let (u, w) = (b - a, c - b);
        let cross = u.cross(w) / (u.norm() * w.norm());
        if cross < -CONVEX_TOL {
            return Ok(false);
        }
        turning += u.cross(w).atan2(u.dot(w));
    }
    Ok((turning.to_degrees() - 360.0).abs() < 1e-6)
}

/// Pairs of triangles whose interiors intersect with positive area.
pub fn find_overlaps(real: &Realization, figure: &Figure) -> Vec<(usize, usize)> {
    let eps = 1e-9 * real.diameter();
    let tris: Vec<[Point2; 3]> = figure.triangles().iter().map(|t| t.corners.map(|k| real.coords[k])).collect();
    let mut out = Vec::new();
    for i in 0..tris.len() {
        for j in i + 1..tris.len() {
            if !separated(&tris[i], &tris[j], eps) {
                out.push((i, j));
            }
        }
    }
    out
}

fn separated(a: &[Point2; 3], b: &[Point2; 3], eps: f64) -> bool {
    let axes = (0..3).flat_map(|k| [(a[(k + 1) % 3] - a[k]), (b[(k + 1) % 3] - b[k])]);
    for e in axes {
        let n = Point2::new(-e.y, e.x) * (1.0 / e.norm());
        let proj = |t: &[Point2; 3]| {
            let v = t.map(|p| p.dot(n));
            (v[0].min(v[1]).min(v[2]), v[0].max(v[1]).max(v[2]))
        };
        let (lo_a, hi_a) = proj(a);
        let (lo_b, hi_b) = proj(b);
        if hi_a.min(hi_b) - lo_a.max(lo_b) <= eps {
            return true;
        }
    }
    false
}

/// Polygon area of the perimeter, by the shoelace formula.
pub fn perimeter_area(real: &Realization, figure: &Figure) -> Result<f64, RealizeError> {
    let cycle = perimeter(figure)?;
    let n = cycle.len();
    Ok(0.5 * (0..n).map(|i| real.coords[cycle[i]].cross(real.coords[cycle[(i + 1) % n]])).sum::<f64>())
}

/// Largest vertex distance between two realizations of the same figure
/// after both are put in canonical pose, relative to the diameter of `a`.
pub fn similarity_deviation(figure: &Figure, a: &[Point2], b: &[Point2]) -> f64 {
    let t0 = figure.triangle(0);
    let na = normalize_pose(a, t0.corners[0], t0.corners[1]);
    let nb = normalize_pose(b, t0.corners[0], t0.corners[1]);
    let d = diameter(&na);
    na.iter().zip(&nb).map(|(p, q)| p.dist(*q)).fold(0.0, f64::max) / d
}
