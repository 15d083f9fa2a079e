use super::oracle::{self, equilateral_deviation, heading, meet, toward, unit, Line};
use super::{assemble, construct, open_angle, require, OracleCheck, Scenario, ScenarioError, ScenarioName, SUM_TOL};
use crate::geom::Point2;

const LABELS: [&str; 6] = ["A", "B", "C", "U", "V", "W"];
const TRIANGLES: [[&str; 3]; 7] = [
    ["A", "B", "W"],
    ["B", "C", "U"],
    ["C", "A", "V"],
    ["A", "W", "V"],
    ["B", "U", "W"],
    ["C", "V", "U"],
    ["W", "U", "V"],
];

fn triangle_domain(a: f64, b: f64, c: f64) -> Result<(), ScenarioError> {
    open_angle("A", a)?;
    open_angle("B", b)?;
    open_angle("C", c)?;
    require((a + b + c - 180.0).abs() <= SUM_TOL, || format!("A + B + C = {} is not 180", a + b + c))
}

/// Outer triangle with `A` at the origin and `B` at `(1, 0)`.
fn outer(a: f64, b: f64) -> Result<[Point2; 3], ScenarioError> {
    let (pa, pb) = (Point2::ORIGIN, Point2::new(1.0, 0.0));
    let pc = construct(meet(Line { p: pa, u: unit(a) }, Line { p: pb, u: unit(180.0 - b) }), "C")?;
    Ok([pa, pb, pc])
}

/// The trisector of the angle at `x` lying next to side `x p`.
fn trisector(x: Point2, p: Point2, q: Point2, angle: f64) -> Line {
    toward(x, p, q, angle / 3.0)
}

/// `W`, `U`, `V`: meets of adjacent trisectors near `AB`, `BC`, `CA`.
fn inner(pa: Point2, pb: Point2, pc: Point2, a: f64, b: f64, c: f64) -> Result<[Point2; 3], ScenarioError> {
    let w = construct(meet(trisector(pa, pb, pc, a), trisector(pb, pa, pc, b)), "W")?;
    let u = construct(meet(trisector(pb, pc, pa, b), trisector(pc, pb, pa, c)), "U")?;
    let v = construct(meet(trisector(pc, pa, pb, c), trisector(pa, pc, pb, a)), "V")?;
    Ok([w, u, v])
}

pub fn build_morley_classic(a: f64, b: f64, c: f64) -> Result<Scenario, ScenarioError> {
    triangle_domain(a, b, c)?;
    let [pa, pb, pc] = outer(a, b)?;
    let [w, u, v] = inner(pa, pb, pc, a, b, c)?;
    let checks = vec![OracleCheck::new("equilateral", equilateral_deviation(w, u, v))];
    assemble(
        ScenarioName::MorleyClassic,
        vec![("A", a), ("B", b), ("C", c)],
        &LABELS,
        &TRIANGLES,
        vec![pa, pb, pc, u, v, w],
        None,
        checks,
    )
}

/// `W` and `U` from four trisectors, `V` completing an equilateral triangle
/// on `WU`; checks that `V` lies on the two trisectors not used.
pub fn build_morley_partial(a: f64, b: f64, c: f64) -> Result<Scenario, ScenarioError> {
    triangle_domain(a, b, c)?;
    let [pa, pb, pc] = outer(a, b)?;
    let w = construct(meet(trisector(pa, pb, pc, a), trisector(pb, pa, pc, b)), "W")?;
    let u = construct(meet(trisector(pb, pc, pa, b), trisector(pc, pb, pa, c)), "U")?;
    let v = w + unit(heading(w, u) + 60.0) * w.dist(u);
    let points = vec![pa, pb, pc, u, v, w];
    let d = oracle::diameter(&points);
    let incidence = trisector(pa, pc, pb, a).distance(v).max(trisector(pc, pa, pb, c).distance(v)) / d;
    assemble(
        ScenarioName::MorleyPartial,
        vec![("A", a), ("B", b), ("C", c)],
        &LABELS,
        &TRIANGLES,
        points,
        None,
        vec![OracleCheck::new("trisector_incidence", incidence)],
    )
}

const HEX_LABELS: [&str; 9] = ["A", "D1", "B", "D2", "C", "D3", "U", "V", "W"];
const HEX_TRIANGLES: [[&str; 3]; 10] = [
    ["A", "D1", "W"],
    ["D1", "B", "W"],
    ["B", "D2", "U"],
    ["D2", "C", "U"],
    ["C", "D3", "V"],
    ["D3", "A", "V"],
    ["A", "W", "V"],
    ["B", "U", "W"],
    ["C", "V", "U"],
    ["W", "U", "V"],
];

/// Semi-regular hexagon `A D1 B D2 C D3` walked counterclockwise from `A` at
/// the origin along the x axis.
struct Hexagon {
    /// Headings of the six sides, side `k` leaving vertex `k`.
    theta: [f64; 6],
    sides: [f64; 6],
    thirds: [f64; 3],
    delta: f64,
}

impl Hexagon {
    /// Side lengths by the convention: `|D1 W| = 1`, `|D2 U| = t2`,
    /// `|D3 V| = t3`, with `W`, `U`, `V` on the bisectors at the constrained
    /// vertices and on the adjacent trisectors; `t2`, `t3` close the hexagon.
    fn new(a: f64, b: f64, g: f64) -> Result<Self, ScenarioError> {
        let delta = (720.0 - a - b - g) / 3.0;
        let h = delta / 2.0;
        let thirds = [a / 3.0, b / 3.0, g / 3.0];
        let f = |x: f64| (x + h).to_radians().sin() / x.to_radians().sin();
        let interior = [a, delta, b, delta, g, delta];
        let mut theta = [0.0; 6];
        for k in 1..6 {
            theta[k] = theta[k - 1] + 180.0 - interior[k];
        }
        let e = theta.map(unit);
        let [fa, fb, fc] = thirds.map(f);
        let p = e[2] * fb + e[3] * fc;
        let q = e[4] * fc + e[5] * fa;
        let r = -(e[0] * fa + e[1] * fb);
        let det = p.cross(q);
        if det.abs() < 1e-14 {
            return Err(ScenarioError::Construction("hexagon closure system is singular".into()));
        }
        let (t2, t3) = (r.cross(q) / det, p.cross(r) / det);
        if !(t2 > 0.0 && t3 > 0.0) {
            return Err(ScenarioError::Construction(format!(
                "side-length convention does not close the hexagon (t2 = {t2}, t3 = {t3})"
            )));
        }
        let sides = [fa, fb, t2 * fb, t2 * fc, t3 * fc, t3 * fa];
        Ok(Self { theta, sides, thirds, delta })
    }

    fn vertices(&self, sides: &[f64; 6]) -> [Point2; 6] {
        let mut out = [Point2::ORIGIN; 6];
        for k in 1..6 {
            out[k] = out[k - 1] + unit(self.theta[k - 1]) * sides[k - 1];
        }
        out
    }

    /// `W`, `U`, `V` from the trisectors next to the constrained vertices.
    /// The interior angle at vertex `k` opens counterclockwise from the
    /// heading of side `k`.
    fn inner(&self, v: &[Point2; 6]) -> Result<[Point2; 3], ScenarioError> {
        let [a, b, c] = self.thirds;
        let ray = |k: usize, off: f64| Line { p: v[k], u: unit(self.theta[k] + off) };
        let w = construct(meet(ray(0, a), ray(2, 2.0 * b)), "W")?;
        let u = construct(meet(ray(2, b), ray(4, 2.0 * c)), "U")?;
        let vv = construct(meet(ray(4, c), ray(0, 2.0 * a)), "V")?;
        Ok([w, u, vv])
    }

    fn bisector(&self, v: &[Point2; 6], k: usize) -> Line {
        Line { p: v[k], u: unit(self.theta[k] + self.delta / 2.0) }
    }
}

/// Generalized Morley configuration in a semi-regular hexagon with angles
/// `A, δ, B, δ, Γ, δ`, `δ = (720 − A − B − Γ)/3`.
pub fn build_morley_hexagon(a: f64, b: f64, g: f64) -> Result<Scenario, ScenarioError> {
    open_angle("A", a)?;
    open_angle("B", b)?;
    open_angle("Gamma", g)?;
    require(a + b + g >= 180.0 - SUM_TOL, || format!("A + B + Gamma = {} is below 180", a + b + g))?;
    let hex = Hexagon::new(a, b, g)?;
    let v = hex.vertices(&hex.sides);
    let [w, u, vv] = hex.inner(&v)?;
    let mut points = v.to_vec();
    points.extend([u, vv, w]);
    let d = oracle::diameter(&points);
    let incidence =
        [(1, w), (3, u), (5, vv)].iter().map(|&(k, p)| hex.bisector(&v, k).distance(p) / d).fold(0.0, f64::max);
    let checks = vec![
        OracleCheck::new("equilateral", equilateral_deviation(w, u, vv)),
        OracleCheck::new("bisector_incidence", incidence),
    ];
    assemble(
        ScenarioName::MorleyHexagon,
        vec![("A", a), ("B", b), ("Gamma", g), ("delta", hex.delta)],
        &HEX_LABELS,
        &HEX_TRIANGLES,
        points,
        None,
        checks,
    )
}

/// Equilaterality deviation of the trisector triangle after moving the
/// convention's side lengths by `eps` along `direction` projected onto the
/// lengths that keep the hexagon closed (angles unchanged).
pub fn hexagon_family_deviation(a: f64, b: f64, g: f64, direction: [f64; 6], eps: f64) -> Result<f64, ScenarioError> {
    let hex = Hexagon::new(a, b, g)?;
    let e = hex.theta.map(unit);
    // project out the two closure constraints: rows (cos θ_k) and (sin θ_k)
    let (mut g11, mut g12, mut g22, mut r1, mut r2) = (0.0, 0.0, 0.0, 0.0, 0.0);
    for k in 0..6 {
        g11 += e[k].x * e[k].x;
        g12 += e[k].x * e[k].y;
        g22 += e[k].y * e[k].y;
        r1 += e[k].x * direction[k];
        r2 += e[k].y * direction[k];
    }
    let det = g11 * g22 - g12 * g12;
    let (l1, l2) = ((r1 * g22 - r2 * g12) / det, (g11 * r2 - g12 * r1) / det);
    let mut sides = hex.sides;
    for k in 0..6 {
        sides[k] += eps * (direction[k] - l1 * e[k].x - l2 * e[k].y);
    }
    if sides.iter().any(|s| *s <= 0.0) {
        return Err(ScenarioError::Construction("perturbed side length is not positive".into()));
    }
    let v = hex.vertices(&sides);
    let closure = (v[5] + e[5] * sides[5]).norm();
    if closure > 1e-9 {
        return Err(ScenarioError::Construction(format!("perturbed hexagon does not close ({closure})")));
    }
    let [w, u, vv] = hex.inner(&v)?;
    Ok(equilateral_deviation(w, u, vv))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::normalize_pose;

    #[test]
    fn classic_symmetric_is_exactly_equilateral() {
        let s = build_morley_classic(60.0, 60.0, 60.0).unwrap();
        assert!(s.check("equilateral").unwrap().value < 1e-14);
    }

    #[test]
    fn classic_obtuse_and_extreme() {
        let s = build_morley_classic(100.0, 40.0, 40.0).unwrap();
        assert!(s.check("equilateral").unwrap().value < 1e-9);
        let s = build_morley_classic(179.0, 0.5, 0.5).unwrap();
        assert!(s.check("equilateral").unwrap().value < 1e-7);
    }

    #[test]
    fn classic_domain() {
        assert!(matches!(build_morley_classic(60.0, 60.0, 61.0), Err(ScenarioError::Domain(_))));
        assert!(matches!(build_morley_classic(0.0, 90.0, 90.0), Err(ScenarioError::Domain(_))));
    }

    // Conway's values for the corner triangles of the Morley figure, in the
    // notation x* = x + 60: in triangle A W V the angle at W is b*, at V it is c*.
    #[test]
    fn measured_map_matches_conway() {
        let (a, b, c) = (84.0, 57.0, 39.0);
        let s = build_morley_classic(a, b, c).unwrap();
        let t = s.figure.triangles().iter().position(|t| t.corners == [0, 5, 4]).unwrap();
        let row = s.angles.triangle(t);
        let expect = [a / 3.0, b / 3.0 + 60.0, c / 3.0 + 60.0];
        for k in 0..3 {
            assert!((row[k] - expect[k]).abs() < 1e-9, "{row:?} vs {expect:?}");
        }
    }

    #[test]
    fn partial_matches_classic() {
        let s = build_morley_partial(60.0, 60.0, 60.0).unwrap();
        let v = s.point("V").unwrap();
        assert!(v.dist(build_morley_classic(60.0, 60.0, 60.0).unwrap().point("V").unwrap()) < 1e-14);
        let p = build_morley_partial(100.0, 50.0, 30.0).unwrap();
        assert!(p.check("trisector_incidence").unwrap().value < 1e-9);
        let c = build_morley_classic(100.0, 50.0, 30.0).unwrap();
        assert!(p.point("V").unwrap().dist(c.point("V").unwrap()) < 1e-9);
    }

    #[test]
    fn hexagon_symmetric_and_generic() {
        let s = build_morley_hexagon(120.0, 120.0, 120.0).unwrap();
        assert!((s.param("delta").unwrap() - 120.0).abs() < 1e-12);
        assert!(s.check("equilateral").unwrap().value < 1e-12);
        let s = build_morley_hexagon(150.0, 100.0, 90.0).unwrap();
        assert!(s.check("equilateral").unwrap().value < 1e-9);
        assert!(s.check("bisector_incidence").unwrap().value < 1e-9);
    }

    #[test]
    fn hexagon_limit_is_classic() {
        let (a, b, g) = (80.0, 60.0, 40.0 + 1e-6);
        let hex = build_morley_hexagon(a, b, g).unwrap();
        let scale = 180.0 / (a + b + g);
        let tri = build_morley_classic(a * scale, b * scale, 180.0 - a * scale - b * scale).unwrap();
        let pick = |s: &Scenario| -> Vec<Point2> {
            ["A", "B", "C", "U", "V", "W"].iter().map(|l| s.point(l).unwrap()).collect()
        };
        let (p, q) = (normalize_pose(&pick(&hex), 0, 1), normalize_pose(&pick(&tri), 0, 1));
        let gap = p.iter().zip(&q).map(|(x, y)| x.dist(*y)).fold(0.0, f64::max);
        assert!(gap < 1e-6, "gap {gap}");
    }

    #[test]
    fn hexagon_family_generic_member_is_not_equilateral() {
        let dir = [0.3, -0.2, 0.5, 0.1, -0.4, 0.2];
        assert!(hexagon_family_deviation(150.0, 100.0, 90.0, dir, 0.0).unwrap() < 1e-9);
        assert!(hexagon_family_deviation(150.0, 100.0, 90.0, dir, 0.05).unwrap() > 1e-4);
    }
}
