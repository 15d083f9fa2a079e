use super::oracle::{self, meet, toward, unit, Line};
use super::{assemble, construct, open_angle, require, OracleCheck, Scenario, ScenarioError, ScenarioName, SUM_TOL};
use crate::geom::Point2;

const HEX_LABELS: [&str; 7] = ["A", "D1", "B", "D2", "C", "D3", "I"];
const HEX_TRIANGLES: [[&str; 3]; 6] =
    [["A", "D1", "I"], ["D1", "B", "I"], ["B", "D2", "I"], ["D2", "C", "I"], ["C", "D3", "I"], ["D3", "A", "I"]];

/// Semi-regular hexagon with angles `α, δ, β, δ, γ, δ`, fanned from the
/// meet of the bisectors at `A` and `B`. The construction circumscribes the
/// hexagon about a unit circle.
pub fn build_bisector_hexagon(alpha: f64, beta: f64, gamma: f64, delta: f64) -> Result<Scenario, ScenarioError> {
    for (n, x) in [("alpha", alpha), ("beta", beta), ("gamma", gamma), ("delta", delta)] {
        open_angle(n, x)?;
    }
    let total = alpha + beta + gamma + 3.0 * delta;
    require((total - 720.0).abs() <= SUM_TOL, || format!("alpha + beta + gamma + 3 delta = {total} is not 720"))?;

    let phi = [alpha, delta, beta, delta, gamma, delta];
    // outward normal of side k (from vertex k to k + 1)
    let mut normal = [-90.0; 6];
    for k in 1..6 {
        normal[k] = normal[k - 1] + 180.0 - phi[k];
    }
    let v: Vec<Point2> = (0..6)
        .map(|k| {
            let before = if k == 0 { normal[5] - 360.0 } else { normal[k - 1] };
            unit((before + normal[k]) / 2.0) * (1.0 / (phi[k] / 2.0).to_radians().sin())
        })
        .collect();
    let bisector = |k: usize| toward(v[k], v[(k + 1) % 6], v[(k + 5) % 6], phi[k] / 2.0);
    let i = construct(meet(bisector(0), bisector(2)), "I")?;
    let mut points = v.clone();
    points.push(i);
    let d = oracle::diameter(&points);
    let concurrency = (0..6).map(|k| bisector(k).distance(i) / d).fold(0.0, f64::max);

    let star = |x: f64| 180.0 - x / 2.0 - delta / 2.0;
    let h = delta / 2.0;
    let rows = vec![
        [alpha / 2.0, h, star(alpha)],
        [h, beta / 2.0, star(beta)],
        [beta / 2.0, h, star(beta)],
        [h, gamma / 2.0, star(gamma)],
        [gamma / 2.0, h, star(gamma)],
        [h, alpha / 2.0, star(alpha)],
    ];
    assemble(
        ScenarioName::BisectorHexagon,
        vec![("alpha", alpha), ("beta", beta), ("gamma", gamma), ("delta", delta)],
        &HEX_LABELS,
        &HEX_TRIANGLES,
        points,
        Some(rows),
        vec![OracleCheck::new("concurrency", concurrency)],
    )
}

/// Splits the angle `at` of a triangle by the semi-median through it. The
/// first part lies next to the side towards the vertex with angle `first`:
/// `sin(p1)/sin(p2) = sin(first − δ)/sin(second − δ)` and `p1 + p2 = at`.
pub fn semi_median_split(at: f64, first: f64, second: f64, delta: f64) -> (f64, f64) {
    let k = (first - delta).to_radians().sin() / (second - delta).to_radians().sin();
    let r = at.to_radians();
    let p1 = (k * r.sin()).atan2(1.0 + k * r.cos()).to_degrees();
    (p1, at - p1)
}

const TRI_LABELS: [&str; 4] = ["A", "B", "C", "P"];
const TRI_TRIANGLES: [[&str; 3]; 3] = [["A", "B", "P"], ["B", "C", "P"], ["C", "A", "P"]];

/// Three semi-medians with base offset `δ`, meeting at `P`.
pub fn build_semi_median(alpha: f64, beta: f64, gamma: f64, delta: f64) -> Result<Scenario, ScenarioError> {
    for (n, x) in [("alpha", alpha), ("beta", beta), ("gamma", gamma)] {
        open_angle(n, x)?;
    }
    require((alpha + beta + gamma - 180.0).abs() <= SUM_TOL, || {
        format!("alpha + beta + gamma = {} is not 180", alpha + beta + gamma)
    })?;
    let half_min = alpha.min(beta).min(gamma) / 2.0;
    require(delta > 0.0 && delta < half_min, || format!("delta = {delta} not in (0, {half_min})"))?;

    let (a_b, a_c) = semi_median_split(alpha, beta, gamma, delta);
    let (b_a, b_c) = semi_median_split(beta, alpha, gamma, delta);
    let (g_a, g_b) = semi_median_split(gamma, alpha, beta, delta);
    let ls = |x: f64| x.to_radians().sin().ln();
    let identity = (ls(a_b) + ls(b_c) + ls(g_a) - ls(a_c) - ls(b_a) - ls(g_b)).abs();
    let rows = vec![[a_b, b_a, 180.0 - a_b - b_a], [b_c, g_b, 180.0 - b_c - g_b], [g_a, a_c, 180.0 - g_a - a_c]];

    let (pa, pb) = (Point2::ORIGIN, Point2::new(1.0, 0.0));
    let pc = construct(meet(Line { p: pa, u: unit(alpha) }, Line { p: pb, u: unit(180.0 - beta) }), "C")?;
    // apex of the isosceles triangle with base angles δ on the opposite side
    let apex =
        |x: Point2, y: Point2, toward_z: Point2| meet(toward(x, y, toward_z, delta), toward(y, x, toward_z, delta));
    let a0 = construct(apex(pb, pc, pa), "A0")?;
    let b0 = construct(apex(pc, pa, pb), "B0")?;
    let c0 = construct(apex(pa, pb, pc), "C0")?;
    let p = construct(meet(Line::through(pa, a0), Line::through(pb, b0)), "P")?;
    let points = vec![pa, pb, pc, p];
    let concurrency = Line::through(pc, c0).distance(p) / oracle::diameter(&points);

    let mut s = assemble(
        ScenarioName::SemiMedian,
        vec![("alpha", alpha), ("beta", beta), ("gamma", gamma), ("delta", delta)],
        &TRI_LABELS,
        &TRI_TRIANGLES,
        points,
        Some(rows),
        vec![
            OracleCheck { name: "sine_identity", value: identity, limit: Some(1e-12) },
            OracleCheck::new("concurrency", concurrency),
        ],
    )?;
    s.oracle.observed.extend([("alpha_B", a_b), ("alpha_C", a_c), ("beta_A", b_a), ("beta_C", b_c)]);
    s.oracle.observed.extend([("gamma_A", g_a), ("gamma_B", g_b)]);
    Ok(s)
}
