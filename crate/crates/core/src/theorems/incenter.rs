use super::oracle::{self, equilateral_deviation, heading, incenter, meet, toward, unit, Line};
use super::{assemble, construct, open_angle, require, OracleCheck, Scenario, ScenarioError, ScenarioName, SUM_TOL};
use crate::geom::Point2;

fn outer(a: f64, b: f64) -> Result<[Point2; 3], ScenarioError> {
    let (pa, pb) = (Point2::ORIGIN, Point2::new(1.0, 0.0));
    let pc = construct(meet(Line { p: pa, u: unit(a) }, Line { p: pb, u: unit(180.0 - b) }), "C")?;
    Ok([pa, pb, pc])
}

/// Meets the ray from `from` along `dir` with segment `xy`, rejecting points
/// outside the segment.
fn on_segment(ray: Line, x: Point2, y: Point2, what: &str) -> Result<Point2, ScenarioError> {
    let side = Line::through(x, y);
    let p = construct(meet(ray, side), what)?;
    let s = side.param(p);
    if !(0.0..=1.0).contains(&s) || ray.param(p) <= 0.0 {
        return Err(ScenarioError::Construction(format!("{what} falls outside its side")));
    }
    Ok(p)
}

const EQ_LABELS: [&str; 6] = ["A", "B", "C", "I", "P", "Q"];
const EQ_TRIANGLES: [[&str; 3]; 5] =
    [["A", "B", "I"], ["B", "Q", "I"], ["I", "Q", "P"], ["Q", "C", "P"], ["P", "A", "I"]];

/// `P` on `AC` with `∠AIP = B/2 + 60`, `Q` on `BC` with `∠BIQ = A/2 + 60`;
/// the conclusion is that `IPQ` is equilateral.
pub fn build_incenter_equilateral(a: f64, b: f64, c: f64) -> Result<Scenario, ScenarioError> {
    open_angle("A", a)?;
    open_angle("B", b)?;
    open_angle("C", c)?;
    require((a + b + c - 180.0).abs() <= SUM_TOL, || format!("A + B + C = {} is not 180", a + b + c))?;
    let [pa, pb, pc] = outer(a, b)?;
    let i = incenter(pa, pb, pc);
    let p = on_segment(Line { p: i, u: unit(heading(i, pa) - (b / 2.0 + 60.0)) }, pa, pc, "P")?;
    let q = on_segment(Line { p: i, u: unit(heading(i, pb) + a / 2.0 + 60.0) }, pb, pc, "Q")?;
    let rows = vec![
        [a / 2.0, b / 2.0, 90.0 + c / 2.0],
        [b / 2.0, 30.0 + c / 2.0, a / 2.0 + 60.0],
        [60.0, 60.0, 60.0],
        [90.0 - c / 2.0, c, 90.0 - c / 2.0],
        [30.0 + c / 2.0, a / 2.0, b / 2.0 + 60.0],
    ];
    let mut s = assemble(
        ScenarioName::IncenterEquilateral,
        vec![("A", a), ("B", b), ("C", c)],
        &EQ_LABELS,
        &EQ_TRIANGLES,
        vec![pa, pb, pc, i, p, q],
        Some(rows),
        vec![OracleCheck::new("equilateral", equilateral_deviation(i, p, q))],
    )?;
    let pq = p.dist(q);
    s.oracle.observed.extend([("IP/PQ", i.dist(p) / pq), ("QI/PQ", q.dist(i) / pq)]);
    Ok(s)
}

const Q_LABELS: [&str; 7] = ["A", "B", "C", "I", "X", "Y", "Z"];
const Q_TRIANGLES: [[&str; 3]; 9] = [
    ["A", "B", "X"],
    ["B", "I", "X"],
    ["I", "A", "X"],
    ["B", "C", "Y"],
    ["C", "I", "Y"],
    ["I", "B", "Y"],
    ["C", "A", "Z"],
    ["A", "I", "Z"],
    ["I", "C", "Z"],
];

/// Triangle with angles `4α, 4β, 4γ` cut by its quadriceptors: `X`, `Y`, `Z`
/// where the quarter rays next to each side meet, `I` where the bisectors
/// meet.
pub fn build_quadriceptor(alpha: f64, beta: f64, gamma: f64) -> Result<Scenario, ScenarioError> {
    for (n, x) in [("alpha", alpha), ("beta", beta), ("gamma", gamma)] {
        require(x > 0.0, || format!("{n} = {x} is not positive"))?;
    }
    require((alpha + beta + gamma - 45.0).abs() <= SUM_TOL, || {
        format!("alpha + beta + gamma = {} is not 45", alpha + beta + gamma)
    })?;
    let [pa, pb, pc] = outer(4.0 * alpha, 4.0 * beta)?;
    let quarter = |x: Point2, p: Point2, q: Point2, part: f64, k: f64| toward(x, p, q, k * part);
    let x = construct(meet(quarter(pa, pb, pc, alpha, 1.0), quarter(pb, pa, pc, beta, 1.0)), "X")?;
    let y = construct(meet(quarter(pb, pc, pa, beta, 1.0), quarter(pc, pb, pa, gamma, 1.0)), "Y")?;
    let z = construct(meet(quarter(pc, pa, pb, gamma, 1.0), quarter(pa, pc, pb, alpha, 1.0)), "Z")?;
    let i = construct(meet(quarter(pa, pb, pc, alpha, 2.0), quarter(pb, pa, pc, beta, 2.0)), "I")?;
    let points = vec![pa, pb, pc, i, x, y, z];
    let concurrency = quarter(pc, pa, pb, gamma, 2.0).distance(i) / oracle::diameter(&points);
    let rows = vec![
        [alpha, beta, gamma + 135.0],
        [beta, gamma + 45.0, alpha + 90.0],
        [gamma + 45.0, alpha, beta + 90.0],
        [beta, gamma, alpha + 135.0],
        [gamma, alpha + 45.0, beta + 90.0],
        [alpha + 45.0, beta, gamma + 90.0],
        [gamma, alpha, beta + 135.0],
        [alpha, beta + 45.0, gamma + 90.0],
        [beta + 45.0, gamma, alpha + 90.0],
    ];
    assemble(
        ScenarioName::Quadriceptor,
        vec![("alpha", alpha), ("beta", beta), ("gamma", gamma)],
        &Q_LABELS,
        &Q_TRIANGLES,
        points,
        Some(rows),
        vec![OracleCheck::new("bisector_concurrency", concurrency)],
    )
}
