use super::oracle::{angle, meet, unit, Line};
use super::{assemble, construct, require, OracleCheck, Scenario, ScenarioError, ScenarioName};
use crate::geom::Point2;

const LABELS: [&str; 6] = ["I", "C", "D", "E", "F", "P"];
const TRIANGLES: [[&str; 3]; 5] = [["I", "C", "E"], ["I", "E", "F"], ["I", "F", "D"], ["I", "D", "C"], ["P", "F", "E"]];

pub fn build_circle_chords(alpha: f64, beta: f64) -> Result<Scenario, ScenarioError> {
    build_circle_chords_tilted(alpha, beta, 0.0, 0.0)
}

/// Unit circle about `I` with chord `EF` subtending `α` and chord `CD`
/// subtending `β`; `t` turns `E, F` and `t2` turns `C, D` about `I`.
/// `P` is where `EC` and `FD` meet.
pub fn build_circle_chords_tilted(alpha: f64, beta: f64, t: f64, t2: f64) -> Result<Scenario, ScenarioError> {
    require(0.0 < alpha && alpha < beta && beta < 180.0, || {
        format!("need 0 < alpha < beta < 180, got alpha = {alpha}, beta = {beta}")
    })?;
    let d = t - t2;
    let half = (alpha + beta) / 2.0;
    let lim = half.min(180.0 - half);
    require(d.abs() < lim, || format!("tilt difference {d} outside (-{lim}, {lim})"))?;

    let i = Point2::ORIGIN;
    let e = unit(180.0 - alpha / 2.0 + t);
    let f = unit(180.0 + alpha / 2.0 + t);
    let c = unit(beta / 2.0 + t2);
    let dd = unit(-beta / 2.0 + t2);
    let p = construct(meet(Line::through(e, c), Line::through(f, dd)), "P")?;
    let cpf = angle(p, c, f);
    let expected = (beta - alpha) / 2.0;

    let q1 = (half - d) / 2.0;
    let q2 = (half + d) / 2.0;
    let rows = vec![
        [180.0 - half + d, q1, q1],
        [alpha, 90.0 - alpha / 2.0, 90.0 - alpha / 2.0],
        [180.0 - half - d, q2, q2],
        [beta, 90.0 - beta / 2.0, 90.0 - beta / 2.0],
        [expected, 90.0 + (alpha - beta) / 4.0 - d / 2.0, 90.0 + (alpha - beta) / 4.0 + d / 2.0],
    ];
    let mut s = assemble(
        ScenarioName::CircleChords,
        vec![("alpha", alpha), ("beta", beta), ("t", t), ("t2", t2)],
        &LABELS,
        &TRIANGLES,
        vec![i, c, dd, e, f, p],
        Some(rows),
        vec![OracleCheck::new("angle_formula", (cpf - expected).abs())],
    )?;
    s.oracle.observed.extend([("CPF", cpf), ("(beta-alpha)/2", expected)]);
    Ok(s)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sixty_hundred_gives_twenty() {
        let s = build_circle_chords(60.0, 100.0).unwrap();
        let cpf = s.oracle.observed.iter().find(|(n, _)| *n == "CPF").unwrap().1;
        assert!((cpf - 20.0).abs() < 1e-9);
        assert!(s.check("map_agreement").unwrap().value < 1e-9);
    }

    #[test]
    fn nearly_equal_chords() {
        let s = build_circle_chords(80.0, 80.0 + 1e-6).unwrap();
        assert!(s.check("angle_formula").unwrap().value < 1e-7);
    }

    #[test]
    fn tilted_chords() {
        let s = build_circle_chords_tilted(50.0, 130.0, 17.0, -8.0).unwrap();
        assert!(s.check("angle_formula").unwrap().value < 1e-9);
        assert!(s.check("map_agreement").unwrap().value < 1e-9);
    }

    #[test]
    fn domain() {
        assert!(build_circle_chords(100.0, 60.0).is_err());
        assert!(build_circle_chords_tilted(50.0, 130.0, 90.0, 0.0).is_err());
    }
}
