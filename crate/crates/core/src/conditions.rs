//! Realizability conditions for an angle assignment.
//!
//! An assignment on a convex triangulated figure is realizable exactly when
//! three conditions hold:
//!
//! * **π**: each triangle's angles sum to 180.
//! * **2π**: the angle total `A(v)` is 360 at interior vertices and at most
//!   180 on the perimeter.
//! * **sine rotation**: around each interior vertex, the product of sines of
//!   the odd non-central angles equals the product over the even ones.
//!
//! The pairing check is a stronger, purely combinatorial certificate: if the
//! odd and even angles around every interior vertex form equal multisets the
//! sine products agree term by term.

use crate::angles::AngleAssignment;
use crate::figure::{classify_vertices, Figure, VertexClass};
use crate::geom::fmt9;
use serde::Serialize;
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum ConditionError {
    #[error("missing angle values: {got} rows for {expected} triangles")]
    MissingAngles { expected: usize, got: usize },
    #[error("angle {value} at triangle {triangle} corner {slot} is outside (0, 180)")]
    OutOfRange { triangle: usize, slot: usize, value: f64 },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Condition {
    PiSum,
    TwoPi,
    SineRotation,
    Pairing,
}

impl fmt::Display for Condition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Condition::PiSum => "pi-sum",
            Condition::TwoPi => "two-pi",
            Condition::SineRotation => "sine-rotation",
            Condition::Pairing => "pairing",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Locus {
    Triangle(usize),
    Vertex(String),
}

impl fmt::Display for Locus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Locus::Triangle(t) => write!(f, "triangle {t}"),
            Locus::Vertex(v) => write!(f, "vertex {v}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ConditionViolation {
    pub locus: Locus,
    pub residual: f64,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ConditionReport {
    pub condition: Condition,
    pub passed: bool,
    pub violations: Vec<ConditionViolation>,
    /// Largest |residual| over every checked locus, passing or not.
    pub max_residual: f64,
}

impl ConditionReport {
    fn new(condition: Condition, violations: Vec<ConditionViolation>, max_residual: f64) -> Self {
        Self { condition, passed: violations.is_empty(), violations, max_residual }
    }
}

impl fmt::Display for ConditionReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{:<14} {}  max residual {}",
            self.condition.to_string(),
            if self.passed { "PASS" } else { "FAIL" },
            fmt9(self.max_residual)
        )?;
        for v in &self.violations {
            write!(f, "\n    {}: residual {} ({})", v.locus, fmt9(v.residual), v.detail)?;
        }
        Ok(())
    }
}

/// Tolerances for the four checks. π, 2π and pairing are absolute in
/// degrees; sine rotation is relative.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Tolerances {
    pub pi: f64,
    pub two_pi: f64,
    pub sine: f64,
    pub pairing: f64,
}

impl Tolerances {
    /// For hand-written or formula-derived maps.
    pub const AUTHORED: Tolerances = Tolerances { pi: 1e-9, two_pi: 1e-9, sine: 1e-9, pairing: 1e-9 };
    /// For maps measured from floating-point coordinates.
    pub const MEASURED: Tolerances = Tolerances { pi: 1e-7, two_pi: 1e-7, sine: 1e-9, pairing: 1e-7 };
}

impl Default for Tolerances {
    fn default() -> Self {
        Self::AUTHORED
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Certificate {
    Conditions,
    PairingCorollary,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Verdict {
    pub realizable: bool,
    pub via: Certificate,
    pub reports: Vec<ConditionReport>,
}

impl Verdict {
    pub fn report(&self, c: Condition) -> &ConditionReport {
        self.reports.iter().find(|r| r.condition == c).expect("all four reports present")
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in &self.reports {
            writeln!(f, "{r}")?;
        }
        let via = match self.via {
            Certificate::Conditions => "pi + two-pi + sine-rotation",
            Certificate::PairingCorollary => "pairing corollary",
        };
        if self.realizable {
            write!(f, "realizable (via {via})")
        } else {
            write!(f, "not realizable")
        }
    }
}

fn ensure_total(figure: &Figure, angles: &AngleAssignment) -> Result<(), ConditionError> {
    if angles.len() != figure.triangles().len() {
        return Err(ConditionError::MissingAngles { expected: figure.triangles().len(), got: angles.len() });
    }
    Ok(())
}

pub fn check_pi(figure: &Figure, angles: &AngleAssignment, tol: f64) -> Result<ConditionReport, ConditionError> {
    ensure_total(figure, angles)?;
    let mut violations = Vec::new();
    let mut max_res: f64 = 0.0;
    for t in figure.triangles() {
        let v = angles.triangle(t.index);
        let residual = v[0] + v[1] + v[2] - 180.0;
        max_res = max_res.max(residual.abs());
        if residual.abs() > tol {
            violations.push(ConditionViolation {
                locus: Locus::Triangle(t.index),
                residual,
                detail: format!("angles {} + {} + {} != 180", fmt9(v[0]), fmt9(v[1]), fmt9(v[2])),
            });
        }
    }
    Ok(ConditionReport::new(Condition::PiSum, violations, max_res))
}

pub fn check_two_pi(figure: &Figure, angles: &AngleAssignment, tol: f64) -> Result<ConditionReport, ConditionError> {
    ensure_total(figure, angles)?;
    let mut violations = Vec::new();
    let mut max_res: f64 = 0.0;
    for (v, class) in classify_vertices(figure).into_iter().enumerate() {
        let sum = angles.vertex_sum(figure, v);
        let label = figure.label(v).to_string();
        match class {
            VertexClass::Interior => {
                let residual = sum - 360.0;
                max_res = max_res.max(residual.abs());
                if residual.abs() > tol {
                    violations.push(ConditionViolation {
                        locus: Locus::Vertex(label),
                        residual,
                        detail: format!("interior angle sum {} != 360", fmt9(sum)),
                    });
                }
            }
            VertexClass::Exterior => {
                let residual = sum - 180.0;
                max_res = max_res.max(residual.max(0.0));
                if residual > tol {
                    violations.push(ConditionViolation {
                        locus: Locus::Vertex(label),
                        residual,
                        detail: format!("perimeter angle sum {} > 180", fmt9(sum)),
                    });
                }
            }
        }
    }
    Ok(ConditionReport::new(Condition::TwoPi, violations, max_res))
}

fn ensure_range(angles: &AngleAssignment) -> Result<(), ConditionError> {
    for (t, row) in angles.values().iter().enumerate() {
        for (slot, &value) in row.iter().enumerate() {
            if !(value > 0.0 && value < 180.0) {
                return Err(ConditionError::OutOfRange { triangle: t, slot, value });
            }
        }
    }
    Ok(())
}

/// The odd and even non-central angles around `v`, in fan order.
pub fn odd_even(figure: &Figure, angles: &AngleAssignment, v: usize) -> (Vec<f64>, Vec<f64>) {
    figure
        .fan(v)
        .entries
        .iter()
        .map(|e| (angles.get(e.triangle, e.odd_slot), angles.get(e.triangle, e.even_slot)))
        .unzip()
}

/// `Σ ln sin(odd) − Σ ln sin(even)` at an interior vertex.
pub fn log_sine_residual(odd: &[f64], even: &[f64]) -> f64 {
    let ls = |xs: &[f64]| xs.iter().map(|d| d.to_radians().sin().ln()).sum::<f64>();
    ls(odd) - ls(even)
}

/// Checks the sine-rotation condition. The comparison is done on log-sine
/// sums; `|P_odd − P_even| / max(P_odd, P_even) = 1 − exp(−|Δ|)` where `Δ`
/// is the reported residual.
pub fn check_sine_rotation(
    figure: &Figure,
    angles: &AngleAssignment,
    tol: f64,
) -> Result<ConditionReport, ConditionError> {
    ensure_total(figure, angles)?;
    ensure_range(angles)?;
    let mut violations = Vec::new();
    let mut max_res: f64 = 0.0;
    for v in figure.interior_vertices() {
        let (odd, even) = odd_even(figure, angles, v);
        let residual = log_sine_residual(&odd, &even);
        max_res = max_res.max(residual.abs());
        let relative = -(-residual.abs()).exp_m1();
        if relative > tol {
            violations.push(ConditionViolation {
                locus: Locus::Vertex(figure.label(v).to_string()),
                residual,
                detail: format!("sine products differ by a relative {}", fmt9(relative)),
            });
        }
    }
    Ok(ConditionReport::new(Condition::SineRotation, violations, max_res))
}

/// Largest gap after sorted greedy matching of two equal-length multisets.
pub fn multiset_gap(a: &[f64], b: &[f64]) -> f64 {
    let mut a = a.to_vec();
    let mut b = b.to_vec();
    a.sort_by(f64::total_cmp);
    b.sort_by(f64::total_cmp);
    a.iter().zip(&b).map(|(x, y)| (x - y).abs()).fold(0.0, f64::max)
}

pub fn check_pairing(figure: &Figure, angles: &AngleAssignment, tol: f64) -> Result<ConditionReport, ConditionError> {
    ensure_total(figure, angles)?;
    let mut violations = Vec::new();
    let mut max_res: f64 = 0.0;
    for v in figure.interior_vertices() {
        let (odd, even) = odd_even(figure, angles, v);
        let gap = multiset_gap(&odd, &even);
        max_res = max_res.max(gap);
        if gap > tol {
            let show = |xs: &[f64]| xs.iter().map(|x| fmt9(*x)).collect::<Vec<_>>().join(", ");
            violations.push(ConditionViolation {
                locus: Locus::Vertex(figure.label(v).to_string()),
                residual: gap,
                detail: format!("odd {{{}}} vs even {{{}}}", show(&odd), show(&even)),
            });
        }
    }
    Ok(ConditionReport::new(Condition::Pairing, violations, max_res))
}

pub fn realizability_verdict(
    figure: &Figure,
    angles: &AngleAssignment,
    tol: &Tolerances,
) -> Result<Verdict, ConditionError> {
    let pi = check_pi(figure, angles, tol.pi)?;
    let two_pi = check_two_pi(figure, angles, tol.two_pi)?;
    let sine = check_sine_rotation(figure, angles, tol.sine)?;
    let pairing = check_pairing(figure, angles, tol.pairing)?;
    let realizable = pi.passed && two_pi.passed && sine.passed;
    let via = if realizable && pairing.passed { Certificate::PairingCorollary } else { Certificate::Conditions };
    Ok(Verdict { realizable, via, reports: vec![pi, two_pi, sine, pairing] })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn single(a: [f64; 3]) -> (Figure, AngleAssignment) {
        let f = Figure::new_valid("t", &["A", "B", "C"], &[["A", "B", "C"]]).unwrap();
        let m = AngleAssignment::new(&f, vec![a]).unwrap();
        (f, m)
    }

    fn incenter(rows: [[f64; 3]; 3]) -> (Figure, AngleAssignment) {
        let f = Figure::new_valid("i", &["A", "B", "C", "I"], &[["A", "B", "I"], ["B", "C", "I"], ["C", "A", "I"]])
            .unwrap();
        let m = AngleAssignment::new(&f, rows.to_vec()).unwrap();
        (f, m)
    }

    /// Fan of three triangles around O with the given (first, second)
    /// non-central angles listed in clockwise walk order.
    fn fan3(pairs: [(f64, f64); 3]) -> (Figure, AngleAssignment) {
        let f = Figure::new_valid("fan", &["O", "P", "Q", "R"], &[["O", "P", "Q"], ["O", "Q", "R"], ["O", "R", "P"]])
            .unwrap();
        let o = f.vertex("O").unwrap();
        let mut rows = vec![[0.0; 3]; 3];
        for (e, &(odd, even)) in f.fan(o).entries.iter().zip(&pairs) {
            rows[e.triangle][e.odd_slot] = odd;
            rows[e.triangle][e.even_slot] = even;
            rows[e.triangle][e.slot] = 180.0 - odd - even;
        }
        let m = AngleAssignment::new(&f, rows).unwrap();
        (f, m)
    }

    #[test]
    fn pi_examples() {
        assert!(check_pi(&single([60.0, 60.0, 60.0]).0, &single([60.0, 60.0, 60.0]).1, 1e-9).unwrap().passed);
        let (f, m) = single([30.0, 30.0, 120.0]);
        assert!(check_pi(&f, &m, 1e-9).unwrap().passed);
        let (f, m) = single([90.0, 60.0, 40.0]);
        let r = check_pi(&f, &m, 1e-9).unwrap();
        assert!(!r.passed);
        assert_eq!(r.violations[0].locus, Locus::Triangle(0));
        assert_eq!(r.violations[0].residual, 10.0);
    }

    #[test]
    fn two_pi_examples() {
        let (f, m) = incenter([[30.0, 30.0, 120.0]; 3]);
        assert!(check_two_pi(&f, &m, 1e-9).unwrap().passed);

        let (f, m) = incenter([[30.0, 31.0, 119.0], [30.0, 30.0, 120.0], [30.0, 30.0, 120.0]]);
        let r = check_two_pi(&f, &m, 1e-9).unwrap();
        assert!(!r.passed);
        assert_eq!(r.violations.len(), 1);
        assert_eq!(r.violations[0].locus, Locus::Vertex("I".into()));
        assert!((r.violations[0].residual + 1.0).abs() < 1e-12);

        // exterior vertex with 30 + 40 = 70
        let (f, m) = incenter([[30.0, 50.0, 100.0], [50.0, 40.0, 90.0], [70.0, 40.0, 70.0]]);
        let r = check_two_pi(&f, &m, 1e-9).unwrap();
        assert!(!r.violations.iter().any(|v| v.locus == Locus::Vertex("A".into())));
    }

    #[test]
    fn exterior_straight_angle_is_allowed() {
        // A(v) = 180 exactly at a perimeter vertex
        let f = Figure::new_valid("s", &["A", "B", "C", "M"], &[["A", "M", "C"], ["M", "B", "C"]]).unwrap();
        let m = AngleAssignment::new(&f, vec![[30.0, 90.0, 60.0], [90.0, 60.0, 30.0]]).unwrap();
        assert!(check_two_pi(&f, &m, 1e-9).unwrap().passed);
        let m = AngleAssignment::new(&f, vec![[30.0, 90.5, 59.5], [90.0, 60.0, 30.0]]).unwrap();
        assert!(!check_two_pi(&f, &m, 1e-9).unwrap().passed);
    }

    #[test]
    fn sine_rotation_examples() {
        let (f, m) = incenter([[30.0, 30.0, 120.0]; 3]);
        let r = check_sine_rotation(&f, &m, 1e-9).unwrap();
        assert!(r.passed);
        assert_eq!(r.max_residual, 0.0);

        // same multiset in a different order
        let (f, m) = fan3([(40.0, 60.0), (50.0, 40.0), (60.0, 50.0)]);
        assert!(check_sine_rotation(&f, &m, 1e-9).unwrap().passed);

        let (f, m) = fan3([(30.0, 40.0), (50.0, 60.0), (70.0, 80.0)]);
        let r = check_sine_rotation(&f, &m, 1e-9).unwrap();
        assert!(!r.passed);
        // sin30 sin50 sin70 = 0.35992; sin40 sin60 sin80 = 0.54826
        let rel = 1.0
            - (0.5 * 50f64.to_radians().sin() * 70f64.to_radians().sin())
                / (40f64.to_radians().sin() * 60f64.to_radians().sin() * 80f64.to_radians().sin());
        assert!(rel > 0.1);
        assert!((r.violations[0].residual.abs() - (1.0 - rel).ln().abs()).abs() < 1e-12);
    }

    #[test]
    fn sine_rotation_rejects_out_of_range() {
        let (f, m) = incenter([[0.0, 60.0, 120.0], [30.0, 30.0, 120.0], [30.0, 30.0, 120.0]]);
        assert!(matches!(
            check_sine_rotation(&f, &m, 1e-9),
            Err(ConditionError::OutOfRange { triangle: 0, slot: 0, .. })
        ));
    }

    #[test]
    fn pairing_examples() {
        let (f, m) = incenter([[30.0, 30.0, 120.0]; 3]);
        assert!(check_pairing(&f, &m, 1e-9).unwrap().passed);
        let (f, m) = fan3([(20.0, 45.0), (80.0, 20.0), (45.0, 80.0)]);
        assert!(check_pairing(&f, &m, 1e-9).unwrap().passed);
        let (f, m) = fan3([(20.0, 45.0), (80.0, 25.0), (45.0, 75.0)]);
        assert!(!check_pairing(&f, &m, 1e-9).unwrap().passed);
    }

    #[test]
    fn verdict_examples() {
        let (f, m) = incenter([[30.0, 30.0, 120.0]; 3]);
        let v = realizability_verdict(&f, &m, &Tolerances::AUTHORED).unwrap();
        assert!(v.realizable);
        assert_eq!(v.via, Certificate::PairingCorollary);

        // perturb one base angle, restore pi via the central angle
        let (f, m) = incenter([[31.0, 30.0, 119.0], [30.0, 30.0, 120.0], [30.0, 30.0, 120.0]]);
        let v = realizability_verdict(&f, &m, &Tolerances::AUTHORED).unwrap();
        assert!(!v.realizable);
        assert!(!v.report(Condition::TwoPi).passed);

        // perturb a base angle against the other base angle
        let (f, m) = incenter([[31.0, 29.0, 120.0], [30.0, 30.0, 120.0], [30.0, 30.0, 120.0]]);
        let v = realizability_verdict(&f, &m, &Tolerances::AUTHORED).unwrap();
        assert!(!v.realizable);
        assert!(!v.report(Condition::SineRotation).passed);
    }

    #[test]
    fn missing_angles() {
        let (f, _) = incenter([[30.0, 30.0, 120.0]; 3]);
        let (g, m) = single([60.0; 3]);
        let _ = g;
        assert!(matches!(check_pi(&f, &m, 1e-9), Err(ConditionError::MissingAngles { expected: 3, got: 1 })));
    }
}
