//! Classical configurations built as figure + angle map pairs, each with an
//! independent coordinate construction to check against.
//!
//! Builders whose map has a closed form use it directly; for the Morley
//! figures the map is read off the construction and then fed back through the
//! checker and the realizer.

mod campaign;
mod circle;
mod concurrency;
mod incenter;
mod morley;
pub mod oracle;

pub use campaign::{
    run_verification, sample_params, CheckSummary, TrialOutcome, TrialRecord, VerificationReport, DEFAULT_TOL, MARGIN,
    ROUND_TRIP_TOL, STRESS_MARGIN, STRESS_TOL,
};
pub use circle::{build_circle_chords, build_circle_chords_tilted};
pub use concurrency::{build_bisector_hexagon, build_semi_median, semi_median_split};
pub use incenter::{build_incenter_equilateral, build_quadriceptor};
pub use morley::{build_morley_classic, build_morley_hexagon, build_morley_partial, hexagon_family_deviation};

use crate::angles::AngleAssignment;
use crate::conditions::Tolerances;
use crate::figure::Figure;
use crate::geom::Point2;
use serde::Serialize;
use std::fmt;
use std::str::FromStr;
use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ScenarioName {
    MorleyClassic,
    MorleyHexagon,
    BisectorHexagon,
    SemiMedian,
    IncenterEquilateral,
    Quadriceptor,
    CircleChords,
    MorleyPartial,
}

impl ScenarioName {
    pub const ALL: [ScenarioName; 8] = [
        ScenarioName::MorleyClassic,
        ScenarioName::MorleyHexagon,
        ScenarioName::BisectorHexagon,
        ScenarioName::SemiMedian,
        ScenarioName::IncenterEquilateral,
        ScenarioName::Quadriceptor,
        ScenarioName::CircleChords,
        ScenarioName::MorleyPartial,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            ScenarioName::MorleyClassic => "morley_classic",
            ScenarioName::MorleyHexagon => "morley_hexagon",
            ScenarioName::BisectorHexagon => "bisector_hexagon",
            ScenarioName::SemiMedian => "semi_median",
            ScenarioName::IncenterEquilateral => "incenter_equilateral",
            ScenarioName::Quadriceptor => "quadriceptor",
            ScenarioName::CircleChords => "circle_chords",
            ScenarioName::MorleyPartial => "morley_partial",
        }
    }

    pub fn valid_names() -> String {
        Self::ALL.map(Self::as_str).join(", ")
    }
}

impl fmt::Display for ScenarioName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for ScenarioName {
    type Err = ScenarioError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Self::ALL.into_iter().find(|n| n.as_str() == s).ok_or_else(|| ScenarioError::UnknownName(s.to_string()))
    }
}

#[derive(Debug, Error, Clone, PartialEq)]
pub enum ScenarioError {
    #[error("unknown scenario {0:?}; valid names: {names}", names = ScenarioName::valid_names())]
    UnknownName(String),
    #[error("parameters outside the domain: {0}")]
    Domain(String),
    #[error("construction failed: {0}")]
    Construction(String),
}

/// Where a scenario's angle map comes from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum MapSource {
    /// Closed-form values in the parameters.
    Formula,
    /// Measured on the oracle construction.
    Measured,
}

/// One conclusion measured on the oracle construction. `value` is a
/// deviation; `limit` overrides the campaign tolerance when set.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct OracleCheck {
    pub name: &'static str,
    pub value: f64,
    pub limit: Option<f64>,
}

impl OracleCheck {
    pub fn new(name: &'static str, value: f64) -> Self {
        Self { name, value, limit: None }
    }

    pub fn passes(&self, tol: f64) -> bool {
        self.value <= self.limit.unwrap_or(tol)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Oracle {
    /// Vertex positions, indexed like the figure's vertices.
    pub points: Vec<Point2>,
    pub checks: Vec<OracleCheck>,
    /// Measured quantities reported alongside the checks.
    pub observed: Vec<(&'static str, f64)>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Scenario {
    pub name: ScenarioName,
    pub params: Vec<(&'static str, f64)>,
    pub figure: Figure,
    pub angles: AngleAssignment,
    pub source: MapSource,
    pub oracle: Oracle,
}

impl Scenario {
    /// Authored maps are exact up to rounding; measured ones carry the
    /// oracle's own floating-point error.
    pub fn tolerances(&self) -> Tolerances {
        match self.source {
            MapSource::Formula => Tolerances::AUTHORED,
            MapSource::Measured => Tolerances::MEASURED,
        }
    }

    pub fn param(&self, name: &str) -> Option<f64> {
        self.params.iter().find(|(n, _)| *n == name).map(|(_, v)| *v)
    }

    pub fn point(&self, label: &str) -> Option<Point2> {
        self.figure.vertex(label).map(|v| self.oracle.points[v])
    }

    pub fn check(&self, name: &str) -> Option<&OracleCheck> {
        self.oracle.checks.iter().find(|c| c.name == name)
    }

    /// Angles measured on the oracle construction.
    pub fn oracle_angles(&self) -> AngleAssignment {
        AngleAssignment::new(&self.figure, oracle::measure(&self.figure, &self.oracle.points))
            .expect("one row per triangle")
    }
}

/// Builds scenario `name` from a parameter list in the builder's order.
pub fn build(name: ScenarioName, p: &[f64]) -> Result<Scenario, ScenarioError> {
    let need = match name {
        ScenarioName::BisectorHexagon | ScenarioName::SemiMedian | ScenarioName::CircleChords => 4,
        _ => 3,
    };
    if p.len() != need {
        return Err(ScenarioError::Domain(format!("{name} takes {need} parameters, got {}", p.len())));
    }
    match name {
        ScenarioName::MorleyClassic => build_morley_classic(p[0], p[1], p[2]),
        ScenarioName::MorleyHexagon => build_morley_hexagon(p[0], p[1], p[2]),
        ScenarioName::BisectorHexagon => build_bisector_hexagon(p[0], p[1], p[2], p[3]),
        ScenarioName::SemiMedian => build_semi_median(p[0], p[1], p[2], p[3]),
        ScenarioName::IncenterEquilateral => build_incenter_equilateral(p[0], p[1], p[2]),
        ScenarioName::Quadriceptor => build_quadriceptor(p[0], p[1], p[2]),
        ScenarioName::CircleChords => build_circle_chords_tilted(p[0], p[1], p[2], p[3]),
        ScenarioName::MorleyPartial => build_morley_partial(p[0], p[1], p[2]),
    }
}

pub(crate) const SUM_TOL: f64 = 1e-9;

pub(crate) fn require(ok: bool, msg: impl FnOnce() -> String) -> Result<(), ScenarioError> {
    if ok {
        Ok(())
    } else {
        Err(ScenarioError::Domain(msg()))
    }
}

pub(crate) fn open_angle(name: &str, x: f64) -> Result<(), ScenarioError> {
    require(x > 0.0 && x < 180.0, || format!("{name} = {x} not in (0, 180)"))
}

pub(crate) fn construct(p: Option<Point2>, what: &str) -> Result<Point2, ScenarioError> {
    p.ok_or_else(|| ScenarioError::Construction(format!("{what}: lines are parallel")))
}

/// Assembles a scenario. With a formula map, the largest disagreement
/// between it and the angles measured on `points` is added as a check.
pub(crate) fn assemble(
    name: ScenarioName,
    params: Vec<(&'static str, f64)>,
    labels: &[&str],
    triangles: &[[&str; 3]],
    points: Vec<Point2>,
    formula: Option<Vec<[f64; 3]>>,
    mut checks: Vec<OracleCheck>,
) -> Result<Scenario, ScenarioError> {
    let figure = Figure::new_valid(name.as_str(), labels, triangles).expect("scenario topology is valid");
    if points.iter().any(|p| !p.x.is_finite() || !p.y.is_finite()) {
        return Err(ScenarioError::Construction("non-finite coordinate".into()));
    }
    let measured = oracle::measure(&figure, &points);
    let (rows, source) = match formula {
        Some(rows) => {
            let gap = rows
                .iter()
                .zip(&measured)
                .flat_map(|(a, b)| (0..3).map(move |k| (a[k] - b[k]).abs()))
                .fold(0.0, f64::max);
            checks.push(OracleCheck::new("map_agreement", gap));
            (rows, MapSource::Formula)
        }
        None => (measured, MapSource::Measured),
    };
    let angles = AngleAssignment::new(&figure, rows).map_err(|e| ScenarioError::Construction(e.to_string()))?;
    Ok(Scenario { name, params, figure, angles, source, oracle: Oracle { points, checks, observed: Vec::new() } })
}
