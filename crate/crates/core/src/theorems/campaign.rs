use super::{build, OracleCheck, ScenarioName};
use crate::conditions::{realizability_verdict, Certificate, Tolerances};
use crate::geom::fmt9;
use crate::realizer::{measure_angles, realize, similarity_deviation};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use std::fmt;

/// Distance kept from domain boundaries when drawing parameters.
pub const MARGIN: f64 = 5.0;
pub const STRESS_MARGIN: f64 = 0.01;
pub const DEFAULT_TOL: f64 = 1e-9;
pub const STRESS_TOL: f64 = 1e-6;
/// Per-corner tolerance for realize → measure.
pub const ROUND_TRIP_TOL: f64 = 1e-7;

fn uniform(rng: &mut impl Rng, lo: f64, hi: f64) -> f64 {
    if hi > lo {
        rng.random_range(lo..hi)
    } else {
        lo
    }
}

/// Three angles at least `lo` each, summing to `total`.
fn split3(rng: &mut impl Rng, total: f64, lo: f64) -> [f64; 3] {
    loop {
        let a = uniform(rng, lo, total - 2.0 * lo);
        let b = uniform(rng, lo, total - 2.0 * lo);
        let c = total - a - b;
        if c >= lo {
            return [a, b, c];
        }
    }
}

/// Parameters for `name`, uniform over its domain shrunk by `margin`
/// degrees, in the order [`build`](super::build) expects.
pub fn sample_params(name: ScenarioName, rng: &mut impl Rng, margin: f64) -> Vec<f64> {
    let m = margin;
    match name {
        ScenarioName::MorleyClassic | ScenarioName::MorleyPartial | ScenarioName::IncenterEquilateral => {
            split3(rng, 180.0, m).to_vec()
        }
        ScenarioName::MorleyHexagon => loop {
            let v: Vec<f64> = (0..3).map(|_| uniform(rng, m, 180.0 - m)).collect();
            let s: f64 = v.iter().sum();
            if s > 180.0 + m && s < 360.0 - m {
                return v;
            }
        },
        ScenarioName::BisectorHexagon => loop {
            let v: Vec<f64> = (0..3).map(|_| uniform(rng, m, 180.0 - m)).collect();
            let delta = (720.0 - v.iter().sum::<f64>()) / 3.0;
            if delta > m && delta < 180.0 - m {
                return vec![v[0], v[1], 720.0 - v[0] - v[1] - 3.0 * delta, delta];
            }
        },
        ScenarioName::SemiMedian => {
            let [a, b, c] = split3(rng, 180.0, 3.0 * m);
            let d = uniform(rng, m / 5.0, a.min(b).min(c) / 2.0 - m / 5.0);
            vec![a, b, c, d]
        }
        ScenarioName::Quadriceptor => split3(rng, 45.0, m / 4.0).to_vec(),
        ScenarioName::CircleChords => {
            let alpha = uniform(rng, m, 180.0 - 2.0 * m);
            let beta = uniform(rng, alpha + m, 180.0 - m);
            let half = (alpha + beta) / 2.0;
            let lim = half.min(180.0 - half) - m;
            let d = if lim > 0.0 { uniform(rng, -lim, lim) } else { 0.0 };
            let r = uniform(rng, -180.0, 180.0);
            vec![alpha, beta, r + d / 2.0, r - d / 2.0]
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum TrialOutcome {
    /// A stage errored; recorded instead of aborting the campaign.
    Failed { stage: &'static str, error: String },
    Completed {
        realizable: bool,
        certificate: Certificate,
        /// The oracle-measured map also passes the checker.
        oracle_realizable: bool,
        /// Realizer vs oracle, canonical pose, relative to the diameter.
        deviation: f64,
        round_trip: f64,
        max_closure: f64,
        checks: Vec<OracleCheck>,
        observed: Vec<(&'static str, f64)>,
        passed: bool,
    },
}

impl TrialOutcome {
    pub fn passed(&self) -> bool {
        matches!(self, TrialOutcome::Completed { passed: true, .. })
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TrialRecord {
    pub trial: usize,
    pub params: Vec<(&'static str, f64)>,
    pub outcome: TrialOutcome,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CheckSummary {
    pub name: String,
    pub max: f64,
    pub limit: f64,
    pub passed: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerificationReport {
    pub scenario: ScenarioName,
    pub trials: usize,
    pub seed: u64,
    pub tol: f64,
    pub stress: bool,
    pub passed: usize,
    pub max_deviation: f64,
    pub max_round_trip: f64,
    pub checks: Vec<CheckSummary>,
    pub records: Vec<TrialRecord>,
}

impl VerificationReport {
    pub fn all_passed(&self) -> bool {
        self.passed == self.trials
    }

    pub fn check(&self, name: &str) -> Option<&CheckSummary> {
        self.checks.iter().find(|c| c.name == name)
    }
}

fn param_names(name: ScenarioName) -> &'static [&'static str] {
    match name {
        ScenarioName::MorleyClassic | ScenarioName::MorleyPartial | ScenarioName::IncenterEquilateral => {
            &["A", "B", "C"]
        }
        ScenarioName::MorleyHexagon => &["A", "B", "Gamma"],
        ScenarioName::BisectorHexagon | ScenarioName::SemiMedian => &["alpha", "beta", "gamma", "delta"],
        ScenarioName::Quadriceptor => &["alpha", "beta", "gamma"],
        ScenarioName::CircleChords => &["alpha", "beta", "t", "t2"],
    }
}

fn run_trial(name: ScenarioName, trial: usize, seed: u64, tol: f64, stress: bool) -> TrialRecord {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(trial as u64);
    let margin = if stress { STRESS_MARGIN } else { MARGIN };
    let raw = sample_params(name, &mut rng, margin);
    let params: Vec<(&'static str, f64)> = param_names(name).iter().copied().zip(raw.iter().copied()).collect();
    let failed = |stage, error: String| TrialRecord {
        trial,
        params: params.clone(),
        outcome: TrialOutcome::Failed { stage, error },
    };

    let scenario = match build(name, &raw) {
        Ok(s) => s,
        Err(e) => return failed("build", e.to_string()),
    };
    let verdict = match realizability_verdict(&scenario.figure, &scenario.angles, &scenario.tolerances()) {
        Ok(v) => v,
        Err(e) => return failed("verdict", e.to_string()),
    };
    let oracle_realizable = realizability_verdict(&scenario.figure, &scenario.oracle_angles(), &Tolerances::MEASURED)
        .map(|v| v.realizable)
        .unwrap_or(false);
    let round_trip_tol = if stress { STRESS_TOL.max(tol) } else { ROUND_TRIP_TOL };
    let real = match realize(&scenario.figure, &scenario.angles, round_trip_tol.max(tol)) {
        Ok(r) => r,
        Err(e) => return failed("realize", e.to_string()),
    };
    let deviation = similarity_deviation(&scenario.figure, &real.coords, &scenario.oracle.points);
    let round_trip = match measure_angles(&real, &scenario.figure) {
        Ok(m) => m.max_abs_diff(&scenario.angles),
        Err(e) => return failed("measure", e.to_string()),
    };
    let passed = verdict.realizable
        && oracle_realizable
        && deviation <= tol
        && round_trip <= round_trip_tol
        && scenario.oracle.checks.iter().all(|c| c.passes(tol));
    TrialRecord {
        trial,
        params,
        outcome: TrialOutcome::Completed {
            realizable: verdict.realizable,
            certificate: verdict.via,
            oracle_realizable,
            deviation,
            round_trip,
            max_closure: real.max_closure_residual(),
            checks: scenario.oracle.checks,
            observed: scenario.oracle.observed,
            passed,
        },
    }
}

/// Runs `trials` independent draws of scenario `name`. Trial `k` uses the
/// ChaCha8 stream `k` of `seed`, so the report does not depend on thread
/// scheduling. `stress` narrows the margin to the domain boundary.
pub fn run_verification(name: ScenarioName, trials: usize, seed: u64, tol: f64, stress: bool) -> VerificationReport {
    let records: Vec<TrialRecord> =
        (0..trials).into_par_iter().map(|k| run_trial(name, k, seed, tol, stress)).collect();
    let mut checks: Vec<CheckSummary> = Vec::new();
    let (mut max_deviation, mut max_round_trip) = (0.0f64, 0.0f64);
    for r in &records {
        if let TrialOutcome::Completed { deviation, round_trip, checks: cs, .. } = &r.outcome {
            max_deviation = max_deviation.max(*deviation);
            max_round_trip = max_round_trip.max(*round_trip);
            for c in cs {
                let limit = c.limit.unwrap_or(tol);
                let slot = match checks.iter().position(|s| s.name == c.name) {
                    Some(i) => i,
                    None => {
                        checks.push(CheckSummary { name: c.name.to_string(), max: 0.0, limit, passed: 0 });
                        checks.len() - 1
                    }
                };
                checks[slot].max = checks[slot].max.max(c.value);
                checks[slot].passed += usize::from(c.passes(tol));
            }
        }
    }
    VerificationReport {
        scenario: name,
        trials,
        seed,
        tol,
        stress,
        passed: records.iter().filter(|r| r.outcome.passed()).count(),
        max_deviation,
        max_round_trip,
        checks,
        records,
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "{}: {}/{} passed (seed {}, tol {}{})",
            self.scenario,
            self.passed,
            self.trials,
            self.seed,
            fmt9(self.tol),
            if self.stress { ", stress" } else { "" }
        )?;
        writeln!(f, "  {:<22} max {}", "realization deviation", fmt9(self.max_deviation))?;
        writeln!(f, "  {:<22} max {}", "round trip", fmt9(self.max_round_trip))?;
        for c in &self.checks {
            writeln!(f, "  {:<22} max {}  limit {}  {}/{}", c.name, fmt9(c.max), fmt9(c.limit), c.passed, self.trials)?;
        }
        for r in &self.records {
            let show = self.records.len() == 1 || !r.outcome.passed();
            if !show {
                continue;
            }
            let params: Vec<String> = r.params.iter().map(|(n, v)| format!("{n}={}", fmt9(*v))).collect();
            write!(f, "  trial {} [{}]", r.trial, params.join(" "))?;
            match &r.outcome {
                TrialOutcome::Failed { stage, error } => writeln!(f, " failed at {stage}: {error}")?,
                TrialOutcome::Completed { passed, certificate, observed, checks, deviation, .. } => {
                    writeln!(f, " {} via {:?}", if *passed { "pass" } else { "FAIL" }, certificate)?;
                    writeln!(f, "    deviation {}", fmt9(*deviation))?;
                    for (n, v) in observed {
                        writeln!(f, "    {n} = {}", fmt9(*v))?;
                    }
                    for c in checks {
                        writeln!(f, "    {} = {}", c.name, fmt9(c.value))?;
                    }
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn deterministic_for_seed() {
        let a = run_verification(ScenarioName::CircleChords, 8, 5, DEFAULT_TOL, false);
        let b = run_verification(ScenarioName::CircleChords, 8, 5, DEFAULT_TOL, false);
        assert_eq!(a, b);
        let c = run_verification(ScenarioName::CircleChords, 8, 6, DEFAULT_TOL, false);
        assert_ne!(a.records[0].params, c.records[0].params);
    }

    #[test]
    fn samples_respect_domains() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for name in ScenarioName::ALL {
            for _ in 0..200 {
                let p = sample_params(name, &mut rng, MARGIN);
                build(name, &p).unwrap_or_else(|e| panic!("{name} {p:?}: {e}"));
            }
        }
    }

    #[test]
    fn every_scenario_passes_a_short_campaign() {
        for name in ScenarioName::ALL {
            let r = run_verification(name, 10, 42, DEFAULT_TOL, false);
            assert!(r.all_passed(), "{r}");
        }
    }
}
