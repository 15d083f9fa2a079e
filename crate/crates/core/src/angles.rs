//! Angle assignments: one size in degrees per triangle corner.

use crate::figure::Figure;
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum AngleError {
    #[error("angle block has {got} rows but the figure has {expected} triangles")]
    Missing { expected: usize, got: usize },
    #[error("angle at triangle {triangle} corner {slot} is not finite")]
    NotFinite { triangle: usize, slot: usize },
}

/// Degrees per `(triangle, corner slot)`. Values are only required to be
/// finite here; range problems are reported by the condition checks.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct AngleAssignment {
    values: Vec<[f64; 3]>,
}

impl AngleAssignment {
    pub fn new(figure: &Figure, values: Vec<[f64; 3]>) -> Result<Self, AngleError> {
        if values.len() != figure.triangles().len() {
            return Err(AngleError::Missing { expected: figure.triangles().len(), got: values.len() });
        }
        for (t, row) in values.iter().enumerate() {
            if let Some(slot) = row.iter().position(|x| !x.is_finite()) {
                return Err(AngleError::NotFinite { triangle: t, slot });
            }
        }
        Ok(Self { values })
    }

    pub fn values(&self) -> &[[f64; 3]] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn get(&self, triangle: usize, slot: usize) -> f64 {
        self.values[triangle][slot]
    }

    pub fn set(&mut self, triangle: usize, slot: usize, deg: f64) {
        self.values[triangle][slot] = deg;
    }

    pub fn triangle(&self, triangle: usize) -> [f64; 3] {
        self.values[triangle]
    }

    /// `A(v)`: total assigned angle at vertex `v`.
    pub fn vertex_sum(&self, figure: &Figure, v: usize) -> f64 {
        figure.fan(v).entries.iter().map(|e| self.get(e.triangle, e.slot)).sum()
    }

    /// Largest per-corner difference to `other`.
    pub fn max_abs_diff(&self, other: &AngleAssignment) -> f64 {
        self.values
            .iter()
            .zip(&other.values)
            .flat_map(|(a, b)| (0..3).map(move |k| (a[k] - b[k]).abs()))
            .fold(0.0, f64::max)
    }
}
