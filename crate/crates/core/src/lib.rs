//! Realizability of angle assignments on convex simple triangulated figures.
//!
//! The crate decides whether a map from triangle corners to angle sizes can
//! be drawn in the plane, builds the drawing when it can, enumerates the
//! equal-angle pairing patterns that certify realizability around a vertex,
//! and checks a catalogue of classical theorems (Morley and friends) against
//! direct coordinate constructions.

pub mod angles;
pub mod conditions;
pub mod figure;
pub mod geom;
pub mod patterns;
pub mod realizer;
pub mod theorems;

pub use angles::{AngleAssignment, AngleError};
pub use conditions::{
    check_pairing, check_pi, check_sine_rotation, check_two_pi, realizability_verdict, Certificate, Condition,
    ConditionError, ConditionReport, Tolerances, Verdict,
};
pub use figure::{
    classify_vertices, parse_figure, validate_structure, Figure, FigureDocument, FigureError, ValidationReport,
    VertexClass, VertexId,
};
pub use geom::Point2;
pub use patterns::{
    classify_pattern, enumerate_patterns, pattern_to_constraints, FanAngle, PairingPattern, PatternClass, PatternError,
};
pub use realizer::{
    closure_residual, measure_angles, realize, realize_from, to_svg, verify_convex, ClosureResidual, Realization,
    RealizeError,
};
pub use theorems::{run_verification, Scenario, ScenarioError, ScenarioName, VerificationReport};
