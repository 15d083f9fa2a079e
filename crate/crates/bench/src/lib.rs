//! Inputs shared by the benches.

use trirealize::theorems::{build_morley_classic, build_morley_hexagon};
use trirealize::{AngleAssignment, Figure, PairingPattern};

/// Wheel of `n` triangles with the incenter pattern `AA BB ..`, every
/// non-central angle `90 (n - 2) / n`.
pub fn wheel_fixture(n: usize) -> (Figure, AngleAssignment) {
    let figure = trirealize::patterns::wheel(n);
    let pairs: Vec<String> = (0..n).map(|i| char::from(b'A' + i as u8).to_string().repeat(2)).collect();
    let pattern: PairingPattern = pairs.join(" ").parse().expect("valid pattern");
    let mut angles = AngleAssignment::new(&figure, vec![[60.0; 3]; n]).expect("row count");
    let x = 90.0 * (n as f64 - 2.0) / n as f64;
    let o = figure.vertex("O").expect("center");
    trirealize::patterns::apply_pattern(&figure, &mut angles, o, &pattern, &vec![x; n]).expect("pattern fits");
    (figure, angles)
}

pub fn morley_fixture() -> (Figure, AngleAssignment) {
    let s = build_morley_classic(84.0, 57.0, 39.0).expect("valid triangle");
    (s.figure, s.angles)
}

pub fn hexagon_fixture() -> (Figure, AngleAssignment) {
    let s = build_morley_hexagon(150.0, 100.0, 90.0).expect("valid hexagon");
    (s.figure, s.angles)
}
