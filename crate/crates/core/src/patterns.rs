//! Pairing patterns around an interior vertex.
//!
//! A fan of `n` triangles carries `n` ordered pairs `(odd_i, even_i)` of
//! non-central angles. A pattern names them with letters so that equal
//! letters mean equal angles; each letter is used exactly once in first
//! position and once in second position, which is what makes the odd and
//! even multisets coincide. Two patterns are equivalent when they differ by a
//! renaming of letters, a rotation of the fan, or a reversal of the string
//! (pair order reversed and each pair read backwards, as happens when the fan
//! is walked the other way).

use crate::angles::AngleAssignment;
use crate::figure::Figure;
use serde::Serialize;
use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;
use thiserror::Error;

pub const MIN_FAN: usize = 2;
pub const MAX_FAN: usize = 8;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum PatternError {
    #[error("fan size {0} out of range {MIN_FAN}..={MAX_FAN}")]
    OutOfRange(usize),
    #[error("letter {0} does not occur exactly once as a first and once as a second element")]
    Occurrence(char),
    #[error("cannot parse pattern: {0}")]
    Parse(String),
    #[error("expected {expected} letter values, got {got}")]
    Values { expected: usize, got: usize },
    #[error("fan at {0} does not match the pattern length")]
    FanMismatch(String),
}

/// Circular sequence of ordered letter pairs, letters stored as indices.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PairingPattern {
    pairs: Vec<(u8, u8)>,
}

impl PairingPattern {
    pub fn new(pairs: Vec<(u8, u8)>) -> Result<Self, PatternError> {
        let n = pairs.len();
        if !(MIN_FAN..=MAX_FAN).contains(&n) {
            return Err(PatternError::OutOfRange(n));
        }
        let mut first = BTreeMap::<u8, usize>::new();
        let mut second = BTreeMap::<u8, usize>::new();
        for &(a, b) in &pairs {
            *first.entry(a).or_default() += 1;
            *second.entry(b).or_default() += 1;
        }
        for letter in first.keys().chain(second.keys()) {
            if first.get(letter) != Some(&1) || second.get(letter) != Some(&1) {
                return Err(PatternError::Occurrence(letter_char(*letter)));
            }
        }
        Ok(Self { pairs })
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn pairs(&self) -> &[(u8, u8)] {
        &self.pairs
    }

    /// `s` for a pair of equal letters, `d` otherwise.
    pub fn signature(&self) -> String {
        self.pairs.iter().map(|(a, b)| if a == b { 's' } else { 'd' }).collect()
    }

    fn rotated(&self, k: usize) -> Vec<(u8, u8)> {
        let n = self.pairs.len();
        (0..n).map(|i| self.pairs[(i + k) % n]).collect()
    }

    fn reversed(&self) -> Self {
        Self { pairs: self.pairs.iter().rev().map(|&(a, b)| (b, a)).collect() }
    }

    /// Renames letters in order of first appearance in the string.
    fn first_seen(pairs: &[(u8, u8)]) -> Vec<(u8, u8)> {
        let mut map = BTreeMap::new();
        let mut name = |x: u8| {
            let next = map.len() as u8;
            *map.entry(x).or_insert(next)
        };
        pairs
            .iter()
            .map(|&(a, b)| {
                let a = name(a);
                (a, name(b))
            })
            .collect()
    }

    /// Renames letters so the first elements read `A, B, C, ...` in order.
    /// Every pattern has exactly one such form; these are the raw patterns.
    fn raw_form(pairs: &[(u8, u8)]) -> Vec<(u8, u8)> {
        let mut map = [0u8; 256];
        for (i, &(a, _)) in pairs.iter().enumerate() {
            map[a as usize] = i as u8;
        }
        pairs.iter().map(|&(a, b)| (map[a as usize], map[b as usize])).collect()
    }

    fn orbit(&self) -> impl Iterator<Item = Vec<(u8, u8)>> + '_ {
        let rev = self.reversed();
        (0..self.len()).flat_map(move |k| [self.rotated(k), rev.rotated(k)])
    }
}

fn letter_char(x: u8) -> char {
    (b'A' + x) as char
}

impl fmt::Display for PairingPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, &(a, b)) in self.pairs.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{}{}", letter_char(a), letter_char(b))?;
        }
        Ok(())
    }
}

impl FromStr for PairingPattern {
    type Err = PatternError;

    /// Accepts whitespace-separated two-letter pairs, e.g. `"AB BC CA"`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut pairs = Vec::new();
        for tok in s.split_whitespace() {
            let cs: Vec<char> = tok.chars().collect();
            match cs.as_slice() {
                [a, b] if a.is_ascii_uppercase() && b.is_ascii_uppercase() => {
                    pairs.push((*a as u8 - b'A', *b as u8 - b'A'));
                }
                _ => return Err(PatternError::Parse(tok.to_string())),
            }
        }
        Self::new(pairs)
    }
}

impl Serialize for PairingPattern {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PatternClass {
    pub canonical: PairingPattern,
    pub signature: String,
    /// Raw patterns (first elements reading `A, B, C, ...`) in the class.
    pub members: usize,
}

impl fmt::Display for PatternClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}  {}  {}", self.canonical, self.signature, self.members)
    }
}

/// Orders signatures with `s` before `d`, then canonical forms.
fn class_order(a: &PatternClass, b: &PatternClass) -> Ordering {
    let key = |c: &PatternClass| c.signature.bytes().map(|x| x == b'd').collect::<Vec<_>>();
    key(a).cmp(&key(b)).then_with(|| a.canonical.cmp(&b.canonical))
}

/// Canonical form, signature and class size of `pattern`.
pub fn classify_pattern(pattern: &PairingPattern) -> PatternClass {
    let mut canonical: Option<Vec<(u8, u8)>> = None;
    let mut raw = BTreeSet::new();
    for q in pattern.orbit() {
        let c = PairingPattern::first_seen(&q);
        if canonical.as_ref().is_none_or(|best| c < *best) {
            canonical = Some(c);
        }
        raw.insert(PairingPattern::raw_form(&q));
    }
    let canonical = PairingPattern { pairs: canonical.expect("non-empty orbit") };
    PatternClass { signature: canonical.signature(), canonical, members: raw.len() }
}

/// Every equivalence class of patterns on `n` pairs, by brute force over the
/// `n!` raw patterns.
pub fn enumerate_patterns(n: usize) -> Result<Vec<PatternClass>, PatternError> {
    if !(MIN_FAN..=MAX_FAN).contains(&n) {
        return Err(PatternError::OutOfRange(n));
    }
    let mut seen: BTreeMap<Vec<(u8, u8)>, PatternClass> = BTreeMap::new();
    let mut perm: Vec<u8> = (0..n as u8).collect();
    loop {
        let p = PairingPattern { pairs: perm.iter().enumerate().map(|(i, &s)| (i as u8, s)).collect() };
        let class = classify_pattern(&p);
        seen.entry(class.canonical.pairs.clone()).or_insert(class);
        if !next_permutation(&mut perm) {
            break;
        }
    }
    let mut out: Vec<PatternClass> = seen.into_values().collect();
    out.sort_by(class_order);
    Ok(out)
}

fn next_permutation(v: &mut [u8]) -> bool {
    let Some(i) = v.windows(2).rposition(|w| w[0] < w[1]) else {
        return false;
    };
    let j = v.iter().rposition(|&x| x > v[i]).expect("pivot has a successor");
    v.swap(i, j);
    v[i + 1..].reverse();
    true
}

/// Odd or even non-central angle of fan entry `entry`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub enum FanAngle {
    Odd(usize),
    Even(usize),
}

/// The equalities a pattern imposes: `odd_i = even_j` whenever the first
/// letter of pair `i` is the second letter of pair `j`.
pub fn pattern_to_constraints(pattern: &PairingPattern) -> Vec<(FanAngle, FanAngle)> {
    let p = pattern.pairs();
    let mut out = Vec::with_capacity(p.len());
    for (i, &(a, _)) in p.iter().enumerate() {
        for (j, &(_, b)) in p.iter().enumerate() {
            if a == b {
                out.push((FanAngle::Odd(i), FanAngle::Even(j)));
            }
        }
    }
    out
}

/// Angle rows `[odd, even, central]` for a fan following `pattern`, with
/// letter `k` worth `values[k]` degrees. The central angles close to 360
/// exactly when the values sum to `90 (n − 2)`.
pub fn pattern_fan_rows(pattern: &PairingPattern, values: &[f64]) -> Result<Vec<[f64; 3]>, PatternError> {
    if values.len() != pattern.len() {
        return Err(PatternError::Values { expected: pattern.len(), got: values.len() });
    }
    Ok(pattern
        .pairs()
        .iter()
        .map(|&(a, b)| {
            let (x, y) = (values[a as usize], values[b as usize]);
            [x, y, 180.0 - x - y]
        })
        .collect())
}

/// Writes the pattern's rows into the fan of interior vertex `v`.
pub fn apply_pattern(
    figure: &Figure,
    angles: &mut AngleAssignment,
    v: usize,
    pattern: &PairingPattern,
    values: &[f64],
) -> Result<(), PatternError> {
    let fan = figure.fan(v);
    if fan.entries.len() != pattern.len() || !figure.is_interior(v) {
        return Err(PatternError::FanMismatch(figure.label(v).to_string()));
    }
    for (e, row) in fan.entries.iter().zip(pattern_fan_rows(pattern, values)?) {
        angles.set(e.triangle, e.odd_slot, row[0]);
        angles.set(e.triangle, e.even_slot, row[1]);
        angles.set(e.triangle, e.slot, row[2]);
    }
    Ok(())
}

/// Wheel figure: center `O`, rim `R0 .. R(n-1)` counterclockwise.
pub fn wheel(n: usize) -> Figure {
    let mut labels = vec!["O".to_string()];
    labels.extend((0..n).map(|i| format!("R{i}")));
    let tris: Vec<[String; 3]> =
        (0..n).map(|i| [format!("R{i}"), format!("R{}", (i + 1) % n), "O".to_string()]).collect();
    Figure::new_valid(format!("wheel{n}"), &labels, &tris).expect("wheel is a valid figure")
}
