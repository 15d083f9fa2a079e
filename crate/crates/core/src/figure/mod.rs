//! Combinatorial model of a convex simple triangulated figure.
//!
//! A [`Figure`] is a finite set of triangles over labelled vertices. Nothing
//! here knows about angle values or coordinates; the fans around each vertex
//! are reconstructed from shared edges, and a vertex is interior exactly when
//! its fan closes into a cycle.
//!
//! Corner slots are 0-based: slot `k` of a triangle is its `k`-th listed
//! corner. Input triangles are expected counterclockwise, which fixes the
//! walking direction of fans (see [`Fan`]).

mod document;
mod fan;
mod validate;

pub use document::{parse_figure, FigureDocument};
pub use fan::{Fan, FanEntry, FanShape};
pub use validate::{validate_structure, ValidationReport, Violation};

use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum FigureError {
    #[error("malformed document: {0}")]
    Malformed(String),
    #[error("empty vertex label")]
    EmptyLabel,
    #[error("duplicate vertex label `{0}`")]
    DuplicateLabel(String),
    #[error("triangle {triangle} references unknown vertex `{label}`")]
    UnknownVertex { triangle: usize, label: String },
    #[error("triangle {0} repeats a corner")]
    RepeatedCorner(usize),
    #[error("structurally invalid figure: {0}")]
    Structure(ValidationReport),
}

/// Vertex label, unique within a figure.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct VertexId(String);

impl VertexId {
    pub fn new(label: impl Into<String>) -> Result<Self, FigureError> {
        let label = label.into();
        if label.is_empty() {
            return Err(FigureError::EmptyLabel);
        }
        Ok(Self(label))
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Triangle {
    pub index: usize,
    /// Vertex indices, counterclockwise.
    pub corners: [usize; 3],
}

impl Triangle {
    /// Slot holding vertex `v`, if any.
    pub fn slot_of(&self, v: usize) -> Option<usize> {
        self.corners.iter().position(|&c| c == v)
    }

    /// Directed edges in corner order.
    pub fn edges(&self) -> [(usize, usize); 3] {
        let [a, b, c] = self.corners;
        [(a, b), (b, c), (c, a)]
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum VertexClass {
    Interior,
    Exterior,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Figure {
    name: String,
    labels: Vec<VertexId>,
    index: HashMap<String, usize>,
    triangles: Vec<Triangle>,
    fans: Vec<Fan>,
}

impl Figure {
    /// Builds a figure from labels and labelled triangles. Only label-level
    /// problems are rejected here; structural checks live in
    /// [`validate_structure`].
    pub fn new<S, T>(name: impl Into<String>, vertices: &[S], triangles: &[[T; 3]]) -> Result<Self, FigureError>
    where
        S: AsRef<str>,
        T: AsRef<str>,
    {
        let mut labels = Vec::with_capacity(vertices.len());
        let mut index = HashMap::with_capacity(vertices.len());
        for v in vertices {
            let id = VertexId::new(v.as_ref())?;
            if index.insert(id.0.clone(), labels.len()).is_some() {
                return Err(FigureError::DuplicateLabel(id.0));
            }
            labels.push(id);
        }
        let mut tris = Vec::with_capacity(triangles.len());
        for (t, corners) in triangles.iter().enumerate() {
            let mut idx = [0usize; 3];
            for (slot, label) in corners.iter().enumerate() {
                idx[slot] = *index
                    .get(label.as_ref())
                    .ok_or_else(|| FigureError::UnknownVertex { triangle: t, label: label.as_ref().to_string() })?;
            }
            if idx[0] == idx[1] || idx[1] == idx[2] || idx[0] == idx[2] {
                return Err(FigureError::RepeatedCorner(t));
            }
            tris.push(Triangle { index: t, corners: idx });
        }
        let fans = (0..labels.len()).map(|v| fan::build_fan(v, &tris)).collect();
        Ok(Self { name: name.into(), labels, index, triangles: tris, fans })
    }

    /// Like [`Figure::new`] but also requires a structurally valid figure.
    pub fn new_valid<S, T>(name: impl Into<String>, vertices: &[S], triangles: &[[T; 3]]) -> Result<Self, FigureError>
    where
        S: AsRef<str>,
        T: AsRef<str>,
    {
        let fig = Self::new(name, vertices, triangles)?;
        let report = validate_structure(&fig);
        if report.is_valid() {
            Ok(fig)
        } else {
            Err(FigureError::Structure(report))
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[VertexId] {
        &self.labels
    }

    pub fn label(&self, v: usize) -> &VertexId {
        &self.labels[v]
    }

    pub fn vertex(&self, label: &str) -> Option<usize> {
        self.index.get(label).copied()
    }

    pub fn triangles(&self) -> &[Triangle] {
        &self.triangles
    }

    pub fn triangle(&self, t: usize) -> &Triangle {
        &self.triangles[t]
    }

    pub fn fan(&self, v: usize) -> &Fan {
        &self.fans[v]
    }

    pub fn is_interior(&self, v: usize) -> bool {
        self.fans[v].shape == FanShape::Cycle
    }

    pub fn interior_vertices(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.vertex_count()).filter(|&v| self.is_interior(v))
    }

    /// Undirected edge -> incident triangles, keyed by `(min, max)`.
    pub fn edge_map(&self) -> BTreeMap<(usize, usize), Vec<usize>> {
        let mut map: BTreeMap<(usize, usize), Vec<usize>> = BTreeMap::new();
        for t in &self.triangles {
            for (a, b) in t.edges() {
                map.entry((a.min(b), a.max(b))).or_default().push(t.index);
            }
        }
        map
    }

    /// Edges borne by exactly one triangle, directed as in that triangle.
    pub fn boundary_edges(&self) -> Vec<(usize, usize)> {
        let map = self.edge_map();
        let mut out = Vec::new();
        for t in &self.triangles {
            for (a, b) in t.edges() {
                if map[&(a.min(b), a.max(b))].len() == 1 {
                    out.push((a, b));
                }
            }
        }
        out
    }
}

/// Interior/exterior label for every vertex, by fan closure.
pub fn classify_vertices(figure: &Figure) -> Vec<VertexClass> {
    (0..figure.vertex_count())
        .map(|v| if figure.is_interior(v) { VertexClass::Interior } else { VertexClass::Exterior })
        .collect()
}
