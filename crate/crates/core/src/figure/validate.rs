use super::{FanShape, Figure};
use serde::Serialize;
use std::fmt;

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Violation {
    NoTriangles,
    IsolatedVertex {
        vertex: String,
    },
    /// An undirected edge carried by more than two triangles.
    EdgeMultiplicity {
        a: String,
        b: String,
        triangles: Vec<usize>,
    },
    /// Incident triangles at a vertex do not form one chain or cycle.
    BrokenFan {
        vertex: String,
    },
    /// Triangle adjacency graph (full shared edges) has several components.
    Disconnected {
        components: usize,
    },
    /// Two triangles traverse their shared edge in the same direction.
    InconsistentOrientation {
        a: String,
        b: String,
        triangles: (usize, usize),
    },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::NoTriangles => write!(f, "figure has no triangles"),
            Violation::IsolatedVertex { vertex } => {
                write!(f, "vertex {vertex} belongs to no triangle")
            }
            Violation::EdgeMultiplicity { a, b, triangles } => {
                write!(f, "edge multiplicity: {a}-{b} is shared by {} triangles {triangles:?}", triangles.len())
            }
            Violation::BrokenFan { vertex } => write!(f, "fan not single chain/cycle at {vertex}"),
            Violation::Disconnected { components } => {
                write!(f, "not edge-connected: {components} components")
            }
            Violation::InconsistentOrientation { a, b, triangles } => write!(
                f,
                "inconsistent orientation: triangles {} and {} both traverse {a}->{b}",
                triangles.0, triangles.1
            ),
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Serialize)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.violations.is_empty() {
            return write!(f, "structurally valid");
        }
        for (i, v) in self.violations.iter().enumerate() {
            if i > 0 {
                write!(f, "; ")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

/// Lists every combinatorial problem that keeps `figure` from being a
/// triangulated disk. Geometric properties (orientation sign, convexity,
/// overlap) are the realizer's business.
pub fn validate_structure(figure: &Figure) -> ValidationReport {
    let mut out = Vec::new();
    let tris = figure.triangles();
    if tris.is_empty() {
        out.push(Violation::NoTriangles);
        return ValidationReport { violations: out };
    }
    let label = |v: usize| figure.label(v).to_string();

    let edges = figure.edge_map();
    for (&(a, b), ts) in &edges {
        if ts.len() > 2 {
            out.push(Violation::EdgeMultiplicity { a: label(a), b: label(b), triangles: ts.clone() });
        } else if ts.len() == 2 {
            let dir = |t: usize| figure.triangle(t).edges().contains(&(a, b));
            if dir(ts[0]) == dir(ts[1]) {
                let (x, y) = if dir(ts[0]) { (a, b) } else { (b, a) };
                out.push(Violation::InconsistentOrientation { a: label(x), b: label(y), triangles: (ts[0], ts[1]) });
            }
        }
    }

    for v in 0..figure.vertex_count() {
        let fan = figure.fan(v);
        if fan.entries.is_empty() {
            out.push(Violation::IsolatedVertex { vertex: label(v) });
        } else if fan.shape == FanShape::Broken {
            out.push(Violation::BrokenFan { vertex: label(v) });
        }
    }

    // union-find over triangles joined by full shared edges
    let mut parent: Vec<usize> = (0..tris.len()).collect();
    fn find(p: &mut [usize], mut x: usize) -> usize {
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    for ts in edges.values() {
        for w in ts.windows(2) {
            let (ra, rb) = (find(&mut parent, w[0]), find(&mut parent, w[1]));
            parent[ra] = rb;
        }
    }
    let components = (0..tris.len()).filter(|&t| find(&mut parent, t) == t).count();
    if components > 1 {
        out.push(Violation::Disconnected { components });
    }

    ValidationReport { violations: out }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn incenter_is_valid() {
        let f = Figure::new("f", &["A", "B", "C", "I"], &[["A", "B", "I"], ["B", "C", "I"], ["C", "A", "I"]]).unwrap();
        assert!(validate_structure(&f).is_valid());
    }

    #[test]
    fn bowtie_reports_broken_fan() {
        let f = Figure::new("bowtie", &["A", "B", "C", "D", "E"], &[["A", "B", "C"], ["C", "D", "E"]]).unwrap();
        let r = validate_structure(&f);
        assert!(r.violations.contains(&Violation::BrokenFan { vertex: "C".into() }));
        assert!(r.violations.contains(&Violation::Disconnected { components: 2 }));
        assert!(r.to_string().contains("fan not single chain/cycle at C"));
    }

    #[test]
    fn triple_edge_reports_multiplicity() {
        let f = Figure::new("book", &["A", "B", "X", "Y", "Z"], &[["A", "B", "X"], ["B", "A", "Y"], ["A", "B", "Z"]])
            .unwrap();
        let r = validate_structure(&f);
        assert!(r
            .violations
            .iter()
            .any(|v| matches!(v, Violation::EdgeMultiplicity { triangles, .. } if triangles.len() == 3)));
        assert!(r.to_string().contains("edge multiplicity"));
    }

    #[test]
    fn flipped_triangle_reports_orientation() {
        let f = Figure::new("flip", &["A", "B", "C", "D"], &[["A", "B", "C"], ["A", "B", "D"]]).unwrap();
        let r = validate_structure(&f);
        assert_eq!(r.violations.len(), 1, "{r}");
        assert!(matches!(r.violations[0], Violation::InconsistentOrientation { .. }));
    }

    #[test]
    fn disconnected_pair() {
        let f = Figure::new("two", &["A", "B", "C", "D", "E", "F"], &[["A", "B", "C"], ["D", "E", "F"]]).unwrap();
        assert_eq!(validate_structure(&f).violations, [Violation::Disconnected { components: 2 }]);
    }

    #[test]
    fn isolated_vertex() {
        let f = Figure::new("iso", &["A", "B", "C", "Q"], &[["A", "B", "C"]]).unwrap();
        assert_eq!(validate_structure(&f).violations, [Violation::IsolatedVertex { vertex: "Q".into() }]);
    }
}
