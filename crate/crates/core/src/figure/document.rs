use super::{validate_structure, Figure, FigureError};
use crate::angles::{AngleAssignment, AngleError};
use serde::{Deserialize, Serialize};

/// On-disk form of a figure, optionally carrying an angle assignment.
///
/// ```json
/// { "name": "incenter",
///   "vertices": ["A", "B", "C", "I"],
///   "triangles": [["A", "B", "I"], ["B", "C", "I"], ["C", "A", "I"]],
///   "angles": [[30, 30, 120], [30, 30, 120], [30, 30, 120]] }
/// ```
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FigureDocument {
    pub name: String,
    pub vertices: Vec<String>,
    pub triangles: Vec<[String; 3]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub angles: Option<Vec<[f64; 3]>>,
}

impl FigureDocument {
    pub fn parse(text: &str) -> Result<Self, FigureError> {
        serde_json::from_str(text).map_err(|e| FigureError::Malformed(e.to_string()))
    }

    pub fn from_figure(figure: &Figure, angles: Option<&AngleAssignment>) -> Self {
        Self {
            name: figure.name().to_string(),
            vertices: figure.labels().iter().map(|l| l.to_string()).collect(),
            triangles: figure.triangles().iter().map(|t| t.corners.map(|c| figure.label(c).to_string())).collect(),
            angles: angles.map(|a| a.values().to_vec()),
        }
    }

    /// Canonical serialization.
    pub fn to_text(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("document serializes");
        s.push('\n');
        s
    }

    /// The figure, rejected unless structurally valid.
    pub fn figure(&self) -> Result<Figure, FigureError> {
        let fig = Figure::new(&self.name, &self.vertices, &self.triangles)?;
        let report = validate_structure(&fig);
        if report.is_valid() {
            Ok(fig)
        } else {
            Err(FigureError::Structure(report))
        }
    }

    /// The angle block, if present, checked against `figure`.
    pub fn assignment(&self, figure: &Figure) -> Option<Result<AngleAssignment, AngleError>> {
        self.angles.as_ref().map(|a| AngleAssignment::new(figure, a.clone()))
    }
}

/// Parses a figure document and validates its structure.
pub fn parse_figure(text: &str) -> Result<Figure, FigureError> {
    FigureDocument::parse(text)?.figure()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::figure::{classify_vertices, VertexClass, Violation};

    const INCENTER: &str = r#"{
        "name": "incenter",
        "vertices": ["A", "B", "C", "I"],
        "triangles": [["A", "B", "I"], ["B", "C", "I"], ["C", "A", "I"]],
        "angles": [[30, 30, 120], [30, 30, 120], [30, 30, 120]]
    }"#;

    #[test]
    fn parses_single_triangle() {
        let f = parse_figure(r#"{"name":"t","vertices":["A","B","C"],"triangles":[["A","B","C"]]}"#).unwrap();
        assert_eq!(f.triangles().len(), 1);
        assert_eq!(classify_vertices(&f), [VertexClass::Exterior; 3]);
    }

    #[test]
    fn parses_incenter_and_derives_fans() {
        let doc = FigureDocument::parse(INCENTER).unwrap();
        let f = doc.figure().unwrap();
        let i = f.vertex("I").unwrap();
        assert!(f.is_interior(i));
        assert_eq!(f.fan(i).entries.len(), 3);
        let a = doc.assignment(&f).unwrap().unwrap();
        assert_eq!(a.get(1, 2), 120.0);
    }

    #[test]
    fn rejects_disconnected() {
        let err = parse_figure(
            r#"{"name":"x","vertices":["A","B","C","D","E","F"],"triangles":[["A","B","C"],["D","E","F"]]}"#,
        )
        .unwrap_err();
        match err {
            FigureError::Structure(r) => assert!(r.violations.contains(&Violation::Disconnected { components: 2 })),
            e => panic!("unexpected {e}"),
        }
    }

    #[test]
    fn rejects_malformed_and_label_problems() {
        assert!(matches!(parse_figure("{"), Err(FigureError::Malformed(_))));
        assert!(matches!(
            parse_figure(r#"{"name":"x","vertices":["A","B","C"],"triangles":[["A","B"]]}"#),
            Err(FigureError::Malformed(_))
        ));
        assert!(matches!(
            parse_figure(r#"{"name":"x","vertices":["A","A","C"],"triangles":[["A","C","A"]]}"#),
            Err(FigureError::DuplicateLabel(_))
        ));
        assert!(matches!(
            parse_figure(r#"{"name":"x","vertices":["A","B","C"],"triangles":[["A","B","D"]]}"#),
            Err(FigureError::UnknownVertex { .. })
        ));
    }

    #[test]
    fn canonical_text_round_trips() {
        let doc = FigureDocument::parse(INCENTER).unwrap();
        let f = doc.figure().unwrap();
        let a = doc.assignment(&f).unwrap().unwrap();
        let again = FigureDocument::from_figure(&f, Some(&a));
        assert_eq!(again, doc);
        assert_eq!(FigureDocument::parse(&again.to_text()).unwrap(), doc);
    }
}
