use super::{perimeter, Realization};
use crate::angles::AngleAssignment;
use crate::figure::Figure;
use crate::geom::{fmt9, Point2};
use std::fmt::Write;

const SIZE: f64 = 480.0;
const MARGIN: f64 = 40.0;

/// Renders the perimeter, interior edges and labels. With `angles`, each
/// corner is annotated with its assigned size. Output depends only on the
/// inputs.
pub fn to_svg(real: &Realization, figure: &Figure, angles: Option<&AngleAssignment>) -> String {
    let (mut lo, mut hi) = (Point2::new(f64::MAX, f64::MAX), Point2::new(f64::MIN, f64::MIN));
    for p in &real.coords {
        lo = Point2::new(lo.x.min(p.x), lo.y.min(p.y));
        hi = Point2::new(hi.x.max(p.x), hi.y.max(p.y));
    }
    let span = (hi.x - lo.x).max(hi.y - lo.y).max(f64::MIN_POSITIVE);
    let scale = (SIZE - 2.0 * MARGIN) / span;
    // y grows downward in SVG
    let map = |p: Point2| Point2::new(MARGIN + (p.x - lo.x) * scale, SIZE - MARGIN - (p.y - lo.y) * scale);
    let pt = |p: Point2| format!("{},{}", fmt9(p.x), fmt9(p.y));

    let mut s = String::new();
    writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{SIZE}" height="{SIZE}" viewBox="0 0 {SIZE} {SIZE}">"#
    )
    .unwrap();
    writeln!(s, "<title>{}</title>", escape(figure.name())).unwrap();

    let boundary: std::collections::HashSet<(usize, usize)> =
        figure.boundary_edges().into_iter().map(|(a, b)| (a.min(b), a.max(b))).collect();
    s.push_str("<g stroke=\"#888\" stroke-width=\"1\">\n");
    for &(a, b) in figure.edge_map().keys() {
        if boundary.contains(&(a, b)) {
            continue;
        }
        let (p, q) = (map(real.coords[a]), map(real.coords[b]));
        writeln!(s, r#"<line x1="{}" y1="{}" x2="{}" y2="{}"/>"#, fmt9(p.x), fmt9(p.y), fmt9(q.x), fmt9(q.y)).unwrap();
    }
    s.push_str("</g>\n");

    if let Ok(cycle) = perimeter(figure) {
        let pts: Vec<String> = cycle.iter().map(|&v| pt(map(real.coords[v]))).collect();
        writeln!(s, r#"<polygon points="{}" fill="none" stroke="black" stroke-width="2"/>"#, pts.join(" ")).unwrap();
    }

    if let Some(angles) = angles {
        s.push_str("<g font-size=\"9\" fill=\"#06c\" text-anchor=\"middle\">\n");
        for t in figure.triangles() {
            let centroid = t.corners.iter().fold(Point2::ORIGIN, |acc, &v| acc + real.coords[v]) * (1.0 / 3.0);
            for (k, &v) in t.corners.iter().enumerate() {
                let p = real.coords[v];
                let at = map(p + (centroid - p) * 0.3);
                writeln!(s, r#"<text x="{}" y="{}">{}</text>"#, fmt9(at.x), fmt9(at.y), fmt9(angles.get(t.index, k)))
                    .unwrap();
            }
        }
        s.push_str("</g>\n");
    }

    s.push_str("<g font-size=\"14\" font-family=\"sans-serif\">\n");
    for (label, &p) in real.labels.iter().zip(&real.coords) {
        let q = map(p);
        writeln!(s, r#"<circle cx="{}" cy="{}" r="2.5"/>"#, fmt9(q.x), fmt9(q.y)).unwrap();
        writeln!(s, r#"<text x="{}" y="{}">{}</text>"#, fmt9(q.x + 4.0), fmt9(q.y - 4.0), escape(label.as_str()))
            .unwrap();
    }
    s.push_str("</g>\n</svg>\n");
    s
}

fn escape(text: &str) -> String {
    text.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;").replace('"', "&quot;")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::realizer::realize;

    #[test]
    fn deterministic_and_complete() {
        let f = Figure::new_valid("inc<>", &["A", "B", "C", "I"], &[["A", "B", "I"], ["B", "C", "I"], ["C", "A", "I"]])
            .unwrap();
        let m = AngleAssignment::new(&f, vec![[30.0, 30.0, 120.0]; 3]).unwrap();
        let r = realize(&f, &m, 1e-9).unwrap();
        let a = to_svg(&r, &f, Some(&m));
        assert_eq!(a, to_svg(&r, &f, Some(&m)));
        assert_eq!(a.matches("<line").count(), 3);
        assert_eq!(a.matches("<polygon").count(), 1);
        assert_eq!(a.matches(">120<").count(), 3);
        assert!(a.contains("inc&lt;&gt;"));
        assert!(!to_svg(&r, &f, None).contains(">30<"));
    }
}
