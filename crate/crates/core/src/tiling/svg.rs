use std::fmt::Write;

use super::subdivision::{face_is_zonotopal, PlaneSubdivision};

const SIZE: f64 = 480.0;
const MARGIN: f64 = 16.0;

/// Renders a subdivision as SVG: zonotopal faces in one color, any other
/// bounded face in a warning color, then edges and vertices.
pub fn emit_svg(s: &PlaneSubdivision) -> String {
    let pts: Vec<(f64, f64)> = s.points.iter().map(|p| p.to_f64()).collect();
    let (mut x0, mut y0, mut x1, mut y1) = (f64::MAX, f64::MAX, f64::MIN, f64::MIN);
    for &(x, y) in &pts {
        x0 = x0.min(x);
        y0 = y0.min(y);
        x1 = x1.max(x);
        y1 = y1.max(y);
    }
    let span = (x1 - x0).max(y1 - y0).max(1e-9);
    let k = (SIZE - 2.0 * MARGIN) / span;
    // flip y so that the drawing is not mirrored
    let map = |(x, y): (f64, f64)| (MARGIN + (x - x0) * k, SIZE - MARGIN - (y - y0) * k);

    let mut out = String::new();
    writeln!(out, r#"<?xml version="1.0" encoding="UTF-8"?>"#).unwrap();
    writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{SIZE}" height="{SIZE}" viewBox="0 0 {SIZE} {SIZE}">"#
    )
    .unwrap();
    for f in &s.faces {
        let fill = if face_is_zonotopal(&s.points, f) { "#cfe3f6" } else { "#f6c9c0" };
        let coords: Vec<String> = f
            .iter()
            .map(|&v| {
                let (x, y) = map(pts[v]);
                format!("{x:.3},{y:.3}")
            })
            .collect();
        writeln!(out, r#"<polygon points="{}" fill="{fill}" stroke="none"/>"#, coords.join(" ")).unwrap();
    }
    for &(u, v) in &s.edges {
        let (ax, ay) = map(pts[u]);
        let (bx, by) = map(pts[v]);
        writeln!(out, r##"<line x1="{ax:.3}" y1="{ay:.3}" x2="{bx:.3}" y2="{by:.3}" stroke="#203040" stroke-width="1.5"/>"##)
            .unwrap();
    }
    for &p in &pts {
        let (x, y) = map(p);
        writeln!(out, r##"<circle cx="{x:.3}" cy="{y:.3}" r="2.5" fill="#203040"/>"##).unwrap();
    }
    out.push_str("</svg>\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::HomCoord;
    use crate::tiling::ZonotopalTiling;

    fn tiling(lines: &[(i64, i64, i64)]) -> ZonotopalTiling {
        let ls: Vec<HomCoord> = lines.iter().map(|&(a, b, c)| HomCoord::from_i64(a, b, c).unwrap()).collect();
        ZonotopalTiling::from_affine_arrangement(&ls).unwrap()
    }

    #[test]
    fn counts_elements() {
        let svg = emit_svg(&tiling(&[(1, 0, 0), (0, 1, 0), (1, 1, -1)]).subdivision);
        assert_eq!(svg.matches("<polygon").count(), 3);
        assert_eq!(svg.matches("<line").count(), 9);
        assert_eq!(svg.matches("<circle").count(), 7);
        assert!(svg.ends_with("</svg>\n"));
    }

    #[test]
    fn parallelogram_and_single_edge() {
        let svg = emit_svg(&tiling(&[(1, 0, 0), (0, 1, 0)]).subdivision);
        assert_eq!(svg.matches("<polygon").count(), 1);
        let svg = emit_svg(&tiling(&[(1, 0, 0)]).subdivision);
        assert_eq!(svg.matches("<polygon").count(), 0);
        assert_eq!(svg.matches("<line").count(), 1);
        assert_eq!(svg.matches("<circle").count(), 2);
    }

    #[test]
    fn deterministic() {
        let t = tiling(&[(1, 0, 0), (0, 1, 0), (1, 1, -1), (1, -1, 2)]);
        assert_eq!(emit_svg(&t.subdivision), emit_svg(&t.subdivision));
    }
}
