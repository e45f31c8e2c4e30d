//! Deterministic SVG rendering of a labeled diagram with optional overlays.

use std::fmt::Write;

use bottleneck_voronoi::{ConvexPolygon, LabeledDiagram, Matching, Point};

#[derive(Default)]
pub struct Overlays<'a> {
    pub path: Option<&'a [Point]>,
    pub polygon: Option<&'a ConvexPolygon>,
    pub marker: Option<&'a Point>,
}

/// 64-bit FNV-1a.
fn fnv1a(bytes: impl IntoIterator<Item = u8>) -> u64 {
    bytes.into_iter().fold(0xcbf2_9ce4_8422_2325, |h, b| (h ^ b as u64).wrapping_mul(0x0100_0000_01b3))
}

/// Fill color determined only by the label's matched pairs.
pub fn label_color(m: &Matching) -> String {
    let bytes = m.edges().iter().flat_map(|e| [e.a as u64, e.b as u64]).flat_map(u64::to_le_bytes);
    let h = fnv1a(bytes);
    let hue = h % 360;
    let sat = 45 + (h >> 16) % 30;
    let light = 70 + (h >> 32) % 15;
    format!("hsl({hue},{sat}%,{light}%)")
}

fn xy(p: &Point) -> String {
    let (x, y) = p.to_f64();
    format!("{},{}", num(x), num(-y))
}

fn num(v: f64) -> String {
    let s = format!("{v:.6}");
    let s = s.trim_end_matches('0').trim_end_matches('.');
    if s == "-0" {
        "0".to_string()
    } else {
        s.to_string()
    }
}

fn points_attr(pts: &[Point]) -> String {
    pts.iter().map(xy).collect::<Vec<_>>().join(" ")
}

/// Cells filled by label, arrangement edges stroked, then overlays. The y axis points up.
pub fn render_svg(ld: &LabeledDiagram, overlays: &Overlays) -> String {
    let arr = ld.arrangement();
    let (lo, hi) = arr.bounds();
    let (x0, y0) = lo.to_f64();
    let (x1, y1) = hi.to_f64();
    let (w, h) = (x1 - x0, y1 - y0);
    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" viewBox="{} {} {} {}" width="800" height="{}">"#,
        num(x0),
        num(-y1),
        num(w),
        num(h),
        num((800.0 * h / w).round())
    );
    let _ = writeln!(out, r#"<g id="cells" stroke="none">"#);
    for (c, label) in ld.cells().iter().enumerate() {
        let poly = arr.cell_polygon(c);
        let _ = writeln!(
            out,
            r#"<polygon data-cell="{c}" fill="{}" points="{}"/>"#,
            label_color(&label.matching),
            points_attr(poly.vertices())
        );
    }
    let _ = writeln!(out, "</g>");
    let _ = writeln!(out, r##"<g id="edges" stroke="#333" stroke-width="1" vector-effect="non-scaling-stroke">"##);
    for e in arr.edges().iter().filter(|e| e.line.is_some()) {
        let (a, b) = (&arr.vertices()[e.from], &arr.vertices()[e.to]);
        let (ax, ay) = a.to_f64();
        let (bx, by) = b.to_f64();
        let _ = writeln!(
            out,
            r#"<line x1="{}" y1="{}" x2="{}" y2="{}" vector-effect="non-scaling-stroke"/>"#,
            num(ax),
            num(-ay),
            num(bx),
            num(-by)
        );
    }
    let _ = writeln!(out, "</g>");
    if let Some(q) = overlays.polygon {
        let _ = writeln!(
            out,
            r##"<polygon id="region" fill="none" stroke="#06c" stroke-width="2" vector-effect="non-scaling-stroke" points="{}"/>"##,
            points_attr(q.vertices())
        );
    }
    if let Some(path) = overlays.path {
        let _ = writeln!(
            out,
            r##"<polyline id="path" fill="none" stroke="#c00" stroke-width="2" vector-effect="non-scaling-stroke" points="{}"/>"##,
            points_attr(path)
        );
    }
    if let Some(p) = overlays.marker {
        let (x, y) = p.to_f64();
        let r = w.max(h) / 150.0;
        let _ = writeln!(
            out,
            r##"<circle id="optimum" cx="{}" cy="{}" r="{}" fill="#c00"/>"##,
            num(x),
            num(-y),
            num(r)
        );
    }
    out.push_str("</svg>\n");
    out
}
