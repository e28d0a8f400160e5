use std::fmt::Write;

use convexham::{Drawing, Edge, Error, Result};

const SIZE: f64 = 800.0;
const MARGIN: f64 = 24.0;

/// Straight-line SVG of a geometric drawing. Edges in `highlight` get the
/// stroke class `highlight`, all others `edge`.
pub fn svg(d: &Drawing, highlight: &[Edge]) -> Result<String> {
    let pts = d.points().ok_or(Error::NoCoordinates)?.points();
    let (min_x, max_x) = (
        pts.iter().map(|p| p.x).min().unwrap(),
        pts.iter().map(|p| p.x).max().unwrap(),
    );
    let (min_y, max_y) = (
        pts.iter().map(|p| p.y).min().unwrap(),
        pts.iter().map(|p| p.y).max().unwrap(),
    );
    let span = ((max_x - min_x).max(max_y - min_y)).max(1) as f64;
    let scale = (SIZE - 2.0 * MARGIN) / span;
    let xy = |v: usize| {
        let p = pts[v - 1];
        (
            MARGIN + (p.x - min_x) as f64 * scale,
            SIZE - MARGIN - (p.y - min_y) as f64 * scale,
        )
    };
    let mut out = String::new();
    writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{SIZE}" height="{SIZE}" viewBox="0 0 {SIZE} {SIZE}">"#
    )
    .unwrap();
    out.push_str(
        "<style>.edge{stroke:#9a9a9a;stroke-width:1}.highlight{stroke:#c0392b;stroke-width:3}\
         .vertex{fill:#222}.label{font:12px sans-serif;fill:#222}</style>\n",
    );
    let edges: Vec<Edge> = d.edges().collect();
    for pass in [false, true] {
        for &e in &edges {
            if highlight.contains(&e) != pass {
                continue;
            }
            let class = if pass { "highlight" } else { "edge" };
            let (x1, y1) = xy(e.u());
            let (x2, y2) = xy(e.v());
            writeln!(
                out,
                r#"<line class="{class}" x1="{x1:.2}" y1="{y1:.2}" x2="{x2:.2}" y2="{y2:.2}"/>"#
            )
            .unwrap();
        }
    }
    for v in 1..=d.n() {
        let (x, y) = xy(v);
        writeln!(out, r#"<circle class="vertex" cx="{x:.2}" cy="{y:.2}" r="4"/>"#).unwrap();
        writeln!(
            out,
            r#"<text class="label" x="{:.2}" y="{:.2}">{v}</text>"#,
            x + 6.0,
            y - 6.0
        )
        .unwrap();
    }
    out.push_str("</svg>\n");
    Ok(out)
}
