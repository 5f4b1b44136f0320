//! SVG emission: a representation drawn as concentric arcs at staggered
//! radii with endpoint dots. Purely presentational.

use std::collections::BTreeMap;
use std::fmt::Write;

use crate::graph::Vertex;
use crate::model::{Representation, Side};

const SIZE: f64 = 520.0;
const CENTER: f64 = SIZE / 2.0;
const OUTER: f64 = 210.0;
const INNER: f64 = 60.0;

fn point(radius: f64, angle: f64) -> (f64, f64) {
    (CENTER + radius * angle.cos(), CENTER + radius * angle.sin())
}

/// Render `rep` as an SVG 1.1 document. Arcs are labeled with their
/// vertex ids and drawn clockwise from l to r.
pub fn render_svg(rep: &Representation) -> String {
    let events = rep.model.events();
    let n = rep.model.arc_count();
    let mut svg = String::new();
    let _ = writeln!(
        svg,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" \
         width=\"{SIZE}\" height=\"{SIZE}\" viewBox=\"0 0 {SIZE} {SIZE}\">"
    );
    let _ = writeln!(
        svg,
        "  <circle cx=\"{CENTER}\" cy=\"{CENTER}\" r=\"{OUTER}\" \
         fill=\"none\" stroke=\"#ddd\" stroke-dasharray=\"4 4\"/>"
    );

    let angle_of = |arc: u32, side: Side| {
        let pos = events
            .iter()
            .position(|e| e.arc == arc && e.side == side)
            .unwrap();
        pos as f64 / events.len() as f64 * std::f64::consts::TAU
    };
    let arc_of: BTreeMap<u32, Vertex> = rep.assign.iter().map(|(&v, &a)| (a, v)).collect();
    let step = if n > 1 {
        (OUTER - INNER) / (n - 1) as f64
    } else {
        0.0
    };

    for (k, (&arc, &v)) in arc_of.iter().enumerate() {
        let r = OUTER - step * k as f64;
        let a0 = angle_of(arc, Side::L);
        let a1 = angle_of(arc, Side::R);
        let span = (a1 - a0).rem_euclid(std::f64::consts::TAU);
        let large = u8::from(span > std::f64::consts::PI);
        let (x0, y0) = point(r, a0);
        let (x1, y1) = point(r, a1);
        let _ = writeln!(
            svg,
            "  <path d=\"M {x0:.2} {y0:.2} A {r:.2} {r:.2} 0 {large} 1 {x1:.2} {y1:.2}\" \
             fill=\"none\" stroke=\"#336\" stroke-width=\"2\"/>"
        );
        for (x, y) in [(x0, y0), (x1, y1)] {
            let _ = writeln!(
                svg,
                "  <circle cx=\"{x:.2}\" cy=\"{y:.2}\" r=\"3\" fill=\"#336\"/>"
            );
        }
        let (tx, ty) = point(r + 9.0, a0);
        let _ = writeln!(
            svg,
            "  <text x=\"{tx:.2}\" y=\"{ty:.2}\" font-size=\"11\" \
             text-anchor=\"middle\">{v}</text>"
        );
    }
    svg.push_str("</svg>\n");
    svg
}
