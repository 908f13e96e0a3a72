use std::fmt::Write;

use super::scenario::Scenario;
use crate::exactnum::GeneratorTable;
use crate::geometry::{Cell, Geometry, Isometry, Polytope};

const PANEL: f64 = 300.0;
const MARGIN: f64 = 20.0;

/// Golden-angle hues, so piece `i` keeps its colour across panels and runs.
pub fn piece_colour(i: usize) -> String {
    let hue = (i as f64 * 137.507_764) % 360.0;
    format!("hsl({hue:.1},65%,55%)")
}

struct Frame {
    x0: f64,
    y0: f64,
    scale: f64,
}

impl Frame {
    fn new(bounds: (f64, f64, f64, f64)) -> Self {
        let (x0, y0, x1, y1) = bounds;
        let span = (x1 - x0).max(y1 - y0).max(1e-9);
        Self { x0, y0, scale: (PANEL - 2.0 * MARGIN) / span }
    }

    fn map(&self, panel: usize, (x, y): (f64, f64)) -> (f64, f64) {
        let ox = panel as f64 * PANEL + MARGIN;
        (ox + (x - self.x0) * self.scale, PANEL - MARGIN - (y - self.y0) * self.scale)
    }
}

fn cell_bounds(c: &Cell, table: &GeneratorTable) -> (f64, f64, f64, f64) {
    match c {
        Cell::Interval(i) => (table.approx(i.lo()), 0.0, table.approx(i.hi()), 0.0),
        Cell::Convex(c) => c.vertices().iter().map(|v| v.to_f64()).fold(
            (f64::INFINITY, f64::INFINITY, f64::NEG_INFINITY, f64::NEG_INFINITY),
            |(a, b, c, d), (x, y)| (a.min(x), b.min(y), c.max(x), d.max(y)),
        ),
    }
}

fn draw(out: &mut String, frame: &Frame, panel: usize, p: &Polytope, fill: &str, table: &GeneratorTable, lane: f64) {
    for c in p.cells() {
        match c {
            Cell::Interval(i) => {
                let (x0, y) = frame.map(panel, (table.approx(i.lo()), 0.0));
                let (x1, _) = frame.map(panel, (table.approx(i.hi()), 0.0));
                let y = y - PANEL / 2.0 + lane;
                let _ = writeln!(
                    out,
                    r#"    <rect x="{x0:.3}" y="{y:.3}" width="{:.3}" height="14" fill="{fill}" stroke="black" stroke-width="0.5"/>"#,
                    x1 - x0
                );
            }
            Cell::Convex(c) => {
                let pts: Vec<String> = c
                    .vertices()
                    .iter()
                    .map(|v| {
                        let (x, y) = frame.map(panel, v.to_f64());
                        format!("{x:.3},{y:.3}")
                    })
                    .collect();
                let _ = writeln!(
                    out,
                    r#"    <polygon points="{}" fill="{fill}" stroke="black" stroke-width="0.5"/>"#,
                    pts.join(" ")
                );
            }
        }
    }
}

/// Three panels: the target, the base placement and the move placement.
/// Coordinates are rounded for display only.
pub fn render_svg(s: &Scenario) -> String {
    let placed = |gs: &[Isometry]| -> Vec<Polytope> {
        gs.iter().zip(&s.pieces).filter_map(|(g, (_, p))| p.apply(g).ok()).collect()
    };
    let base = placed(&s.base);
    let moved = placed(&s.moves);
    let bounds = std::iter::once(&s.target)
        .chain(&base)
        .chain(&moved)
        .flat_map(|p| p.cells())
        .map(|c| cell_bounds(c, &s.table))
        .fold((f64::INFINITY, f64::INFINITY, f64::NEG_INFINITY, f64::NEG_INFINITY), |(a, b, c, d), (x0, y0, x1, y1)| {
            (a.min(x0), b.min(y0), c.max(x1), d.max(y1))
        });
    let frame = Frame::new(bounds);
    let line = s.target.geometry() == Geometry::E1;

    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{:.0}" height="{:.0}" viewBox="0 0 {:.0} {:.0}">"#,
        3.0 * PANEL,
        PANEL + 20.0,
        3.0 * PANEL,
        PANEL + 20.0
    );
    let _ = writeln!(out, "  <title>{}</title>", escape(&s.name));
    for (k, label) in ["target", "base", "move"].iter().enumerate() {
        let _ = writeln!(
            out,
            r#"  <text x="{:.1}" y="{:.1}" font-family="sans-serif" font-size="12">{label}</text>"#,
            k as f64 * PANEL + MARGIN,
            PANEL + 12.0
        );
    }
    let _ = writeln!(out, r#"  <g class="target">"#);
    draw(&mut out, &frame, 0, &s.target, "#d0d0d0", &s.table, 0.0);
    let _ = writeln!(out, "  </g>");
    for (panel, side) in [(1, &base), (2, &moved)] {
        for (i, p) in side.iter().enumerate() {
            let name = escape(&s.pieces[i].0);
            let _ = writeln!(out, r#"  <g class="piece" data-panel="{panel}" data-piece="{i}" data-name="{name}">"#);
            let lane = if line { 18.0 * i as f64 - 9.0 * side.len() as f64 } else { 0.0 };
            draw(&mut out, &frame, panel, p, &piece_colour(i), &s.table, lane);
            let _ = writeln!(out, "  </g>");
        }
    }
    out.push_str("</svg>\n");
    out
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;").replace('"', "&quot;")
}

/// Pieces drawn in the move panel.
pub fn count_pieces(svg: &str) -> usize {
    svg.matches(r#"class="piece" data-panel="2""#).count()
}
