//! Dot plots of bigraded groups as SVG.

use std::fmt::Write;
use std::path::Path;

use knotforge::kh::KhGroup;
use knotforge::{BigradedGroup, Error, Result};

/// Something drawable as ranked dots on a lattice.
pub trait DotPlot {
    /// Horizontal and vertical axis names.
    fn axes(&self) -> (&'static str, &'static str);
    /// ((x, y), rank) with positive ranks.
    fn dots(&self) -> Vec<((i64, i64), usize)>;
}

/// Alexander across, Maslov up.
impl DotPlot for BigradedGroup {
    fn axes(&self) -> (&'static str, &'static str) {
        ("a", "m")
    }

    fn dots(&self) -> Vec<((i64, i64), usize)> {
        self.iter().map(|((m, a), r)| ((a, m), r)).collect()
    }
}

/// q across, delta up.
impl DotPlot for KhGroup {
    fn axes(&self) -> (&'static str, &'static str) {
        ("q", "δ")
    }

    fn dots(&self) -> Vec<((i64, i64), usize)> {
        self.iter().map(|((d, q), r)| ((q, d), r)).collect()
    }
}

const CELL: i64 = 40;
const MARGIN: i64 = 50;

fn span(v: impl Iterator<Item = i64> + Clone) -> (i64, i64) {
    match (v.clone().min(), v.max()) {
        (Some(lo), Some(hi)) => (lo - 1, hi + 1),
        _ => (-1, 1),
    }
}

/// The SVG text; identical input gives identical bytes.
pub fn render_svg<G: DotPlot + ?Sized>(g: &G) -> String {
    let dots = {
        let mut d = g.dots();
        d.sort();
        d
    };
    let (xname, yname) = g.axes();
    let (x0, x1) = span(dots.iter().map(|((x, _), _)| *x));
    let (y0, y1) = span(dots.iter().map(|((_, y), _)| *y));
    let w = (x1 - x0) * CELL + 2 * MARGIN;
    let h = (y1 - y0) * CELL + 2 * MARGIN;
    let px = |x: i64| MARGIN + (x - x0) * CELL;
    let py = |y: i64| MARGIN + (y1 - y) * CELL;
    let mut s = String::new();
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{w}" height="{h}" viewBox="0 0 {w} {h}" font-family="sans-serif" font-size="12">"#
    );
    let _ = writeln!(s, r#"<rect x="0" y="0" width="{w}" height="{h}" fill="white"/>"#);
    for x in x0..=x1 {
        let _ = writeln!(s, r##"<line x1="{0}" y1="{1}" x2="{0}" y2="{2}" stroke="#ddd"/>"##, px(x), py(y1), py(y0));
        let _ = writeln!(s, r#"<text x="{}" y="{}" text-anchor="middle">{x}</text>"#, px(x), py(y0) + 18);
    }
    for y in y0..=y1 {
        let _ = writeln!(s, r##"<line x1="{1}" y1="{0}" x2="{2}" y2="{0}" stroke="#ddd"/>"##, py(y), px(x0), px(x1));
        let _ = writeln!(s, r#"<text x="{}" y="{}" text-anchor="end">{y}</text>"#, px(x0) - 8, py(y) + 4);
    }
    let _ = writeln!(s, r#"<text x="{}" y="{}" text-anchor="middle">{xname}</text>"#, w / 2, h - 8);
    let _ = writeln!(s, r#"<text x="12" y="{}" text-anchor="middle">{yname}</text>"#, h / 2);
    for ((x, y), r) in &dots {
        let _ = writeln!(s, r#"<circle cx="{}" cy="{}" r="5" fill="black"/>"#, px(*x), py(*y));
        if *r > 1 {
            let _ = writeln!(s, r#"<text x="{}" y="{}">{r}</text>"#, px(*x) + 8, py(*y) - 8);
        }
    }
    s.push_str("</svg>\n");
    s
}

pub fn emit_plot<G: DotPlot + ?Sized>(g: &G, path: &Path) -> Result<()> {
    std::fs::write(path, render_svg(g)).map_err(|e| Error::Io(format!("{}: {e}", path.display())))
}
