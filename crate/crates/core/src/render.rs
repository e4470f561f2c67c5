//! Text and SVG drawings of mosaics.

use std::fmt::Write as _;

use crate::mosaic::Mosaic;
use crate::tiles::{OverAxis, Side, TileId};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RenderFormat {
    Ascii,
    Svg,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct RenderOptions {
    pub format: RenderFormat,
    pub tile_size: f64,
    /// Half-width of the break in an under-strand.
    pub gap: f64,
    /// Box-drawing glyphs instead of plain ASCII.
    pub unicode: bool,
}

impl Default for RenderOptions {
    fn default() -> Self {
        RenderOptions { format: RenderFormat::Ascii, tile_size: 100.0, gap: 12.0, unicode: true }
    }
}

impl RenderOptions {
    pub fn is_valid(&self) -> bool {
        self.tile_size > 0.0 && self.gap >= 0.0 && self.tile_size > 2.0 * self.gap
    }
}

const UNICODE: [char; 11] = [' ', '┐', '┌', '└', '┘', '─', '│', '%', '&', '┿', '╂'];
const PLAIN: [char; 11] = [' ', '7', 'r', 'L', 'J', '-', '|', '%', '&', '+', '#'];

pub fn glyph(t: TileId, unicode: bool) -> char {
    let table = if unicode { &UNICODE } else { &PLAIN };
    table[t.value() as usize]
}

/// One glyph per tile, rows separated by `\n`, no trailing newline.
pub fn render_ascii(m: &Mosaic, opts: &RenderOptions) -> String {
    m.rows().map(|row| row.iter().map(|&t| glyph(t, opts.unicode)).collect::<String>()).collect::<Vec<_>>().join("\n")
}

fn num(x: f64) -> String {
    let r = (x * 1000.0).round() / 1000.0;
    if r == r.trunc() {
        format!("{}", r as i64)
    } else {
        let s = format!("{r:.3}");
        s.trim_end_matches('0').to_string()
    }
}

fn midpoint(x0: f64, y0: f64, s: f64, side: Side) -> (f64, f64) {
    let h = s / 2.0;
    match side {
        Side::Top => (x0 + h, y0),
        Side::Right => (x0 + s, y0 + h),
        Side::Bottom => (x0 + h, y0 + s),
        Side::Left => (x0, y0 + h),
    }
}

fn corner(x0: f64, y0: f64, s: f64, a: Side, b: Side) -> (f64, f64) {
    let right = a == Side::Right || b == Side::Right;
    let bottom = a == Side::Bottom || b == Side::Bottom;
    (if right { x0 + s } else { x0 }, if bottom { y0 + s } else { y0 })
}

fn line(out: &mut String, (x1, y1): (f64, f64), (x2, y2): (f64, f64)) {
    let _ = writeln!(out, r#"<path d="M {} {} L {} {}"/>"#, num(x1), num(y1), num(x2), num(y2));
}

fn arc(out: &mut String, r: f64, from: (f64, f64), to: (f64, f64), center: (f64, f64)) {
    let a0 = (from.1 - center.1).atan2(from.0 - center.0);
    let a1 = (to.1 - center.1).atan2(to.0 - center.0);
    let mut d = a1 - a0;
    if d > std::f64::consts::PI {
        d -= 2.0 * std::f64::consts::PI;
    } else if d <= -std::f64::consts::PI {
        d += 2.0 * std::f64::consts::PI;
    }
    let sweep = u8::from(d > 0.0);
    let _ = writeln!(
        out,
        r#"<path d="M {} {} A {} {} 0 0 {} {} {}"/>"#,
        num(from.0),
        num(from.1),
        num(r),
        num(r),
        sweep,
        num(to.0),
        num(to.1)
    );
}

/// SVG 1.1 drawing; under-strands of crossings are broken around the cell centre.
pub fn render_svg(m: &Mosaic, opts: &RenderOptions) -> String {
    let s = opts.tile_size;
    let gap = opts.gap.min(s / 2.0 - f64::EPSILON).max(0.0);
    let size = num(s * m.dim() as f64);
    let mut out = String::new();
    let _ = writeln!(out, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{size}" height="{size}" viewBox="0 0 {size} {size}">"#
    );
    let _ = writeln!(out, r#"<g fill="none" stroke="black" stroke-width="{}" stroke-linecap="butt">"#, num(s / 20.0));
    for p in m.positions() {
        let t = m.get(p);
        if t.is_blank() {
            continue;
        }
        let (x0, y0) = (p.col as f64 * s, p.row as f64 * s);
        let _ = writeln!(out, r#"<g id="cell-{}-{}">"#, p.row, p.col);
        let spec = t.spec();
        for &(a, b) in spec.pairings {
            let (pa, pb) = (midpoint(x0, y0, s, a), midpoint(x0, y0, s, b));
            if a.opposite() != b {
                arc(&mut out, s / 2.0, pa, pb, corner(x0, y0, s, a, b));
                continue;
            }
            let over = match spec.over_axis {
                Some(OverAxis::Vertical) => a.is_vertical(),
                Some(OverAxis::Horizontal) => !a.is_vertical(),
                None => true,
            };
            if over {
                line(&mut out, pa, pb);
            } else {
                let (cx, cy) = (x0 + s / 2.0, y0 + s / 2.0);
                let toward = |(px, py): (f64, f64)| {
                    let (dx, dy) = (px - cx, py - cy);
                    let len = (dx * dx + dy * dy).sqrt();
                    (cx + dx / len * gap, cy + dy / len * gap)
                };
                line(&mut out, pa, toward(pa));
                line(&mut out, toward(pb), pb);
            }
        }
        out.push_str("</g>\n");
    }
    out.push_str("</g>\n</svg>\n");
    out
}

pub fn render(m: &Mosaic, opts: &RenderOptions) -> String {
    match opts.format {
        RenderFormat::Ascii => render_ascii(m, opts),
        RenderFormat::Svg => render_svg(m, opts),
    }
}
