//! SVG rendering of drawings. Vertices are coloured by hull layer, edges
//! by the channel-wise maximum of their endpoint colours (red and green
//! give yellow), and crossings are marked at their exact intersection
//! points.

use std::fmt::Write as _;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Signed;

use crate::bounds::decimal;
use crate::color::{color_by_hulls, Colour, ColoredDrawing};
use crate::geometry::{count_crossings, Crossing, Drawing, Point};

pub type Rgb = [u8; 3];

const UNCOLOURED: Rgb = [0xbb, 0xbb, 0xbb];

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RenderSpec {
    /// Overrides of the default vertex palette; empty keeps the defaults.
    pub palette: Vec<(Colour, Rgb)>,
    pub crossings: bool,
    pub background: Rgb,
}

impl Default for RenderSpec {
    fn default() -> Self {
        RenderSpec { palette: Vec::new(), crossings: true, background: [0x10, 0x10, 0x18] }
    }
}

impl RenderSpec {
    pub fn colour(&self, c: Colour) -> Rgb {
        if let Some(&(_, rgb)) = self.palette.iter().find(|(k, _)| *k == c) {
            return rgb;
        }
        match c {
            Colour::Red => [0xff, 0, 0],
            Colour::Green => [0, 0xff, 0],
            Colour::Blue => [0, 0, 0xff],
            Colour::White => [0xff, 0xff, 0xff],
        }
    }
}

fn blend(a: Rgb, b: Rgb) -> Rgb {
    [a[0].max(b[0]), a[1].max(b[1]), a[2].max(b[2])]
}

fn hex(c: Rgb) -> String {
    format!("#{:02x}{:02x}{:02x}", c[0], c[1], c[2])
}

/// Exact intersection of the two edges of a crossing.
pub fn crossing_point(points: &[Point], c: &Crossing) -> (BigRational, BigRational) {
    let (a, b) = (points[c.edge_a.0], points[c.edge_a.1]);
    let (p, q) = (points[c.edge_b.0], points[c.edge_b.1]);
    let cross = |ux: i64, uy: i64, vx: i64, vy: i64| BigInt::from(ux) * vy - BigInt::from(uy) * vx;
    let num = cross(p.x - a.x, p.y - a.y, q.x - p.x, q.y - p.y);
    let den = cross(b.x - a.x, b.y - a.y, q.x - p.x, q.y - p.y);
    let t = BigRational::new(num, den);
    let x = BigRational::from_integer(a.x.into()) + &t * BigInt::from(b.x - a.x);
    let y = BigRational::from_integer(a.y.into()) + &t * BigInt::from(b.y - a.y);
    (x, y)
}

fn fixed6(r: &BigRational) -> String {
    // truncated to six places; "-0.000000" is normalised
    let s = decimal(r, 6);
    if r.is_negative() && s.trim_start_matches('-').chars().all(|c| c == '0' || c == '.') {
        s.trim_start_matches('-').to_string()
    } else {
        s
    }
}

fn render(d: &Drawing, colours: Option<Vec<Rgb>>, spec: &RenderSpec) -> String {
    let pts = d.points();
    let (min_x, max_x) = (pts.iter().map(|p| p.x).min().unwrap(), pts.iter().map(|p| p.x).max().unwrap());
    let (min_y, max_y) = (pts.iter().map(|p| p.y).min().unwrap(), pts.iter().map(|p| p.y).max().unwrap());
    let span = (max_x - min_x).max(max_y - min_y).max(1);
    let margin = span / 20 + 1;
    let radius = span / 120 + 1;
    let stroke = span / 600 + 1;
    let (w, h) = (max_x - min_x + 2 * margin, max_y - min_y + 2 * margin);
    let vertex_rgb = |v: usize| colours.as_ref().map_or(UNCOLOURED, |c| c[v]);

    let mut s = String::new();
    // y grows upwards in the drawing, downwards in SVG
    let _ = writeln!(
        s,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"{} {} {} {}\" width=\"800\" height=\"{}\">",
        min_x - margin,
        -(max_y + margin),
        w,
        h,
        (800 * h / w).max(1)
    );
    let _ = writeln!(
        s,
        "<rect x=\"{}\" y=\"{}\" width=\"{}\" height=\"{}\" fill=\"{}\"/>",
        min_x - margin,
        -(max_y + margin),
        w,
        h,
        hex(spec.background)
    );
    let _ = writeln!(s, "<g transform=\"scale(1,-1)\">");
    for i in 0..d.n() {
        for j in i + 1..d.n() {
            let _ = writeln!(
                s,
                "<line class=\"edge\" x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\" stroke=\"{}\" stroke-width=\"{}\"/>",
                pts[i].x,
                pts[i].y,
                pts[j].x,
                pts[j].y,
                hex(blend(vertex_rgb(i), vertex_rgb(j))),
                stroke
            );
        }
    }
    if spec.crossings {
        for c in count_crossings(d).iter() {
            let (x, y) = crossing_point(pts, c);
            let _ = writeln!(
                s,
                "<circle class=\"crossing\" cx=\"{}\" cy=\"{}\" r=\"{}\" fill=\"#ff8800\"/>",
                fixed6(&x),
                fixed6(&y),
                (radius / 2).max(1)
            );
        }
    }
    for (v, p) in pts.iter().enumerate() {
        let _ = writeln!(
            s,
            "<circle class=\"vertex\" cx=\"{}\" cy=\"{}\" r=\"{}\" fill=\"{}\"/>",
            p.x,
            p.y,
            radius,
            hex(vertex_rgb(v))
        );
    }
    s.push_str("</g>\n</svg>\n");
    s
}

pub fn render_colored(cd: &ColoredDrawing, spec: &RenderSpec) -> String {
    let colours = cd.colours().iter().map(|&c| spec.colour(c)).collect();
    render(cd.drawing(), Some(colours), spec)
}

/// Renders with the hull colouring, or uncoloured when the peel profile has
/// no colouring.
pub fn render_svg(d: &Drawing, spec: &RenderSpec) -> String {
    match color_by_hulls(d) {
        Ok(cd) => render_colored(&cd, spec),
        Err(_) => render(d, None, spec),
    }
}
