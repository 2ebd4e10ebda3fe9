//! Single-function SVG plots on the unit square.

use std::fmt::Write as _;

use crate::exactfield::FieldElement;
use crate::plcalc::{Piece, PiecewisePoly};

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum SvgError {
    #[error("width and height must be positive")]
    BadSize,
    #[error("at least 2 samples per piece are needed, got {0}")]
    TooFewSamples(usize),
    #[error("stroke width must be positive")]
    BadStroke,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RenderOptions {
    pub width: u32,
    pub height: u32,
    /// Used for quadratic pieces only; linear pieces are drawn from their endpoints.
    pub samples_per_piece: usize,
    pub stroke_width: u32,
}

impl Default for RenderOptions {
    fn default() -> Self {
        Self {
            width: 640,
            height: 640,
            samples_per_piece: 16,
            stroke_width: 2,
        }
    }
}

impl RenderOptions {
    fn validate(&self) -> Result<(), SvgError> {
        if self.width == 0 || self.height == 0 {
            return Err(SvgError::BadSize);
        }
        if self.samples_per_piece < 2 {
            return Err(SvgError::TooFewSamples(self.samples_per_piece));
        }
        if self.stroke_width == 0 {
            return Err(SvgError::BadStroke);
        }
        Ok(())
    }

    fn margin(&self) -> u32 {
        self.width.min(self.height) / 16
    }
}

/// Pixel places written for every coordinate.
pub const PIXEL_PLACES: usize = 3;

/// Maps `(x, y) ∈ [0,1]²` to viewport pixels, exactly, then truncates once to
/// [`PIXEL_PLACES`] decimals.
pub fn viewport_point(
    x: &FieldElement,
    y: &FieldElement,
    opts: &RenderOptions,
) -> (String, String) {
    let m = i64::from(opts.margin());
    let span_x = FieldElement::integer(i64::from(opts.width) - 2 * m);
    let span_y = FieldElement::integer(i64::from(opts.height) - 2 * m);
    let px = FieldElement::integer(m) + x * span_x;
    let py = FieldElement::integer(i64::from(opts.height) - m) - y * span_y;
    (px.to_decimal(PIXEL_PLACES), py.to_decimal(PIXEL_PLACES))
}

/// Splits pieces into maximal runs with no jump between neighbours.
fn continuous_runs(f: &PiecewisePoly) -> Vec<&[Piece]> {
    let pieces = f.pieces();
    let mut runs = Vec::new();
    let mut start = 0;
    for i in 1..pieces.len() {
        let prev = &pieces[i - 1];
        if prev.poly_at(&prev.end) != pieces[i].poly_at(&pieces[i].start) {
            runs.push(&pieces[start..i]);
            start = i;
        }
    }
    runs.push(&pieces[start..]);
    runs
}

fn run_vertices(run: &[Piece], samples: usize) -> Vec<(FieldElement, FieldElement)> {
    let mut out = Vec::new();
    for p in run {
        if p.coeffs[2].is_zero() {
            out.push((p.start.clone(), p.poly_at(&p.start)));
        } else {
            let width = &p.end - &p.start;
            for k in 0..samples - 1 {
                let x = &p.start + &width * FieldElement::ratio(k as i64, samples as i64 - 1);
                let y = p.poly_at(&x);
                out.push((x, y));
            }
        }
    }
    let last = &run[run.len() - 1];
    out.push((last.end.clone(), last.poly_at(&last.end)));
    out
}

/// One `<polyline class="graph">` per continuous run of pieces, over `[0,1]²` axes.
pub fn render_svg(f: &PiecewisePoly, opts: &RenderOptions) -> Result<String, SvgError> {
    opts.validate()?;
    let (w, h) = (opts.width, opts.height);
    let m = opts.margin();
    let mut svg = String::new();
    let _ = writeln!(
        svg,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{w}" height="{h}" viewBox="0 0 {w} {h}">"#
    );
    let _ = writeln!(svg, r#"<rect width="{w}" height="{h}" fill="white"/>"#);
    let _ = writeln!(
        svg,
        r#"<line class="axis" x1="{m}" y1="{y}" x2="{x2}" y2="{y}" stroke="black" stroke-width="1"/>"#,
        y = h - m,
        x2 = w - m
    );
    let _ = writeln!(
        svg,
        r#"<line class="axis" x1="{m}" y1="{y1}" x2="{m}" y2="{m}" stroke="black" stroke-width="1"/>"#,
        y1 = h - m
    );
    for run in continuous_runs(f) {
        let points: Vec<String> = run_vertices(run, opts.samples_per_piece)
            .iter()
            .map(|(x, y)| {
                let (px, py) = viewport_point(x, y, opts);
                format!("{},{}", px, py)
            })
            .collect();
        let _ = writeln!(
            svg,
            r#"<polyline class="graph" fill="none" stroke="steelblue" stroke-width="{}" points="{}"/>"#,
            opts.stroke_width,
            points.join(" ")
        );
    }
    svg.push_str("</svg>\n");
    Ok(svg)
}

/// Vertex lists of the `graph` polylines in a document produced by [`render_svg`].
pub fn polyline_vertices(svg: &str) -> Vec<Vec<(String, String)>> {
    svg.lines()
        .filter(|l| l.starts_with(r#"<polyline class="graph""#))
        .filter_map(|l| {
            let start = l.find(r#"points=""#)? + r#"points=""#.len();
            let end = start + l[start..].find('"')?;
            Some(
                l[start..end]
                    .split(' ')
                    .filter_map(|p| p.split_once(','))
                    .map(|(x, y)| (x.to_string(), y.to_string()))
                    .collect(),
            )
        })
        .collect()
}
