//! Wall diagrams as standalone SVG documents.
//!
//! The only place in the workspace where exact rationals are converted to
//! floating point: coordinates are rendered to at most six significant
//! digits at this boundary.

use num_traits::ToPrimitive;
use sheafcones::rational::Rational;
use sheafcones::stability::RankOneWall;

/// At most six significant digits, trailing zeros trimmed.
pub fn fmt_sig6(x: f64) -> String {
    if x == 0.0 {
        return "0".to_string();
    }
    let digits = 5 - x.abs().log10().floor() as i32;
    let rendered = format!("{x:.*}", digits.max(0) as usize);
    if rendered.contains('.') {
        rendered
            .trim_end_matches('0')
            .trim_end_matches('.')
            .to_string()
    } else {
        rendered
    }
}

fn to_f64(r: &Rational) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

/// Concentric semicircles in the upper stability half-plane, drawn with a
/// shared baseline at the top edge (the SVG y axis points down). Rows with
/// equal radius collapse to one arc; the largest wall is stroked in a
/// distinct color, and the common center is marked.
pub fn render(center: &Rational, rows: &[RankOneWall]) -> String {
    let c = to_f64(center);
    // Rows arrive sorted by decreasing radius; keep one arc per radius.
    let mut radii: Vec<(f64, bool)> = Vec::new();
    let mut seen: Option<&Rational> = None;
    for row in rows {
        if seen != Some(&row.wall.radius_sq) {
            seen = Some(&row.wall.radius_sq);
            radii.push((to_f64(&row.wall.radius_sq).sqrt(), row.largest));
        }
    }
    let rmax = radii.first().map(|(r, _)| *r).unwrap_or(1.0);
    let left = c - rmax - 1.0;
    let width = 2.0 * rmax + 2.0;
    let height = rmax + 1.0;

    let mut doc = format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"{} 0 {} {}\">\n",
        fmt_sig6(left),
        fmt_sig6(width),
        fmt_sig6(height)
    );
    doc.push_str(&format!(
        "  <line x1=\"{}\" y1=\"0\" x2=\"{}\" y2=\"0\" stroke=\"#999999\" stroke-width=\"0.02\"/>\n",
        fmt_sig6(left),
        fmt_sig6(left + width)
    ));
    for (radius, largest) in &radii {
        let (stroke, stroke_width) = if *largest {
            ("#c0392b", "0.06")
        } else {
            ("#2d2d2d", "0.03")
        };
        doc.push_str(&format!(
            "  <path d=\"M {} 0 A {} {} 0 0 1 {} 0\" fill=\"none\" stroke=\"{stroke}\" stroke-width=\"{stroke_width}\"/>\n",
            fmt_sig6(c + radius),
            fmt_sig6(*radius),
            fmt_sig6(*radius),
            fmt_sig6(c - radius)
        ));
    }
    doc.push_str(&format!(
        "  <circle cx=\"{}\" cy=\"0\" r=\"0.08\" fill=\"#c0392b\"/>\n",
        fmt_sig6(c)
    ));
    doc.push_str("</svg>\n");
    doc
}
