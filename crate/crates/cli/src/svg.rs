//! Minimal SVG scatter plots: the plane of the first two coordinates,
//! autoscaled to the data with a 5% margin.

use std::fmt::Write;

const SIZE: f64 = 800.0;
const MARGIN: f64 = 0.05;
const RADIUS: f64 = 3.0;
const PALETTE: [&str; 10] = [
    "#d62728", "#2ca02c", "#1f77b4", "#ff7f0e", "#9467bd", "#8c564b", "#e377c2", "#7f7f7f",
    "#bcbd22", "#17becf",
];
const UNLABELED: &str = "#333333";

/// One `<circle>` per point, filled by label.
pub fn scatter(points: &[(f64, f64)], labels: Option<&[usize]>) -> String {
    let (mut x0, mut x1, mut y0, mut y1) = (f64::INFINITY, f64::NEG_INFINITY, f64::INFINITY, f64::NEG_INFINITY);
    for &(x, y) in points {
        x0 = x0.min(x);
        x1 = x1.max(x);
        y0 = y0.min(y);
        y1 = y1.max(y);
    }
    let span = |lo: f64, hi: f64| if hi > lo { hi - lo } else { 1.0 };
    let (sx, sy) = (span(x0, x1), span(y0, y1));
    let (x0, y0) = (x0 - MARGIN * sx, y0 - MARGIN * sy);
    let (sx, sy) = (sx * (1.0 + 2.0 * MARGIN), sy * (1.0 + 2.0 * MARGIN));

    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{SIZE}" height="{SIZE}" viewBox="0 0 {SIZE} {SIZE}">"#
    );
    let _ = writeln!(
        out,
        r##"<rect x="0" y="0" width="{SIZE}" height="{SIZE}" fill="#ffffff" stroke="#999999"/>"##
    );
    for (i, &(x, y)) in points.iter().enumerate() {
        let px = (x - x0) / sx * SIZE;
        let py = SIZE - (y - y0) / sy * SIZE;
        let fill = labels.map_or(UNLABELED, |l| PALETTE[l[i] % PALETTE.len()]);
        let _ = writeln!(
            out,
            r#"<circle cx="{px:.3}" cy="{py:.3}" r="{RADIUS}" fill="{fill}"/>"#
        );
    }
    out.push_str("</svg>\n");
    out
}
