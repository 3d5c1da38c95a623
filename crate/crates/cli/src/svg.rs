//! Minimal SVG scatter plot for amoeba clouds: fixed viewport, axes in
//! valuation-cone coordinates, the cone boundary drawn for the GL(2) model.

use std::fmt::Write as _;

use spherotrop_core::numeric_amoeba::AmoebaCloud;
use spherotrop_core::spherical_core::SphericalModel;

const W: f64 = 640.0;
const H: f64 = 640.0;
const MARGIN: f64 = 50.0;

/// Renders the first two cloud coordinates as a scatter plot (rank-one
/// models use the value against zero).
pub fn render_cloud(model: &SphericalModel, cloud: &AmoebaCloud) -> String {
    let coords: Vec<(f64, f64)> = cloud
        .points
        .iter()
        .map(|(_, c)| (c[0], if c.len() > 1 { c[1] } else { 0.0 }))
        .collect();
    let (mut xmin, mut xmax, mut ymin, mut ymax) = (-1.0f64, 1.0f64, -1.0f64, 1.0f64);
    for &(x, y) in &coords {
        xmin = xmin.min(x);
        xmax = xmax.max(x);
        ymin = ymin.min(y);
        ymax = ymax.max(y);
    }
    let pad_x = 0.1 * (xmax - xmin).max(1.0);
    let pad_y = 0.1 * (ymax - ymin).max(1.0);
    xmin -= pad_x;
    xmax += pad_x;
    ymin -= pad_y;
    ymax += pad_y;
    let sx = (W - 2.0 * MARGIN) / (xmax - xmin);
    let sy = (H - 2.0 * MARGIN) / (ymax - ymin);
    let px = |x: f64| MARGIN + (x - xmin) * sx;
    let py = |y: f64| H - MARGIN - (y - ymin) * sy;

    let mut s = String::new();
    let _ = writeln!(
        s,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{W}\" height=\"{H}\" viewBox=\"0 0 {W} {H}\">"
    );
    let _ = writeln!(s, "<rect width=\"{W}\" height=\"{H}\" fill=\"white\"/>");
    // axes through the origin of the valuation coordinates
    if xmin < 0.0 && xmax > 0.0 {
        let _ = writeln!(
            s,
            "<line x1=\"{:.2}\" y1=\"{MARGIN}\" x2=\"{:.2}\" y2=\"{:.2}\" stroke=\"#bbbbbb\"/>",
            px(0.0),
            px(0.0),
            H - MARGIN
        );
    }
    if ymin < 0.0 && ymax > 0.0 {
        let _ = writeln!(
            s,
            "<line x1=\"{MARGIN}\" y1=\"{:.2}\" x2=\"{:.2}\" y2=\"{:.2}\" stroke=\"#bbbbbb\"/>",
            py(0.0),
            W - MARGIN,
            py(0.0)
        );
    }
    // cone boundary for GL(2): the diagonal x = y
    if matches!(model, SphericalModel::Gln(2)) {
        let lo = xmin.max(ymin);
        let hi = xmax.min(ymax);
        if lo < hi {
            let _ = writeln!(
                s,
                "<line x1=\"{:.2}\" y1=\"{:.2}\" x2=\"{:.2}\" y2=\"{:.2}\" stroke=\"#dd8888\" stroke-dasharray=\"6 3\"/>",
                px(lo),
                py(lo),
                px(hi),
                py(hi)
            );
        }
    }
    for &(x, y) in &coords {
        let _ = writeln!(
            s,
            "<circle cx=\"{:.3}\" cy=\"{:.3}\" r=\"2\" fill=\"#2244aa\" fill-opacity=\"0.6\"/>",
            px(x),
            py(y)
        );
    }
    let _ = writeln!(
        s,
        "<text x=\"{MARGIN}\" y=\"24\" font-family=\"monospace\" font-size=\"13\">amoeba at t = {} ({} points, {} skipped)</text>",
        cloud.base_t,
        cloud.points.len(),
        cloud.skipped
    );
    s.push_str("</svg>\n");
    s
}
