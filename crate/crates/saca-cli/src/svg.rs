use std::fmt::Write as _;

use anyhow::{bail, Result};
use saca::Dataset;

const WIDTH: f64 = 800.0;
const HEIGHT: f64 = 600.0;
const MARGIN: f64 = 40.0;

const PALETTE: [&str; 12] = [
    "#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd", "#8c564b", "#e377c2", "#7f7f7f",
    "#bcbd22", "#17becf", "#aec7e8", "#ffbb78",
];
const NOISE_COLOR: &str = "#999999";

/// One circle per point, fill keyed by label, -1 gray. 3-D data is drawn as
/// a cabinet orthographic projection. Output bytes are deterministic for a
/// fixed input.
pub fn render_scatter(data: &Dataset, labels: &[i32]) -> Result<String> {
    if labels.is_empty() {
        bail!("no labels to plot");
    }
    if labels.len() != data.len() {
        bail!(
            "label count {} does not match point count {}",
            labels.len(),
            data.len()
        );
    }
    if data.dim() > 3 {
        bail!(
            "cannot plot {}-dimensional data; project it to 2-D first",
            data.dim()
        );
    }

    let projected: Vec<(f64, f64)> = data.points().map(project).collect();
    let (mut min_x, mut max_x) = (f64::INFINITY, f64::NEG_INFINITY);
    let (mut min_y, mut max_y) = (f64::INFINITY, f64::NEG_INFINITY);
    for &(x, y) in &projected {
        min_x = min_x.min(x);
        max_x = max_x.max(x);
        min_y = min_y.min(y);
        max_y = max_y.max(y);
    }
    let span_x = (max_x - min_x).max(f64::MIN_POSITIVE);
    let span_y = (max_y - min_y).max(f64::MIN_POSITIVE);
    let scale = ((WIDTH - 2.0 * MARGIN) / span_x).min((HEIGHT - 2.0 * MARGIN) / span_y);
    let offset_x = (WIDTH - scale * span_x) / 2.0;
    let offset_y = (HEIGHT - scale * span_y) / 2.0;

    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{WIDTH}" height="{HEIGHT}" viewBox="0 0 {WIDTH} {HEIGHT}">"#
    );
    let _ = writeln!(
        out,
        r##"<rect width="{WIDTH}" height="{HEIGHT}" fill="#ffffff"/>"##
    );
    for (&(x, y), &label) in projected.iter().zip(labels) {
        let px = offset_x + scale * (x - min_x);
        let py = HEIGHT - offset_y - scale * (y - min_y);
        let fill = color_for(label);
        let _ = writeln!(
            out,
            r#"<circle cx="{px:.2}" cy="{py:.2}" r="2.5" fill="{fill}"/>"#
        );
    }
    out.push_str("</svg>\n");
    Ok(out)
}

fn project(p: &[f64]) -> (f64, f64) {
    match p.len() {
        1 => (p[0], 0.0),
        2 => (p[0], p[1]),
        _ => (p[0] + 0.35 * p[2], p[1] + 0.35 * p[2]),
    }
}

fn color_for(label: i32) -> &'static str {
    if label < 0 {
        NOISE_COLOR
    } else {
        PALETTE[label as usize % PALETTE.len()]
    }
}
