//! Deterministic SVG rendering of a trace.
//!
//! Rendering is purely a function of the claimed coordinates in the trace:
//! one `<line>` element per stick in record order, one small `<circle>` and a
//! text label per point. Re-rendering the same trace yields byte-identical
//! output, so renders can be diffed like any other artifact.

use std::collections::BTreeMap;

use crate::trace::{PointId, Trace};

/// Radius of the dot drawn at each point, in board units.
const POINT_RADIUS: f64 = 0.02;

/// Padding added around the bounding box of all points, in board units.
const PADDING: f64 = 1.0;

/// Format a coordinate with four decimal places, avoiding `-0.0000`.
fn fmt_coord(v: f64) -> String {
    let s = format!("{v:.4}");
    if s == "-0.0000" {
        "0.0000".to_string()
    } else {
        s
    }
}

/// Render a trace as a standalone SVG document.
///
/// Sticks are drawn first (in the order their records appear), then point
/// markers, then labels, so labels always sit on top. The viewBox is the
/// bounding box of all claimed points padded by one unit; an empty trace
/// renders with the fixed viewBox `-1 -1 2 2`.
pub fn render_svg(trace: &Trace) -> String {
    // Claimed coordinates, parsed for layout only; rendering never needs
    // full precision.
    let mut points: BTreeMap<PointId, (f64, f64)> = BTreeMap::new();
    let mut sticks: Vec<(String, PointId, PointId)> = Vec::new();
    for record in &trace.records {
        for claim in &record.new_points {
            let x = claim.x.parse::<f64>().unwrap_or(0.0);
            let y = claim.y.parse::<f64>().unwrap_or(0.0);
            points.insert(claim.id, (x, y));
        }
        for claim in &record.new_sticks {
            sticks.push((claim.id.to_string(), claim.a, claim.b));
        }
    }

    let (min_x, min_y, width, height) = if points.is_empty() {
        (-1.0, -1.0, 2.0, 2.0)
    } else {
        let mut min_x = f64::INFINITY;
        let mut min_y = f64::INFINITY;
        let mut max_x = f64::NEG_INFINITY;
        let mut max_y = f64::NEG_INFINITY;
        for &(x, y) in points.values() {
            min_x = min_x.min(x);
            min_y = min_y.min(y);
            max_x = max_x.max(x);
            max_y = max_y.max(y);
        }
        (
            min_x - PADDING,
            min_y - PADDING,
            max_x - min_x + 2.0 * PADDING,
            max_y - min_y + 2.0 * PADDING,
        )
    };

    let mut svg = String::new();
    svg.push_str(&format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"{} {} {} {}\">\n",
        fmt_coord(min_x),
        fmt_coord(min_y),
        fmt_coord(width),
        fmt_coord(height)
    ));

    for (id, a, b) in &sticks {
        let (Some(&(ax, ay)), Some(&(bx, by))) = (points.get(a), points.get(b)) else {
            continue;
        };
        svg.push_str(&format!(
            "  <line id=\"{id}\" x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\" \
             stroke=\"black\" stroke-width=\"0.01\" />\n",
            fmt_coord(ax),
            fmt_coord(ay),
            fmt_coord(bx),
            fmt_coord(by)
        ));
    }

    for (id, &(x, y)) in &points {
        svg.push_str(&format!(
            "  <circle id=\"{id}\" cx=\"{}\" cy=\"{}\" r=\"{POINT_RADIUS}\" fill=\"black\" />\n",
            fmt_coord(x),
            fmt_coord(y)
        ));
    }
    for (id, &(x, y)) in &points {
        svg.push_str(&format!(
            "  <text x=\"{}\" y=\"{}\" font-size=\"0.1\">{id}</text>\n",
            fmt_coord(x + 0.03),
            fmt_coord(y - 0.03)
        ));
    }

    svg.push_str("</svg>\n");
    svg
}
