//! Minimal static SVG output: bodies with optional polar overlay, and
//! log-scaled sweep curves.

use volprod_core::geometry::{ConvexPolygon, Point2};

const PALETTE: [&str; 6] = ["#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b"];

fn poly_points(k: &ConvexPolygon, sx: f64, sy: f64, tx: f64, ty: f64) -> String {
    k.vertices()
        .iter()
        .map(|v| format!("{:.4},{:.4}", v.x * sx + tx, v.y * sy + ty))
        .collect::<Vec<_>>()
        .join(" ")
}

/// Renders polygons (with labels), an optional circle of the given radius
/// about the origin, and an optional centre marker, in a common frame.
pub fn body_figure(
    bodies: &[(&ConvexPolygon, &str)],
    unit_circle: bool,
    centre: Option<Point2>,
) -> String {
    let mut lo = Point2 { x: f64::MAX, y: f64::MAX };
    let mut hi = Point2 { x: f64::MIN, y: f64::MIN };
    for (k, _) in bodies {
        for v in k.vertices() {
            lo.x = lo.x.min(v.x);
            lo.y = lo.y.min(v.y);
            hi.x = hi.x.max(v.x);
            hi.y = hi.y.max(v.y);
        }
    }
    if unit_circle {
        lo.x = lo.x.min(-1.0);
        lo.y = lo.y.min(-1.0);
        hi.x = hi.x.max(1.0);
        hi.y = hi.y.max(1.0);
    }
    let span = (hi.x - lo.x).max(hi.y - lo.y).max(1e-9);
    let size = 480.0;
    let margin = 24.0;
    let s = (size - 2.0 * margin) / span;
    // Flip y so the figure is in the usual orientation.
    let tx = margin - lo.x * s;
    let ty = size - margin + lo.y * s;
    let mut out = String::new();
    out.push_str(&format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{size}\" height=\"{size}\" viewBox=\"0 0 {size} {size}\">\n"
    ));
    out.push_str("<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n");
    if unit_circle {
        out.push_str(&format!(
            "<circle cx=\"{:.4}\" cy=\"{:.4}\" r=\"{:.4}\" fill=\"none\" stroke=\"#999999\" stroke-dasharray=\"4 3\"/>\n",
            tx, ty, s
        ));
    }
    for (i, (k, label)) in bodies.iter().enumerate() {
        let colour = PALETTE[i % PALETTE.len()];
        out.push_str(&format!(
            "<polygon points=\"{}\" fill=\"none\" stroke=\"{colour}\" stroke-width=\"1.5\"/>\n",
            poly_points(k, s, -s, tx, ty)
        ));
        out.push_str(&format!(
            "<text x=\"{}\" y=\"{}\" fill=\"{colour}\" font-size=\"13\">{label}</text>\n",
            margin,
            margin + 16.0 * i as f64
        ));
    }
    if let Some(c) = centre {
        out.push_str(&format!(
            "<circle cx=\"{:.4}\" cy=\"{:.4}\" r=\"3\" fill=\"#000000\"/>\n",
            c.x * s + tx,
            -c.y * s + ty
        ));
    }
    out.push_str("</svg>\n");
    out
}

/// A simple scatter/line chart; either axis may be log-scaled.
pub fn curve_figure(
    series: &[(String, Vec<(f64, f64)>)],
    logx: bool,
    logy: bool,
    title: &str,
) -> String {
    let map = |v: f64, log: bool| if log { v.log10() } else { v };
    let mut xs = Vec::new();
    let mut ys = Vec::new();
    for (_, pts_list) in series {
        for &(x, y) in pts_list {
            xs.push(map(x, logx));
            ys.push(map(y, logy));
        }
    }
    let (x0, x1) = (
        xs.iter().cloned().fold(f64::MAX, f64::min),
        xs.iter().cloned().fold(f64::MIN, f64::max),
    );
    let (y0, y1) = (
        ys.iter().cloned().fold(f64::MAX, f64::min),
        ys.iter().cloned().fold(f64::MIN, f64::max),
    );
    let (w, h, m) = (560.0, 400.0, 48.0);
    let sx = (w - 2.0 * m) / (x1 - x0).max(1e-12);
    let sy = (h - 2.0 * m) / (y1 - y0).max(1e-12);
    let px = |x: f64| m + (map(x, logx) - x0) * sx;
    let py = |y: f64| h - m - (map(y, logy) - y0) * sy;
    let mut out = format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{w}\" height=\"{h}\" viewBox=\"0 0 {w} {h}\">\n"
    );
    out.push_str("<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n");
    out.push_str(&format!(
        "<text x=\"{}\" y=\"20\" font-size=\"14\">{title}</text>\n",
        m
    ));
    out.push_str(&format!(
        "<rect x=\"{m}\" y=\"{m}\" width=\"{}\" height=\"{}\" fill=\"none\" stroke=\"#333333\"/>\n",
        w - 2.0 * m,
        h - 2.0 * m
    ));
    for (i, (label, pts_list)) in series.iter().enumerate() {
        let colour = PALETTE[i % PALETTE.len()];
        let path: Vec<String> = pts_list
            .iter()
            .map(|&(x, y)| format!("{:.3},{:.3}", px(x), py(y)))
            .collect();
        out.push_str(&format!(
            "<polyline points=\"{}\" fill=\"none\" stroke=\"{colour}\" stroke-width=\"1.5\"/>\n",
            path.join(" ")
        ));
        for &(x, y) in pts_list {
            out.push_str(&format!(
                "<circle cx=\"{:.3}\" cy=\"{:.3}\" r=\"2.5\" fill=\"{colour}\"/>\n",
                px(x),
                py(y)
            ));
        }
        out.push_str(&format!(
            "<text x=\"{}\" y=\"{}\" fill=\"{colour}\" font-size=\"12\">{label}</text>\n",
            w - m - 120.0,
            m + 16.0 * (i + 1) as f64
        ));
    }
    out.push_str("</svg>\n");
    out
}
