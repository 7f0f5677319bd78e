//! Minimal SVG rendering of extracted vortex curves: an orthographic
//! projection of the polylines onto a coordinate plane.

use ehvort_core::vortex::{FrameReport, GridSpec};

const W: f64 = 640.0;
const PAD: f64 = 32.0;
const PALETTE: [&str; 6] = ["#c0392b", "#2980b9", "#27ae60", "#8e44ad", "#d35400", "#16a085"];

fn axes_indices(axes: &str) -> Result<(usize, usize), String> {
    match axes {
        "xy" => Ok((0, 1)),
        "xz" => Ok((0, 2)),
        "yz" => Ok((1, 2)),
        other => Err(format!("unknown projection '{other}', want xy, xz or yz")),
    }
}

pub fn curves_to_svg(report: &FrameReport, spec: &GridSpec, axes: &str) -> Result<String, String> {
    let (u, v) = axes_indices(axes)?;
    let span_u = spec.max[u] - spec.min[u];
    let span_v = spec.max[v] - spec.min[v];
    let scale = (W - 2.0 * PAD) / span_u.max(span_v);
    let h = span_v * scale + 2.0 * PAD;
    let sx = |p: &[f64; 3]| PAD + (p[u] - spec.min[u]) * scale;
    // SVG y grows downward
    let sy = |p: &[f64; 3]| h - PAD - (p[v] - spec.min[v]) * scale;

    let mut s = format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{W}\" height=\"{h:.0}\" \
         viewBox=\"0 0 {W} {h:.0}\">\n<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
    );
    s.push_str(&format!(
        "<text x=\"{PAD}\" y=\"20\" font-family=\"monospace\" font-size=\"13\">t = {} | {} component(s), {} open, {} closed | {} plane</text>\n",
        report.time,
        report.component_count,
        report.open_curves(),
        report.closed_curves(),
        axes
    ));
    for (ci, curve) in report.curves.iter().enumerate() {
        if curve.points.is_empty() {
            continue;
        }
        let color = PALETTE[ci % PALETTE.len()];
        let mut d = String::new();
        for (pi, p) in curve.points.iter().enumerate() {
            let cmd = if pi == 0 { 'M' } else { 'L' };
            d.push_str(&format!("{cmd}{:.2} {:.2} ", sx(p), sy(p)));
        }
        if curve.closed {
            d.push('Z');
        }
        s.push_str(&format!(
            "<path d=\"{}\" fill=\"none\" stroke=\"{}\" stroke-width=\"1.5\"/>\n",
            d.trim_end(),
            color
        ));
    }
    s.push_str("</svg>\n");
    Ok(s)
}

#[cfg(test)]
mod tests {
    use super::*;
    use ehvort_core::vortex::VortexCurve;

    #[test]
    fn renders_a_closed_square() {
        let spec = GridSpec::cube(-1.0, 1.0, 4);
        let report = FrameReport {
            time: 0.5,
            component_count: 1,
            degenerate_cells: 0,
            crossed_faces: 4,
            boundary_net_winding: 0,
            grid_shifted: false,
            topology_event: false,
            curves: vec![VortexCurve {
                closed: true,
                points: vec![
                    [-0.5, 0.0, -0.5],
                    [0.5, 0.0, -0.5],
                    [0.5, 0.0, 0.5],
                    [-0.5, 0.0, 0.5],
                ],
            }],
        };
        let svg = curves_to_svg(&report, &spec, "xz").unwrap();
        assert!(svg.starts_with("<svg"));
        assert!(svg.contains("Z\""));
        assert!(svg.contains("1 component(s)"));
        assert!(axes_indices("bad").is_err());
    }
}
