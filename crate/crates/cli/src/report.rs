use std::fmt::Write as _;

use parablend::diagnostics::{Boundary, CurveDiagnostics, SurfaceDiagnostics, Tolerances};
use parablend::io::format_g17;
use parablend::{BlendedCurve, SurfaceNet};

use crate::config::ReportFormat;

/// Ordered `key = value` lines; rendered as `key=value` or aligned text.
struct Report {
    lines: Vec<(String, String)>,
}

impl Report {
    fn new() -> Self {
        Report { lines: Vec::new() }
    }

    fn push(&mut self, key: impl Into<String>, value: impl ToString) {
        self.lines.push((key.into(), value.to_string()));
    }

    fn num(&mut self, key: impl Into<String>, value: f64, format: ReportFormat) {
        let v = match format {
            ReportFormat::Kv => format_g17(value),
            ReportFormat::Text => format!("{value:.3e}"),
        };
        self.push(key, v);
    }

    fn render(&self, format: ReportFormat) -> String {
        let mut out = String::new();
        match format {
            ReportFormat::Kv => {
                for (k, v) in &self.lines {
                    let _ = writeln!(out, "{k}={v}");
                }
            }
            ReportFormat::Text => {
                let width = self.lines.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
                for (k, v) in &self.lines {
                    let _ = writeln!(out, "{k:<width$}  {v}");
                }
            }
        }
        out
    }
}

fn verdict(pass: bool) -> &'static str {
    if pass {
        "PASS"
    } else {
        "FAIL"
    }
}

pub fn curve_report(curve: &BlendedCurve, diag: &CurveDiagnostics, tol: &Tolerances, format: ReportFormat) -> String {
    let mut r = Report::new();
    r.push("kind", "curve");
    r.push("points", curve.points().len());
    r.push("segments", curve.segments().len());
    r.push("junctions", diag.junction_angles.len());
    for (k, a) in diag.junction_angles.iter().enumerate() {
        r.num(format!("junction.{}.angle", k + 1), *a, format);
    }
    r.num("max_junction_angle", diag.max_junction_angle(), format);
    r.num("tol.junction_angle", tol.junction_angle, format);
    r.num("node_error", diag.node_error, format);
    r.num("tol.node", tol.node, format);
    r.num("tangent_fd_error", diag.tangent_fd_error, format);
    r.num("tol.tangent_fd", tol.tangent_fd, format);
    r.push("result", verdict(diag.passes(tol)));
    r.render(format)
}

fn boundary_key(b: Boundary) -> String {
    match b {
        Boundary::Column { i, j } => format!("boundary.col.{i}.{j}"),
        Boundary::Row { i, j } => format!("boundary.row.{i}.{j}"),
    }
}

pub fn surface_report(net: &SurfaceNet, diag: &SurfaceDiagnostics, tol: &Tolerances, format: ReportFormat) -> String {
    let mut r = Report::new();
    let (p, q) = net.patch_counts();
    r.push("kind", "surface");
    r.push("cols", net.cols());
    r.push("rows", net.rows());
    r.push("patches", p * q);
    r.push("scheme", diag.scheme);
    r.push("boundaries", diag.boundaries.len());
    for b in &diag.boundaries {
        let key = boundary_key(b.boundary);
        r.num(format!("{key}.position_mismatch"), b.position_mismatch, format);
        r.num(format!("{key}.normal_angle"), b.normal_angle, format);
    }
    r.num("scale", diag.scale, format);
    r.num("max_position_mismatch", diag.max_position_mismatch(), format);
    r.num("network_line_gap", diag.network_line_gap, format);
    r.num("tol.seam", tol.seam * diag.scale, format);
    r.num("max_normal_angle", diag.max_normal_angle(), format);
    r.num("tol.normal_angle", tol.normal_angle, format);
    let fp = &diag.footprints;
    if let Some(n) = fp.interior {
        r.push("footprint.interior", n);
    }
    if let Some(n) = fp.edge {
        r.push("footprint.edge", n);
    }
    r.push("footprint.corner", fp.corner);
    r.push("result", verdict(diag.passes(tol)));
    r.render(format)
}
