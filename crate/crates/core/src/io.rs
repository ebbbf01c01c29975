//! Point-sequence and net files in, polylines and meshes out.
//!
//! Points files hold one `x,y,z` record per line; blank lines and lines
//! starting with `#` are skipped. Net files are JSON documents
//!
//! ```text
//! {"cols": 3, "rows": 2, "points": [[x, y, z], ...]}
//! ```
//!
//! with `rows * cols` triples in row-major order. Every number written by
//! this module carries 17 significant digits, which round-trips `f64`
//! exactly.

use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use serde::Deserialize;
use thiserror::Error;

use crate::error::GeomError;
use crate::surface::{Mesh, PatchScheme, SurfaceNet};
use crate::vec3::Vec3;

#[derive(Debug, Error)]
pub enum ReadError {
    #[error("cannot read {path}: {source}")]
    Io { path: String, source: std::io::Error },

    #[error("line {line}, column {column}: {message}")]
    Parse { line: usize, column: usize, message: String },

    #[error(transparent)]
    Geometry(#[from] GeomError),
}

impl ReadError {
    pub fn kind(&self) -> &'static str {
        match self {
            ReadError::Io { .. } => "IoError",
            ReadError::Parse { .. } => "ParseError",
            ReadError::Geometry(e) => e.kind(),
        }
    }
}

fn read_to_string(path: &Path) -> Result<String, ReadError> {
    fs::read_to_string(path)
        .map_err(|source| ReadError::Io { path: path.display().to_string(), source })
}

/// Parses the text of a points file.
pub fn parse_points(text: &str) -> Result<Vec<Vec3>, ReadError> {
    let mut points = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let mut coords = [0.0; 3];
        let mut count = 0;
        let mut column = 1;
        for field in raw.split(',') {
            if count == 3 {
                return Err(ReadError::Parse {
                    line,
                    column,
                    message: "expected 3 comma-separated values, found more".into(),
                });
            }
            let value: f64 = field.trim().parse().map_err(|_| ReadError::Parse {
                line,
                column,
                message: format!("`{}` is not a number", field.trim()),
            })?;
            if !value.is_finite() {
                return Err(ReadError::Parse { line, column, message: "non-finite value".into() });
            }
            coords[count] = value;
            count += 1;
            column += field.len() + 1;
        }
        if count != 3 {
            return Err(ReadError::Parse {
                line,
                column,
                message: format!("expected 3 comma-separated values, found {count}"),
            });
        }
        points.push(Vec3::from(coords));
    }
    Ok(points)
}

pub fn read_points(path: impl AsRef<Path>) -> Result<Vec<Vec3>, ReadError> {
    parse_points(&read_to_string(path.as_ref())?)
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct NetDocument {
    cols: usize,
    rows: usize,
    points: Vec<[f64; 3]>,
}

/// Parses the text of a net file and validates the net.
pub fn parse_net(text: &str, tol_collinear: f64) -> Result<SurfaceNet, ReadError> {
    let doc: NetDocument = serde_json::from_str(text).map_err(|e| ReadError::Parse {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    let points = doc.points.into_iter().map(Vec3::from).collect();
    Ok(SurfaceNet::new(doc.cols, doc.rows, points, tol_collinear)?)
}

pub fn read_net(path: impl AsRef<Path>, tol_collinear: f64) -> Result<SurfaceNet, ReadError> {
    parse_net(&read_to_string(path.as_ref())?, tol_collinear)
}

/// Formats `v` like C's `%.17g`.
pub fn format_g17(v: f64) -> String {
    if v == 0.0 {
        return if v.is_sign_negative() { "-0".into() } else { "0".into() };
    }
    if !v.is_finite() {
        return v.to_string();
    }
    let sci = format!("{v:.16e}");
    let (mantissa, exp) = sci.split_once('e').expect("exponent");
    let exp: i32 = exp.parse().expect("exponent");
    if (-4..17).contains(&exp) {
        let fixed = format!("{:.*}", (16 - exp) as usize, v);
        trim_zeros(&fixed).to_string()
    } else {
        let sign = if exp < 0 { '-' } else { '+' };
        format!("{}e{}{:02}", trim_zeros(mantissa), sign, exp.abs())
    }
}

fn trim_zeros(s: &str) -> &str {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.')
    } else {
        s
    }
}

pub fn format_polyline_csv(points: &[Vec3]) -> String {
    let mut out = String::new();
    for p in points {
        let _ = writeln!(out, "{},{},{}", format_g17(p.x), format_g17(p.y), format_g17(p.z));
    }
    out
}

pub fn write_polyline_csv(points: &[Vec3], path: impl AsRef<Path>) -> std::io::Result<()> {
    fs::write(path, format_polyline_csv(points))
}

/// Wavefront OBJ text with 1-based quad faces.
pub fn format_mesh_obj(mesh: &Mesh, scheme: PatchScheme) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "# parablend surface mesh");
    let _ = writeln!(out, "# scheme {scheme}");
    for v in &mesh.vertices {
        let _ = writeln!(out, "v {} {} {}", format_g17(v.x), format_g17(v.y), format_g17(v.z));
    }
    for [a, b, c, d] in &mesh.faces {
        let _ = writeln!(out, "f {} {} {} {}", a + 1, b + 1, c + 1, d + 1);
    }
    out
}

pub fn write_mesh_obj(mesh: &Mesh, scheme: PatchScheme, path: impl AsRef<Path>) -> std::io::Result<()> {
    fs::write(path, format_mesh_obj(mesh, scheme))
}

pub fn format_net(net: &SurfaceNet) -> String {
    let mut out = format!("{{\n  \"cols\": {},\n  \"rows\": {},\n  \"points\": [\n", net.cols(), net.rows());
    let n = net.points().len();
    for (k, p) in net.points().iter().enumerate() {
        let sep = if k + 1 == n { "" } else { "," };
        let _ = writeln!(
            out,
            "    [{}, {}, {}]{sep}",
            format_g17(p.x),
            format_g17(p.y),
            format_g17(p.z)
        );
    }
    out.push_str("  ]\n}\n");
    out
}

pub fn write_net(net: &SurfaceNet, path: impl AsRef<Path>) -> std::io::Result<()> {
    fs::write(path, format_net(net))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arc::DEFAULT_TOL_COLLINEAR as TOL;

    #[test]
    fn parses_points() {
        assert_eq!(parse_points("0,0,0\n1,1,0").unwrap().len(), 2);
        assert_eq!(
            parse_points("# comment\n0,0,0\n\n").unwrap(),
            vec![Vec3::ZERO]
        );
        assert_eq!(
            parse_points(" 1.5 , -2e-3,7 \n").unwrap(),
            vec![Vec3::new(1.5, -2e-3, 7.0)]
        );
    }

    #[test]
    fn point_parse_errors_name_the_line() {
        match parse_points("0,0").unwrap_err() {
            ReadError::Parse { line, .. } => assert_eq!(line, 1),
            e => panic!("{e:?}"),
        }
        match parse_points("0,0,0\n# x\n1,a,2").unwrap_err() {
            ReadError::Parse { line, column, .. } => assert_eq!((line, column), (3, 3)),
            e => panic!("{e:?}"),
        }
        assert!(parse_points("0,0,0,0").is_err());
        assert!(parse_points("0,nan,0").is_err());
    }

    #[test]
    fn parses_nets() {
        let net = parse_net(r#"{"cols":2,"rows":2,"points":[[0,0,0],[1,0,0],[0,1,0],[1,1,1]]}"#, TOL)
            .unwrap();
        assert_eq!((net.cols(), net.rows()), (2, 2));
        assert_eq!(net.get(1, 1), Vec3::new(1.0, 1.0, 1.0));

        let err = parse_net(r#"{"cols":2,"rows":3,"points":[[0,0,0],[1,0,0],[0,1,0],[1,1,1],[2,2,2]]}"#, TOL)
            .unwrap_err();
        assert_eq!(err.kind(), "DimensionMismatch");

        let err = parse_net(r#"{"cols":2,"rows":2,"points":[[0,0,0],[0,0,0],[0,1,0],[1,1,1]]}"#, TOL)
            .unwrap_err();
        assert!(matches!(
            err,
            ReadError::Geometry(GeomError::NetDegenerateChord { a: (0, 0), b: (1, 0) })
        ));

        assert_eq!(parse_net("0,0,0\n", TOL).unwrap_err().kind(), "ParseError");
        assert_eq!(parse_net(r#"{"cols":2,"rows":2}"#, TOL).unwrap_err().kind(), "ParseError");
    }

    #[test]
    fn g17_matches_printf() {
        // Reference strings from C printf("%.17g").
        let cases = [
            (1.0, "1"),
            (0.1, "0.10000000000000001"),
            (-2.5, "-2.5"),
            (1e-7, "9.9999999999999995e-08"),
            (123456789.0, "123456789"),
            (1e17, "1e+17"),
            (1.0 / 3.0, "0.33333333333333331"),
            (0.0001, "0.0001"),
            (1e16, "10000000000000000"),
            (std::f64::consts::FRAC_1_SQRT_2, "0.70710678118654757"),
        ];
        for (v, s) in cases {
            assert_eq!(format_g17(v), s);
        }
        assert_eq!(format_g17(-0.0), "-0");
    }

    #[test]
    fn csv_and_obj_shapes() {
        let csv = format_polyline_csv(&[Vec3::ZERO, Vec3::new(0.5, 1.0, -3.0)]);
        assert_eq!(csv, "0,0,0\n0.5,1,-3\n");

        let mesh = Mesh {
            vertices: vec![Vec3::ZERO, Vec3::new(1.0, 0.0, 0.0), Vec3::new(1.0, 1.0, 0.0), Vec3::new(0.0, 1.0, 0.0)],
            faces: vec![[0, 1, 2, 3]],
        };
        let obj = format_mesh_obj(&mesh, PatchScheme::Average);
        assert!(obj.starts_with("# parablend surface mesh\n# scheme average\n"));
        assert_eq!(obj.lines().filter(|l| l.starts_with("v ")).count(), 4);
        assert!(obj.ends_with("f 1 2 3 4\n"));
    }

    #[test]
    fn files_round_trip() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("pts.csv");
        let pts = vec![Vec3::new(0.1, 1.0 / 3.0, -1e-300), Vec3::new(f64::MAX, 2.0, 5e-324)];
        write_polyline_csv(&pts, &path).unwrap();
        assert_eq!(read_points(&path).unwrap(), pts);

        let net = SurfaceNet::new(
            3,
            2,
            (0..6).map(|k| Vec3::new(k as f64 % 3.0, (k / 3) as f64, (k as f64).sqrt())).collect(),
            TOL,
        )
        .unwrap();
        let path = dir.path().join("net.json");
        write_net(&net, &path).unwrap();
        assert_eq!(read_net(&path, TOL).unwrap(), net);

        match read_points(dir.path().join("missing.csv")).unwrap_err() {
            ReadError::Io { .. } => {}
            e => panic!("{e:?}"),
        }
    }
}
