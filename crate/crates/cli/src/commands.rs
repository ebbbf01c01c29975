use std::fmt;
use std::fs;
use std::io::Write as _;
use std::path::Path;

use parablend::diagnostics::{diagnose_curve, diagnose_surface, Tolerances};
use parablend::io::{self, ReadError};
use parablend::{BlendedCurve, GeomError, PatchScheme};

use crate::config::{CheckArgs, CurveArgs, SurfaceArgs};
use crate::report;

/// Process exit codes.
pub mod exit {
    pub const OK: i32 = 0;
    pub const IO: i32 = 1;
    pub const PARSE: i32 = 2;
    pub const GEOMETRY: i32 = 3;
    pub const CHECK_FAILED: i32 = 4;
}

#[derive(Debug)]
pub struct Failure {
    pub code: i32,
    pub message: String,
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.message)
    }
}

impl From<ReadError> for Failure {
    fn from(e: ReadError) -> Self {
        let code = match &e {
            ReadError::Io { .. } => exit::IO,
            ReadError::Parse { .. } => exit::PARSE,
            ReadError::Geometry(GeomError::DimensionMismatch { .. }) => exit::PARSE,
            ReadError::Geometry(_) => exit::GEOMETRY,
        };
        Failure { code, message: format!("{}: {e}", e.kind()) }
    }
}

impl From<GeomError> for Failure {
    fn from(e: GeomError) -> Self {
        Failure { code: exit::GEOMETRY, message: e.to_string() }
    }
}

fn emit(output: Option<&Path>, text: &str) -> Result<(), Failure> {
    let result = match output {
        Some(path) => fs::write(path, text),
        None => std::io::stdout().lock().write_all(text.as_bytes()),
    };
    result.map_err(|e| Failure {
        code: exit::IO,
        message: format!(
            "IoError: cannot write {}: {e}",
            output.map_or("standard output".into(), |p| p.display().to_string())
        ),
    })
}

pub fn cmd_curve(args: &CurveArgs) -> Result<i32, Failure> {
    let points = io::read_points(&args.common.input)?;
    let curve = BlendedCurve::new(points, args.common.tol_collinear)?;
    let samples = curve.sample(args.samples as usize)?;
    emit(args.common.output.as_deref(), &io::format_polyline_csv(&samples))?;
    Ok(exit::OK)
}

pub fn cmd_surface(args: &SurfaceArgs) -> Result<i32, Failure> {
    let net = io::read_net(&args.common.input, args.common.tol_collinear)?;
    let scheme = PatchScheme::from(args.scheme);
    let mesh = net.tessellate(args.resolution as usize, scheme)?;
    emit(args.common.output.as_deref(), &io::format_mesh_obj(&mesh, scheme))?;
    Ok(exit::OK)
}

pub fn cmd_check(args: &CheckArgs) -> Result<i32, Failure> {
    let path = &args.common.input;
    let text = fs::read_to_string(path).map_err(|source| {
        Failure::from(ReadError::Io { path: path.display().to_string(), source })
    })?;
    let tol = Tolerances::default();
    let tol_collinear = args.common.tol_collinear;

    let (report, pass) = match io::parse_net(&text, tol_collinear) {
        Ok(net) => {
            let diag = diagnose_surface(&net, args.scheme.into(), args.resolution as usize)?;
            (report::surface_report(&net, &diag, &tol, args.report), diag.passes(&tol))
        }
        Err(ReadError::Parse { .. }) => {
            let points = io::parse_points(&text).map_err(|e| Failure {
                code: exit::PARSE,
                message: format!("ParseError: input is neither a net nor a points file ({e})"),
            })?;
            let curve = BlendedCurve::new(points, tol_collinear)?;
            let diag = diagnose_curve(&curve)?;
            (report::curve_report(&curve, &diag, &tol, args.report), diag.passes(&tol))
        }
        Err(e) => return Err(e.into()),
    };
    emit(args.common.output.as_deref(), &report)?;
    Ok(if pass { exit::OK } else { exit::CHECK_FAILED })
}
