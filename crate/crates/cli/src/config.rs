use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use parablend::{PatchScheme, DEFAULT_TOL_COLLINEAR};

#[derive(Debug, Parser)]
#[command(name = "parablend", version, about = "Interpolate curves and surfaces by parabolic blending")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Sample the curve through a points file into a CSV polyline.
    Curve(CurveArgs),
    /// Tessellate the surface through a net file into an OBJ mesh.
    Surface(SurfaceArgs),
    /// Certify tangent continuity of the curve or surface through a file.
    Check(CheckArgs),
}

#[derive(Debug, Args)]
pub struct Common {
    /// Points file (x,y,z per line) or net file (JSON).
    #[arg(long)]
    pub input: PathBuf,

    /// Destination file; standard output when omitted.
    #[arg(long)]
    pub output: Option<PathBuf>,

    /// Relative apex offset below which three points count as collinear.
    #[arg(long = "tol-collinear", default_value_t = DEFAULT_TOL_COLLINEAR, value_parser = parse_tolerance)]
    pub tol_collinear: f64,
}

#[derive(Debug, Args)]
pub struct CurveArgs {
    #[command(flatten)]
    pub common: Common,

    /// Samples per segment.
    #[arg(long, default_value_t = 16, value_parser = clap::value_parser!(u32).range(1..))]
    pub samples: u32,
}

#[derive(Debug, Args)]
pub struct SurfaceArgs {
    #[command(flatten)]
    pub common: Common,

    /// Quads per patch edge.
    #[arg(long, default_value_t = 8, value_parser = clap::value_parser!(u32).range(1..))]
    pub resolution: u32,

    #[arg(long, value_enum, default_value_t = SchemeArg::Average)]
    pub scheme: SchemeArg,
}

#[derive(Debug, Args)]
pub struct CheckArgs {
    #[command(flatten)]
    pub common: Common,

    /// Samples along each patch boundary (surfaces only).
    #[arg(long, default_value_t = 8, value_parser = clap::value_parser!(u32).range(1..))]
    pub resolution: u32,

    /// Patch scheme to certify (surfaces only).
    #[arg(long, value_enum, default_value_t = SchemeArg::Average)]
    pub scheme: SchemeArg,

    #[arg(long, value_enum, default_value_t = ReportFormat::Text)]
    pub report: ReportFormat,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SchemeArg {
    L,
    M,
    Average,
}

impl From<SchemeArg> for PatchScheme {
    fn from(s: SchemeArg) -> Self {
        match s {
            SchemeArg::L => PatchScheme::LCurve,
            SchemeArg::M => PatchScheme::MCurve,
            SchemeArg::Average => PatchScheme::Average,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ReportFormat {
    Text,
    Kv,
}

fn parse_tolerance(s: &str) -> Result<f64, String> {
    let v: f64 = s.parse().map_err(|_| format!("`{s}` is not a number"))?;
    if v > 0.0 && v < 1e-2 {
        Ok(v)
    } else {
        Err(format!("tolerance must lie in (0, 0.01), got {v}"))
    }
}
