//! Numerical certificates for the continuity guarantees of curves and
//! surfaces, computed on concrete data.

use crate::curve::BlendedCurve;
use crate::error::Result;
use crate::surface::{PatchScheme, SurfaceNet};
use crate::vec3::Vec3;

/// Tolerances the certificates are judged against.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerances {
    /// Max tangent-direction angle across a curve junction, radians.
    pub junction_angle: f64,
    /// Node reproduction error, relative to `1 + |point|`.
    pub node: f64,
    /// Analytic vs finite-difference tangent, relative to `|tangent|`.
    pub tangent_fd: f64,
    /// Seam position mismatch and l/m disagreement on net lines, relative
    /// to the net scale.
    pub seam: f64,
    /// Max normal angle across a patch boundary, radians.
    pub normal_angle: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Tolerances { junction_angle: 1e-7, node: 1e-9, tangent_fd: 1e-5, seam: 1e-9, normal_angle: 1e-3 }
    }
}

/// Step used for finite-difference surface normals.
pub const NORMAL_STEP: f64 = 1e-4;

#[derive(Debug, Clone, PartialEq)]
pub struct CurveDiagnostics {
    /// Angle between incoming and outgoing tangents at each interior point.
    pub junction_angles: Vec<f64>,
    /// Largest distance between a parabola source and the segment endpoint
    /// it must reproduce, relative to `1 + |point|`.
    pub node_error: f64,
    /// Largest relative gap between analytic and central-difference tangents.
    pub tangent_fd_error: f64,
}

impl CurveDiagnostics {
    pub fn max_junction_angle(&self) -> f64 {
        self.junction_angles.iter().copied().fold(0.0, f64::max)
    }

    pub fn passes(&self, tol: &Tolerances) -> bool {
        self.max_junction_angle() <= tol.junction_angle
            && self.node_error <= tol.node
            && self.tangent_fd_error <= tol.tangent_fd
    }
}

pub fn diagnose_curve(curve: &BlendedCurve) -> Result<CurveDiagnostics> {
    let segs = curve.segments();
    let mut junction_angles = Vec::with_capacity(segs.len().saturating_sub(1));
    for pair in segs.windows(2) {
        let incoming = pair[0].tangent(pair[0].chord_len())?;
        let outgoing = pair[1].tangent(0.0)?;
        junction_angles.push(incoming.angle(outgoing));
    }

    let mut node_error: f64 = 0.0;
    let mut tangent_fd_error: f64 = 0.0;
    for seg in segs {
        let t0 = seg.chord_len();
        for src in seg.left().into_iter().chain(seg.right()) {
            let e0 = (src.eval(0.0) - seg.start()).norm() / (1.0 + seg.start().norm());
            let e1 = (src.eval(t0) - seg.end()).norm() / (1.0 + seg.end().norm());
            node_error = node_error.max(e0).max(e1);
        }
        let h = 1e-6 * t0;
        for u in [0.25, 0.5, 0.75] {
            let t = u * t0;
            let fd = (seg.eval(t + h)? - seg.eval(t - h)?) / (2.0 * h);
            let d = seg.tangent(t)?;
            tangent_fd_error = tangent_fd_error.max((fd - d).norm() / d.norm());
        }
    }
    Ok(CurveDiagnostics { junction_angles, node_error, tangent_fd_error })
}

/// Which pair of patches a boundary separates.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Boundary {
    /// Between patches `(i, j)` and `(i + 1, j)`, along net column `i + 1`.
    Column { i: usize, j: usize },
    /// Between patches `(i, j)` and `(i, j + 1)`, along net row `j + 1`.
    Row { i: usize, j: usize },
}

#[derive(Debug, Clone, PartialEq)]
pub struct BoundaryDiagnostics {
    pub boundary: Boundary,
    pub position_mismatch: f64,
    pub normal_angle: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SurfaceDiagnostics {
    pub scheme: PatchScheme,
    /// Characteristic size of the net used to scale position tolerances.
    pub scale: f64,
    pub boundaries: Vec<BoundaryDiagnostics>,
    /// Largest `|l - m|` over samples on net lines.
    pub network_line_gap: f64,
    /// Footprint sizes of the interior, edge and corner patches present.
    pub footprints: FootprintSizes,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct FootprintSizes {
    pub min: usize,
    pub max: usize,
    pub interior: Option<usize>,
    pub edge: Option<usize>,
    pub corner: usize,
}

impl SurfaceDiagnostics {
    pub fn max_position_mismatch(&self) -> f64 {
        self.boundaries.iter().map(|b| b.position_mismatch).fold(0.0, f64::max)
    }

    pub fn max_normal_angle(&self) -> f64 {
        self.boundaries.iter().map(|b| b.normal_angle).fold(0.0, f64::max)
    }

    pub fn passes(&self, tol: &Tolerances) -> bool {
        self.max_position_mismatch() <= tol.seam * self.scale
            && self.network_line_gap <= tol.seam * self.scale
            && self.max_normal_angle() <= tol.normal_angle
    }
}

/// Derivative along one local coordinate: central where the step fits in
/// `[0, 1]`, second-order one-sided at the patch edge.
fn partial(f: impl Fn(f64) -> Result<Vec3>, s: f64, h: f64) -> Result<Vec3> {
    if s - h < 0.0 {
        Ok((f(s)? * -3.0 + f(s + h)? * 4.0 - f(s + 2.0 * h)?) / (2.0 * h))
    } else if s + h > 1.0 {
        Ok((f(s)? * 3.0 - f(s - h)? * 4.0 + f(s - 2.0 * h)?) / (2.0 * h))
    } else {
        Ok((f(s + h)? - f(s - h)?) / (2.0 * h))
    }
}

/// Unit normal of patch `(i, j)` at `(x, y)` from finite differences with
/// step `h` in both local coordinates.
pub fn patch_normal(
    net: &SurfaceNet,
    i: usize,
    j: usize,
    x: f64,
    y: f64,
    scheme: PatchScheme,
    h: f64,
) -> Result<Option<Vec3>> {
    let dx = partial(|s| net.eval_patch(i, j, s, y, scheme), x, h)?;
    let dy = partial(|s| net.eval_patch(i, j, x, s, scheme), y, h)?;
    Ok(dx.cross(dy).normalized())
}

/// Normal angle between the two sides of a boundary at boundary fraction `s`.
pub fn boundary_normal_angle(
    net: &SurfaceNet,
    boundary: Boundary,
    s: f64,
    scheme: PatchScheme,
    h: f64,
) -> Result<f64> {
    let (a, b) = match boundary {
        Boundary::Column { i, j } => (
            patch_normal(net, i, j, 1.0, s, scheme, h)?,
            patch_normal(net, i + 1, j, 0.0, s, scheme, h)?,
        ),
        Boundary::Row { i, j } => (
            patch_normal(net, i, j, s, 1.0, scheme, h)?,
            patch_normal(net, i, j + 1, s, 0.0, scheme, h)?,
        ),
    };
    Ok(match (a, b) {
        (Some(a), Some(b)) => a.angle(b),
        _ => f64::INFINITY,
    })
}

/// Points on both sides of a boundary at fraction `s`.
pub fn boundary_points(net: &SurfaceNet, boundary: Boundary, s: f64, scheme: PatchScheme) -> Result<(Vec3, Vec3)> {
    Ok(match boundary {
        Boundary::Column { i, j } => {
            (net.eval_patch(i, j, 1.0, s, scheme)?, net.eval_patch(i + 1, j, 0.0, s, scheme)?)
        }
        Boundary::Row { i, j } => {
            (net.eval_patch(i, j, s, 1.0, scheme)?, net.eval_patch(i, j + 1, s, 0.0, scheme)?)
        }
    })
}

pub fn net_scale(net: &SurfaceNet) -> f64 {
    let mut lo = Vec3::new(f64::INFINITY, f64::INFINITY, f64::INFINITY);
    let mut hi = -lo;
    for p in net.points() {
        lo = Vec3::new(lo.x.min(p.x), lo.y.min(p.y), lo.z.min(p.z));
        hi = Vec3::new(hi.x.max(p.x), hi.y.max(p.y), hi.z.max(p.z));
    }
    (hi - lo).max_abs().max(1.0)
}

/// Certifies seams, net-line coincidence and tangent-plane continuity.
///
/// Every internal boundary is sampled at `samples + 1` evenly spaced
/// positions for seam checks and at `samples` midpoints for normals.
pub fn diagnose_surface(net: &SurfaceNet, scheme: PatchScheme, samples: usize) -> Result<SurfaceDiagnostics> {
    let samples = samples.max(1);
    let (p, q) = net.patch_counts();
    let mut boundaries = Vec::new();
    for j in 0..q {
        for i in 0..p {
            if i + 1 < p {
                boundaries.push(Boundary::Column { i, j });
            }
            if j + 1 < q {
                boundaries.push(Boundary::Row { i, j });
            }
        }
    }

    let mut out = Vec::with_capacity(boundaries.len());
    for boundary in boundaries {
        let mut position_mismatch: f64 = 0.0;
        for k in 0..=samples {
            let (a, b) = boundary_points(net, boundary, k as f64 / samples as f64, scheme)?;
            position_mismatch = position_mismatch.max((a - b).norm());
        }
        let mut normal_angle: f64 = 0.0;
        for k in 0..samples {
            let s = (k as f64 + 0.5) / samples as f64;
            normal_angle = normal_angle.max(boundary_normal_angle(net, boundary, s, scheme, NORMAL_STEP)?);
        }
        out.push(BoundaryDiagnostics { boundary, position_mismatch, normal_angle });
    }

    let mut network_line_gap: f64 = 0.0;
    for j in 0..q {
        for i in 0..p {
            for k in 0..=samples {
                let s = k as f64 / samples as f64;
                for (x, y) in [(s, 0.0), (s, 1.0), (0.0, s), (1.0, s)] {
                    let l = net.eval_patch(i, j, x, y, PatchScheme::LCurve)?;
                    let m = net.eval_patch(i, j, x, y, PatchScheme::MCurve)?;
                    network_line_gap = network_line_gap.max((l - m).norm());
                }
            }
        }
    }

    let mut footprints = FootprintSizes { min: usize::MAX, ..Default::default() };
    for j in 0..q {
        for i in 0..p {
            let n = net.patch_footprint(i, j)?.len();
            footprints.min = footprints.min.min(n);
            footprints.max = footprints.max.max(n);
            let border_i = i == 0 || i + 1 == p;
            let border_j = j == 0 || j + 1 == q;
            match (border_i, border_j) {
                (true, true) => footprints.corner = footprints.corner.max(n),
                (false, false) => footprints.interior = Some(n),
                _ => footprints.edge = Some(footprints.edge.map_or(n, |e| e.max(n))),
            }
        }
    }

    Ok(SurfaceDiagnostics {
        scheme,
        scale: net_scale(net),
        boundaries: out,
        network_line_gap,
        footprints,
    })
}
