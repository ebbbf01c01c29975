//! Surfaces through rectangular nets of points.
//!
//! A net of `cols x rows` points `A(i, j)` (column `i` along a row, row `j`)
//! defines `(cols - 1) x (rows - 1)` patches. Patch `(i, j)` spans net points
//! `(i..=i+1, j..=j+1)` with local coordinates `x` along rows and `y` along
//! columns, both in `[0, 1]`.
//!
//! Inside a patch, holding `x` fixed picks one point on each neighboring row
//! curve; the blended curve through those points gives the iso-curve `l`,
//! evaluated at `y`. Holding `y` fixed gives `m` the same way across the
//! column curves, evaluated at `x`. The surface point is `l(y)`, `m(x)` or
//! their average. All three agree on the net lines.
//!
//! Patches on the border of the net see only three rows (or columns), so
//! their iso-curves follow a single parabola; a direction with only two net
//! lines falls back to straight chords. An interior patch depends on the
//! sixteen points of the surrounding 4x4 block.

use std::collections::BTreeSet;

use rayon::prelude::*;

use crate::curve::{build_segment, validate_points, CurveSegment};
use crate::error::{GeomError, Result};
use crate::vec3::Vec3;

/// How a patch point is derived from the two families of iso-curves.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum PatchScheme {
    /// `z(x, y) = l(y)`
    LCurve,
    /// `z(x, y) = m(x)`
    MCurve,
    /// `z(x, y) = (l(y) + m(x)) / 2`
    #[default]
    Average,
}

impl PatchScheme {
    pub const ALL: [PatchScheme; 3] = [PatchScheme::LCurve, PatchScheme::MCurve, PatchScheme::Average];

    pub fn name(self) -> &'static str {
        match self {
            PatchScheme::LCurve => "l",
            PatchScheme::MCurve => "m",
            PatchScheme::Average => "average",
        }
    }
}

impl std::str::FromStr for PatchScheme {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "l" => Ok(PatchScheme::LCurve),
            "m" => Ok(PatchScheme::MCurve),
            "average" => Ok(PatchScheme::Average),
            other => Err(format!("unknown scheme `{other}` (expected l, m or average)")),
        }
    }
}

impl std::fmt::Display for PatchScheme {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

/// Quad mesh. Faces hold 0-based vertex indices ordered counterclockwise
/// when viewed from the side of `dz/dx x dz/dy`.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct Mesh {
    pub vertices: Vec<Vec3>,
    pub faces: Vec<[usize; 4]>,
}

/// Inclusive index range of the (at most four) net lines that influence
/// segment `seg` of a line with `n` points.
fn window(n: usize, seg: usize) -> (usize, usize) {
    (seg.saturating_sub(1), (seg + 2).min(n - 1))
}

/// A rectangular net of points, stored row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct SurfaceNet {
    cols: usize,
    rows: usize,
    points: Vec<Vec3>,
    tol_collinear: f64,
}

impl SurfaceNet {
    /// Validates and wraps a row-major point list: point `(i, j)` lives at
    /// `points[j * cols + i]`.
    pub fn new(cols: usize, rows: usize, points: Vec<Vec3>, tol_collinear: f64) -> Result<Self> {
        if cols < 2 || rows < 2 {
            return Err(GeomError::NetTooNarrow { cols, rows });
        }
        if points.len() != cols * rows {
            return Err(GeomError::DimensionMismatch { cols, rows, got: points.len() });
        }
        let net = SurfaceNet { cols, rows, points, tol_collinear };
        for j in 0..rows {
            for i in 0..cols {
                if !net.get(i, j).is_finite() {
                    return Err(GeomError::NonFinite { index: j * cols + i });
                }
                if i + 1 < cols && net.get(i, j) == net.get(i + 1, j) {
                    return Err(GeomError::NetDegenerateChord { a: (i, j), b: (i + 1, j) });
                }
                if j + 1 < rows && net.get(i, j) == net.get(i, j + 1) {
                    return Err(GeomError::NetDegenerateChord { a: (i, j), b: (i, j + 1) });
                }
            }
        }
        Ok(net)
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    /// Number of patches along rows and along columns.
    pub fn patch_counts(&self) -> (usize, usize) {
        (self.cols - 1, self.rows - 1)
    }

    pub fn tol_collinear(&self) -> f64 {
        self.tol_collinear
    }

    pub fn points(&self) -> &[Vec3] {
        &self.points
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> Vec3 {
        self.points[j * self.cols + i]
    }

    /// Same net with rows and columns swapped.
    pub fn transposed(&self) -> SurfaceNet {
        let mut points = Vec::with_capacity(self.points.len());
        for i in 0..self.cols {
            for j in 0..self.rows {
                points.push(self.get(i, j));
            }
        }
        SurfaceNet { cols: self.rows, rows: self.cols, points, tol_collinear: self.tol_collinear }
    }

    /// Returns a copy with point `(i, j)` replaced, without revalidating.
    pub fn with_point(&self, i: usize, j: usize, p: Vec3) -> SurfaceNet {
        let mut net = self.clone();
        net.points[j * self.cols + i] = p;
        net
    }

    fn row_segment(&self, row: usize, seg: usize) -> Result<CurveSegment> {
        let (lo, hi) = window(self.cols, seg);
        let pts: Vec<Vec3> = (lo..=hi).map(|i| self.get(i, row)).collect();
        build_segment(&pts, seg - lo, self.tol_collinear).map_err(|e| e.offset(lo).in_row(row))
    }

    fn column_segment(&self, col: usize, seg: usize) -> Result<CurveSegment> {
        let (lo, hi) = window(self.rows, seg);
        let pts: Vec<Vec3> = (lo..=hi).map(|j| self.get(col, j)).collect();
        build_segment(&pts, seg - lo, self.tol_collinear).map_err(|e| e.offset(lo).in_column(col))
    }

    /// Point at fraction `x` of segment `seg` of the curve along row `row`.
    pub fn row_point_at(&self, row: usize, seg: usize, x: f64) -> Result<Vec3> {
        if row >= self.rows || seg + 1 >= self.cols {
            return Err(self.out_of_range(seg, row));
        }
        self.row_segment(row, seg)?.eval_at(x).map_err(|e| e.in_row(row))
    }

    /// Point at fraction `y` of segment `seg` of the curve along column `col`.
    pub fn column_point_at(&self, col: usize, seg: usize, y: f64) -> Result<Vec3> {
        if col >= self.cols || seg + 1 >= self.rows {
            return Err(self.out_of_range(col, seg));
        }
        self.column_segment(col, seg)?.eval_at(y).map_err(|e| e.in_column(col))
    }

    fn out_of_range(&self, i: usize, j: usize) -> GeomError {
        let (p, q) = self.patch_counts();
        GeomError::PatchOutOfRange { i, j, p, q }
    }

    fn check_patch(&self, i: usize, j: usize) -> Result<()> {
        let (p, q) = self.patch_counts();
        if i < p && j < q {
            Ok(())
        } else {
            Err(GeomError::PatchOutOfRange { i, j, p, q })
        }
    }

    /// Iso-curve `l` of patch `(patch_i, patch_j)` at constant `x`: the
    /// blended segment from row `patch_j` to row `patch_j + 1`.
    pub fn iso_curve_l(&self, patch_i: usize, patch_j: usize, x: f64) -> Result<CurveSegment> {
        self.check_patch(patch_i, patch_j)?;
        let (lo, hi) = window(self.rows, patch_j);
        let pts = (lo..=hi)
            .map(|j| self.row_point_at(j, patch_i, x))
            .collect::<Result<Vec<_>>>()?;
        validate_points(&pts).map_err(|e| e.offset(lo))?;
        build_segment(&pts, patch_j - lo, self.tol_collinear).map_err(|e| e.offset(lo))
    }

    /// Iso-curve `m` of patch `(patch_i, patch_j)` at constant `y`: the
    /// blended segment from column `patch_i` to column `patch_i + 1`.
    pub fn iso_curve_m(&self, patch_i: usize, patch_j: usize, y: f64) -> Result<CurveSegment> {
        self.check_patch(patch_i, patch_j)?;
        let (lo, hi) = window(self.cols, patch_i);
        let pts = (lo..=hi)
            .map(|i| self.column_point_at(i, patch_j, y))
            .collect::<Result<Vec<_>>>()?;
        validate_points(&pts).map_err(|e| e.offset(lo))?;
        build_segment(&pts, patch_i - lo, self.tol_collinear).map_err(|e| e.offset(lo))
    }

    /// Surface point of patch `(patch_i, patch_j)` at local `(x, y)`.
    pub fn eval_patch(
        &self,
        patch_i: usize,
        patch_j: usize,
        x: f64,
        y: f64,
        scheme: PatchScheme,
    ) -> Result<Vec3> {
        let l = || self.iso_curve_l(patch_i, patch_j, x)?.eval_at(y);
        let m = || self.iso_curve_m(patch_i, patch_j, y)?.eval_at(x);
        let p = match scheme {
            PatchScheme::LCurve => l(),
            PatchScheme::MCurve => m(),
            PatchScheme::Average => l().and_then(|l| Ok(l * 0.5 + m()? * 0.5)),
        };
        p.map_err(|e| e.in_patch(patch_i, patch_j))
    }

    /// Net indices `(i, j)` whose coordinates can influence patch
    /// `(patch_i, patch_j)`.
    pub fn patch_footprint(&self, patch_i: usize, patch_j: usize) -> Result<BTreeSet<(usize, usize)>> {
        self.check_patch(patch_i, patch_j)?;
        let (i_lo, i_hi) = window(self.cols, patch_i);
        let (j_lo, j_hi) = window(self.rows, patch_j);
        Ok((j_lo..=j_hi)
            .flat_map(|j| (i_lo..=i_hi).map(move |i| (i, j)))
            .collect())
    }

    /// Samples every patch on a `(resolution + 1)^2` grid and stitches the
    /// samples into one quad mesh.
    ///
    /// Each vertex on a shared patch edge is evaluated once, by the patch
    /// with the larger index, so seams are exact. The mesh holds
    /// `(p * resolution + 1) * (q * resolution + 1)` vertices, row-major.
    pub fn tessellate(&self, resolution: usize, scheme: PatchScheme) -> Result<Mesh> {
        if resolution == 0 {
            return Err(GeomError::InvalidCount { what: "resolution", value: 0 });
        }
        let (p, q) = self.patch_counts();
        let (nu, nv) = (p * resolution + 1, q * resolution + 1);
        let locate = |k: usize, patches: usize| {
            let patch = (k / resolution).min(patches - 1);
            (patch, (k - patch * resolution) as f64 / resolution as f64)
        };

        let rows = (0..nv)
            .into_par_iter()
            .map(|jv| {
                let (pj, y) = locate(jv, q);
                (0..nu)
                    .map(|iv| {
                        let (pi, x) = locate(iv, p);
                        self.eval_patch(pi, pj, x, y, scheme)
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        let vertices: Vec<Vec3> = rows.into_iter().flatten().collect();

        let mut faces = Vec::with_capacity((nu - 1) * (nv - 1));
        for jv in 0..nv - 1 {
            for iv in 0..nu - 1 {
                let a = jv * nu + iv;
                faces.push([a, a + 1, a + 1 + nu, a + nu]);
            }
        }
        Ok(Mesh { vertices, faces })
    }
}
