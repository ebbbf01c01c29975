//! Plane parabolas through three points and the affine maps that carry a
//! segment's chord parameter onto a parabola's chord abscissa.
//!
//! A triple `D, E, F` defines the parabola
//!
//! ```text
//! p(r) = D + (r/d)(F - D) + alpha * r * (d - r) * (E - J)
//! ```
//!
//! where `d = |F - D|`, `J = D + x(F - D)` is the foot of the perpendicular
//! dropped from `E` onto the chord `DF`, and `alpha = 1 / (d^2 x (1 - x))`
//! makes the curve pass through `E` at `r = x d`. The axis of the parabola is
//! perpendicular to the chord `DF`.

use crate::error::{GeomError, Result};
use crate::vec3::Vec3;

/// Relative apex offset below which a triple is treated as collinear.
pub const DEFAULT_TOL_COLLINEAR: f64 = 1e-9;

/// Foot fractions within this distance of 0 or 1 are rejected for
/// non-collinear triples: `alpha` blows up as `x (1 - x) -> 0`.
pub const FOOT_EPSILON: f64 = 1e-6;

/// Fraction `x` along `DF` of the perpendicular foot of `e`.
pub fn foot_fraction(d: Vec3, e: Vec3, f: Vec3) -> Result<f64> {
    let chord = f - d;
    let len2 = chord.norm_squared();
    if len2 == 0.0 {
        return Err(GeomError::DegenerateChord { first: 0, second: 2 });
    }
    Ok((e - d).dot(chord) / len2)
}

/// A plane parabola through three points, or the straight chord when the
/// three points are collinear.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ParabolicArc {
    Parabola {
        start: Vec3,
        end: Vec3,
        /// `|end - start|`
        chord_len: f64,
        /// foot fraction of the middle point
        foot: f64,
        alpha: f64,
        /// middle point minus its perpendicular foot
        apex: Vec3,
    },
    Line {
        start: Vec3,
        end: Vec3,
        chord_len: f64,
    },
}

impl ParabolicArc {
    /// Builds the arc through `d`, `e`, `f` with axis perpendicular to `DF`.
    ///
    /// Returns the `Line` variant when the apex offset `|E - J|` is at most
    /// `tol_collinear * |F - D|`. Indices in errors are local to the triple
    /// (0 = `d`, 1 = `e`, 2 = `f`).
    pub fn through(d: Vec3, e: Vec3, f: Vec3, tol_collinear: f64) -> Result<Self> {
        for (index, p) in [d, e, f].into_iter().enumerate() {
            if !p.is_finite() {
                return Err(GeomError::NonFinite { index });
            }
        }
        if d == e {
            return Err(GeomError::DegenerateChord { first: 0, second: 1 });
        }
        if e == f {
            return Err(GeomError::DegenerateChord { first: 1, second: 2 });
        }
        let foot = foot_fraction(d, e, f)?;
        let chord = f - d;
        let chord_len = chord.norm();
        let apex = e - (d + chord * foot);
        if apex.norm() <= tol_collinear * chord_len {
            return Ok(ParabolicArc::Line { start: d, end: f, chord_len });
        }
        if foot <= FOOT_EPSILON || foot >= 1.0 - FOOT_EPSILON {
            return Err(GeomError::IllConditionedTriple { index: 0, foot });
        }
        let alpha = 1.0 / (chord_len * chord_len * foot * (1.0 - foot));
        Ok(ParabolicArc::Parabola { start: d, end: f, chord_len, foot, alpha, apex })
    }

    pub fn start(&self) -> Vec3 {
        match *self {
            ParabolicArc::Parabola { start, .. } | ParabolicArc::Line { start, .. } => start,
        }
    }

    pub fn end(&self) -> Vec3 {
        match *self {
            ParabolicArc::Parabola { end, .. } | ParabolicArc::Line { end, .. } => end,
        }
    }

    pub fn chord_len(&self) -> f64 {
        match *self {
            ParabolicArc::Parabola { chord_len, .. } | ParabolicArc::Line { chord_len, .. } => {
                chord_len
            }
        }
    }

    pub fn is_line(&self) -> bool {
        matches!(self, ParabolicArc::Line { .. })
    }

    /// Point at chord abscissa `r`. Any real `r` is accepted; the parabola
    /// extends past both chord endpoints.
    pub fn eval(&self, r: f64) -> Vec3 {
        match *self {
            ParabolicArc::Parabola { start, end, chord_len, alpha, apex, .. } => {
                start + (end - start) * (r / chord_len) + apex * (alpha * r * (chord_len - r))
            }
            ParabolicArc::Line { start, end, chord_len } => {
                start + (end - start) * (r / chord_len)
            }
        }
    }

    /// Derivative of [`eval`](Self::eval) with respect to `r`.
    pub fn derivative(&self, r: f64) -> Vec3 {
        match *self {
            ParabolicArc::Parabola { start, end, chord_len, alpha, apex, .. } => {
                (end - start) / chord_len + apex * (alpha * (chord_len - 2.0 * r))
            }
            ParabolicArc::Line { start, end, chord_len } => (end - start) / chord_len,
        }
    }
}

/// Affine relation `r(t) = r0 + k t` between a segment parameter `t` and a
/// parabola's chord abscissa `r`, obtained by dropping perpendiculars onto the
/// parabola's chord.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ChordMap {
    pub r0: f64,
    pub k: f64,
}

impl ChordMap {
    /// Map for `t` measured along `EF`, starting at `E`: `r = x d + t cos(theta)`.
    pub fn forward(d: Vec3, e: Vec3, f: Vec3) -> Result<Self> {
        let chord = f - d;
        let chord_len = chord.norm();
        let seg_len = (f - e).norm();
        if chord_len == 0.0 {
            return Err(GeomError::DegenerateChord { first: 0, second: 2 });
        }
        if seg_len == 0.0 {
            return Err(GeomError::DegenerateChord { first: 1, second: 2 });
        }
        Ok(ChordMap {
            r0: (e - d).dot(chord) / chord_len,
            k: (f - e).dot(chord) / (chord_len * seg_len),
        })
    }

    /// Map for `t` measured along `DE`, starting at `D`.
    pub fn backward(d: Vec3, e: Vec3, f: Vec3) -> Result<Self> {
        let chord = f - d;
        let chord_len = chord.norm();
        let seg_len = (e - d).norm();
        if chord_len == 0.0 {
            return Err(GeomError::DegenerateChord { first: 0, second: 2 });
        }
        if seg_len == 0.0 {
            return Err(GeomError::DegenerateChord { first: 0, second: 1 });
        }
        Ok(ChordMap { r0: 0.0, k: (e - d).dot(chord) / (chord_len * seg_len) })
    }

    #[inline]
    pub fn eval(&self, t: f64) -> f64 {
        self.r0 + self.k * t
    }
}
