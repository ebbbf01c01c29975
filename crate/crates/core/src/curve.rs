//! Space curves through ordered point sequences.
//!
//! Each interval `E -> F` of a sequence `..., D, E, F, G, ...` is a blend
//!
//! ```text
//! c(t) = (1 - t/t0) p(r(t)) + (t/t0) q(s(t)),    0 <= t <= t0 = |F - E|
//! ```
//!
//! of the parabola `p` through `D, E, F` and the parabola `q` through
//! `E, F, G`. Adjacent intervals share a parabola, and at the shared node the
//! blend's tangent is the tangent of that parabola, so the curve has a
//! continuous tangent direction everywhere.
//!
//! The first and last intervals have only one neighboring triple and follow
//! that single parabola. For the first interval `t` is measured from the
//! first point along the chord of the interval (the `D -> E` form of
//! [`ChordMap::backward`]); for the last interval it is measured from the
//! interval start using [`ChordMap::forward`]. A three-point curve therefore
//! runs along one parabola, and a two-point curve is its chord.

use crate::arc::{ChordMap, ParabolicArc};
use crate::error::{GeomError, Result};
use crate::vec3::Vec3;

/// A parabola composed with the map from segment parameter to its abscissa.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BlendSource {
    pub arc: ParabolicArc,
    pub map: ChordMap,
}

impl BlendSource {
    #[inline]
    pub fn eval(&self, t: f64) -> Vec3 {
        self.arc.eval(self.map.eval(t))
    }

    /// Derivative with respect to the segment parameter `t`.
    #[inline]
    pub fn derivative(&self, t: f64) -> Vec3 {
        self.arc.derivative(self.map.eval(t)) * self.map.k
    }
}

/// The interpolating curve between two consecutive points.
///
/// `left` is the parabola through the predecessor triple, `right` the one
/// through the successor triple. Interior segments carry both; end segments
/// carry exactly one and follow it with weight 1.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CurveSegment {
    start: Vec3,
    end: Vec3,
    chord_len: f64,
    left: Option<BlendSource>,
    right: Option<BlendSource>,
}

impl CurveSegment {
    pub fn start(&self) -> Vec3 {
        self.start
    }

    pub fn end(&self) -> Vec3 {
        self.end
    }

    /// Chord length `t0`; the segment parameter runs over `[0, t0]`.
    pub fn chord_len(&self) -> f64 {
        self.chord_len
    }

    pub fn left(&self) -> Option<&BlendSource> {
        self.left.as_ref()
    }

    pub fn right(&self) -> Option<&BlendSource> {
        self.right.as_ref()
    }

    /// True when the segment blends two parabolas.
    pub fn is_blended(&self) -> bool {
        self.left.is_some() && self.right.is_some()
    }

    fn check(&self, t: f64) -> Result<()> {
        if (0.0..=self.chord_len).contains(&t) {
            Ok(())
        } else {
            Err(GeomError::ParameterOutOfRange { value: t, max: self.chord_len })
        }
    }

    fn single(&self) -> &BlendSource {
        self.left.as_ref().or(self.right.as_ref()).expect("segment without a source")
    }

    /// Point at chord parameter `t` in `[0, t0]`. The endpoints are returned
    /// exactly.
    pub fn eval(&self, t: f64) -> Result<Vec3> {
        self.check(t)?;
        if t == 0.0 {
            return Ok(self.start);
        }
        if t == self.chord_len {
            return Ok(self.end);
        }
        Ok(self.eval_unchecked(t))
    }

    fn eval_unchecked(&self, t: f64) -> Vec3 {
        match (&self.left, &self.right) {
            (Some(p), Some(q)) => {
                let w = t / self.chord_len;
                p.eval(t) * (1.0 - w) + q.eval(t) * w
            }
            _ => self.single().eval(t),
        }
    }

    /// Point at normalized parameter `u = t / t0` in `[0, 1]`.
    pub fn eval_at(&self, u: f64) -> Result<Vec3> {
        if !(0.0..=1.0).contains(&u) {
            return Err(GeomError::ParameterOutOfRange { value: u, max: 1.0 });
        }
        if u == 1.0 {
            return Ok(self.end);
        }
        self.eval(u * self.chord_len)
    }

    /// Derivative `dc/dt` at chord parameter `t`.
    pub fn tangent(&self, t: f64) -> Result<Vec3> {
        self.check(t)?;
        Ok(match (&self.left, &self.right) {
            (Some(p), Some(q)) => {
                let w = t / self.chord_len;
                let (dp, dq) = (p.derivative(t), q.derivative(t));
                dp + (dq - dp) * w + (q.eval(t) - p.eval(t)) / self.chord_len
            }
            _ => self.single().derivative(t),
        })
    }

    /// Derivative `dc/dt` at normalized parameter `u`.
    pub fn tangent_at(&self, u: f64) -> Result<Vec3> {
        if !(0.0..=1.0).contains(&u) {
            return Err(GeomError::ParameterOutOfRange { value: u, max: 1.0 });
        }
        let t = if u == 1.0 { self.chord_len } else { u * self.chord_len };
        self.tangent(t)
    }
}

/// Builds segment `index` of the curve through `points`.
///
/// Only the up-to-four points around the segment are read, so the result is
/// identical to segment `index` of [`BlendedCurve::new`] on the same points.
/// Consecutive points must already be known to be distinct and finite.
pub(crate) fn build_segment(points: &[Vec3], index: usize, tol_collinear: f64) -> Result<CurveSegment> {
    let n = points.len();
    let (e, f) = (points[index], points[index + 1]);
    let chord_len = (f - e).norm();

    if n == 2 {
        let line = ParabolicArc::Line { start: e, end: f, chord_len };
        let source = BlendSource { arc: line, map: ChordMap { r0: 0.0, k: 1.0 } };
        return Ok(CurveSegment { start: e, end: f, chord_len, left: None, right: Some(source) });
    }

    let left = if index >= 1 {
        let d = points[index - 1];
        let arc = ParabolicArc::through(d, e, f, tol_collinear).map_err(|e| e.offset(index - 1))?;
        let map = ChordMap::forward(d, e, f).map_err(|e| e.offset(index - 1))?;
        Some(BlendSource { arc, map })
    } else {
        None
    };

    let right = if index + 2 < n {
        let g = points[index + 2];
        let arc = ParabolicArc::through(e, f, g, tol_collinear).map_err(|e| e.offset(index))?;
        let map = ChordMap::backward(e, f, g).map_err(|e| e.offset(index))?;
        Some(BlendSource { arc, map })
    } else {
        None
    };

    Ok(CurveSegment { start: e, end: f, chord_len, left, right })
}

pub(crate) fn validate_points(points: &[Vec3]) -> Result<()> {
    if points.len() < 2 {
        return Err(GeomError::InsufficientPoints { count: points.len() });
    }
    if let Some(index) = points.iter().position(|p| !p.is_finite()) {
        return Err(GeomError::NonFinite { index });
    }
    if let Some(first) = points.windows(2).position(|w| w[0] == w[1]) {
        return Err(GeomError::DegenerateChord { first, second: first + 1 });
    }
    Ok(())
}

/// An interpolating curve through an ordered sequence of at least two points.
#[derive(Debug, Clone, PartialEq)]
pub struct BlendedCurve {
    points: Vec<Vec3>,
    segments: Vec<CurveSegment>,
}

impl BlendedCurve {
    /// Builds the curve. `tol_collinear` is the relative apex offset below
    /// which a triple is treated as a straight line
    /// ([`DEFAULT_TOL_COLLINEAR`](crate::arc::DEFAULT_TOL_COLLINEAR) is the
    /// usual choice).
    pub fn new(points: Vec<Vec3>, tol_collinear: f64) -> Result<Self> {
        validate_points(&points)?;
        let segments = (0..points.len() - 1)
            .map(|i| build_segment(&points, i, tol_collinear))
            .collect::<Result<Vec<_>>>()?;
        Ok(BlendedCurve { points, segments })
    }

    pub fn points(&self) -> &[Vec3] {
        &self.points
    }

    pub fn segments(&self) -> &[CurveSegment] {
        &self.segments
    }

    pub fn segment(&self, index: usize) -> Option<&CurveSegment> {
        self.segments.get(index)
    }

    /// Point on segment `index` at normalized parameter `u`.
    pub fn eval(&self, index: usize, u: f64) -> Result<Vec3> {
        let seg = self.segments.get(index).ok_or(GeomError::ParameterOutOfRange {
            value: index as f64,
            max: (self.segments.len() - 1) as f64,
        })?;
        seg.eval_at(u)
    }

    /// Samples every segment at `samples_per_segment` equal steps of its chord
    /// parameter. Junction points appear once, so the result holds
    /// `(n - 1) * samples_per_segment + 1` points.
    pub fn sample(&self, samples_per_segment: usize) -> Result<Vec<Vec3>> {
        if samples_per_segment == 0 {
            return Err(GeomError::InvalidCount { what: "samples per segment", value: 0 });
        }
        let mut out = Vec::with_capacity(self.segments.len() * samples_per_segment + 1);
        out.push(self.points[0]);
        for seg in &self.segments {
            for j in 1..=samples_per_segment {
                out.push(seg.eval_at(j as f64 / samples_per_segment as f64)?);
            }
        }
        Ok(out)
    }
}
