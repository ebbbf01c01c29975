//! Smooth interpolation of space curves and surfaces by parabolic blending.
//!
//! Each interval of a point sequence is covered by a linear blend of the two
//! plane parabolas through the neighboring point triples. The result passes
//! through every point, is cubic within each interval, and has a continuous
//! tangent direction at every junction. Surfaces through rectangular nets
//! apply the same construction along both families of net lines.
//!
//! ```
//! use parablend::{BlendedCurve, Vec3, DEFAULT_TOL_COLLINEAR};
//!
//! let points = vec![
//!     Vec3::new(0.0, 0.0, 0.0),
//!     Vec3::new(1.0, 1.0, 0.0),
//!     Vec3::new(2.0, 0.0, 0.0),
//!     Vec3::new(3.0, 1.0, 0.0),
//! ];
//! let curve = BlendedCurve::new(points, DEFAULT_TOL_COLLINEAR).unwrap();
//! let mid = curve.eval(1, 0.5).unwrap();
//! assert!((mid - Vec3::new(1.5, 0.5, 0.0)).norm() < 1e-12);
//! ```

pub mod arc;
pub mod curve;
pub mod diagnostics;
pub mod error;
pub mod io;
pub mod surface;
mod vec3;

pub use arc::{foot_fraction, ChordMap, ParabolicArc, DEFAULT_TOL_COLLINEAR, FOOT_EPSILON};
pub use curve::{BlendSource, BlendedCurve, CurveSegment};
pub use error::{GeomError, Result};
pub use surface::{Mesh, PatchScheme, SurfaceNet};
pub use vec3::Vec3;
