#![allow(dead_code)]

use nalgebra::{DMatrix, DVector, Rotation3, Unit, Vector3};
use parablend::{foot_fraction, SurfaceNet, Vec3, DEFAULT_TOL_COLLINEAR};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn uniform_point(rng: &mut impl Rng) -> Vec3 {
    Vec3::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0))
}

/// Points uniform in [-1, 1]^3, drawn one at a time and rejected when they
/// land closer than 0.1 to the previous point or make an ill-conditioned
/// triple with the previous two.
pub fn random_curve_points(rng: &mut impl Rng, n: usize) -> Vec<Vec3> {
    let mut pts: Vec<Vec3> = vec![uniform_point(rng)];
    while pts.len() < n {
        let c = uniform_point(rng);
        let k = pts.len();
        if c.distance(pts[k - 1]) < 0.1 {
            continue;
        }
        if k >= 2 {
            let (d, e) = (pts[k - 2], pts[k - 1]);
            if d.distance(c) < 0.1 {
                continue;
            }
            let x = foot_fraction(d, e, c).unwrap();
            if !(0.05..0.95).contains(&x) {
                continue;
            }
        }
        pts.push(c);
    }
    pts
}

/// A triple whose middle point projects inside (0.05, 0.95) of the outer chord.
pub fn random_triple(rng: &mut impl Rng) -> (Vec3, Vec3, Vec3) {
    loop {
        let d = uniform_point(rng);
        let f = uniform_point(rng);
        if d.distance(f) < 0.1 {
            continue;
        }
        let x = rng.gen_range(0.05..0.95);
        let off = uniform_point(rng);
        let chord = f - d;
        let perp = off - chord * (off.dot(chord) / chord.norm_squared());
        if perp.norm() < 1e-3 {
            continue;
        }
        return (d, d + chord * x + perp, f);
    }
}

/// Perturbed regular grid with random heights.
pub fn random_net(rng: &mut impl Rng, cols: usize, rows: usize) -> SurfaceNet {
    let mut pts = Vec::with_capacity(cols * rows);
    for j in 0..rows {
        for i in 0..cols {
            pts.push(Vec3::new(
                i as f64 + rng.gen_range(-0.2..0.2),
                j as f64 + rng.gen_range(-0.2..0.2),
                rng.gen_range(-0.5..0.5),
            ));
        }
    }
    SurfaceNet::new(cols, rows, pts, DEFAULT_TOL_COLLINEAR).unwrap()
}

/// Samples z = sum of three low-frequency sines on a uniform grid of step 0.25.
pub fn smooth_net(rng: &mut impl Rng, cols: usize, rows: usize) -> SurfaceNet {
    let waves: Vec<[f64; 4]> = (0..3)
        .map(|_| {
            [
                rng.gen_range(-0.5..0.5),
                rng.gen_range(-1.5..1.5),
                rng.gen_range(-1.5..1.5),
                rng.gen_range(0.0..std::f64::consts::TAU),
            ]
        })
        .collect();
    let mut pts = Vec::with_capacity(cols * rows);
    for j in 0..rows {
        for i in 0..cols {
            let (u, v) = (0.25 * i as f64, 0.25 * j as f64);
            let z = waves.iter().map(|[a, b, c, p]| a * (b * u + c * v + p).sin()).sum();
            pts.push(Vec3::new(u, v, z));
        }
    }
    SurfaceNet::new(cols, rows, pts, DEFAULT_TOL_COLLINEAR).unwrap()
}

/// A rigid motion plus uniform scale.
#[derive(Debug, Clone, Copy)]
pub struct Similarity {
    pub rotation: Rotation3<f64>,
    pub translation: Vec3,
    pub scale: f64,
}

impl Similarity {
    pub fn random(rng: &mut impl Rng) -> Self {
        let axis = loop {
            let a = uniform_point(rng);
            if a.norm() > 0.1 {
                break a;
            }
        };
        let axis = Unit::new_normalize(Vector3::new(axis.x, axis.y, axis.z));
        let rotation = Rotation3::from_axis_angle(&axis, rng.gen_range(0.0..std::f64::consts::TAU));
        let translation = uniform_point(rng) * 5.0;
        Similarity { rotation, translation, scale: rng.gen_range(0.2..5.0) }
    }

    pub fn apply(&self, p: Vec3) -> Vec3 {
        let r = self.rotation * Vector3::new(p.x, p.y, p.z);
        Vec3::new(r.x, r.y, r.z) * self.scale + self.translation
    }
}

/// Max absolute residual of a least-squares polynomial fit of `degree` to
/// samples `(s, v)` with `s` in [0, 1].
pub fn poly_fit_residual(s: &[f64], v: &[f64], degree: usize) -> f64 {
    let a = DMatrix::from_fn(s.len(), degree + 1, |r, c| (2.0 * s[r] - 1.0).powi(c as i32));
    let b = DVector::from_column_slice(v);
    let coef = a.clone().svd(true, true).solve(&b, 1e-14).unwrap();
    (a * coef - b).amax()
}
