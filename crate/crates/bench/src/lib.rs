//! Fixtures shared by the benchmarks.

use parablend::{SurfaceNet, Vec3, DEFAULT_TOL_COLLINEAR};

/// A helix sampled at `n` points, a curve with no collinear triples.
pub fn helix(n: usize) -> Vec<Vec3> {
    (0..n)
        .map(|k| {
            let t = k as f64 * 0.4;
            Vec3::new(t.cos(), t.sin(), 0.1 * t)
        })
        .collect()
}

/// A `size x size` grid over a gentle wave.
pub fn wave_net(size: usize) -> SurfaceNet {
    let mut pts = Vec::with_capacity(size * size);
    for j in 0..size {
        for i in 0..size {
            let (u, v) = (i as f64 * 0.25, j as f64 * 0.25);
            pts.push(Vec3::new(u, v, 0.3 * (1.3 * u).sin() * (0.7 * v).cos()));
        }
    }
    SurfaceNet::new(size, size, pts, DEFAULT_TOL_COLLINEAR).expect("valid net")
}
