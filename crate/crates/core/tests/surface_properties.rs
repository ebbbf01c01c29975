#![allow(clippy::excessive_precision)] // goldens keep the oracle's digits

mod common;

use common::*;
use parablend::diagnostics::{boundary_normal_angle, boundary_points, Boundary, NORMAL_STEP};
use parablend::{BlendedCurve, PatchScheme, SurfaceNet, Vec3, DEFAULT_TOL_COLLINEAR as TOL};
use proptest::prelude::*;
use rand::Rng;

/// Patch evaluation written against the curve API only: full row and column
/// curves are built, then the iso-curves through their samples.
fn oracle_patch(net: &SurfaceNet, pi: usize, pj: usize, x: f64, y: f64) -> (Vec3, Vec3) {
    let (cols, rows) = (net.cols(), net.rows());
    let row_curve = |j: usize| BlendedCurve::new((0..cols).map(|i| net.get(i, j)).collect(), TOL).unwrap();
    let col_curve = |i: usize| BlendedCurve::new((0..rows).map(|j| net.get(i, j)).collect(), TOL).unwrap();
    let around = |k: usize, n: usize| (k.saturating_sub(1)..=(k + 2).min(n - 1)).collect::<Vec<_>>();

    let js = around(pj, rows);
    let l_pts: Vec<Vec3> = js.iter().map(|&j| row_curve(j).eval(pi, x).unwrap()).collect();
    let l = BlendedCurve::new(l_pts, TOL).unwrap().eval(pj - js[0], y).unwrap();

    let is = around(pi, cols);
    let m_pts: Vec<Vec3> = is.iter().map(|&i| col_curve(i).eval(pj, y).unwrap()).collect();
    let m = BlendedCurve::new(m_pts, TOL).unwrap().eval(pi - is[0], x).unwrap();
    (l, m)
}

fn bump() -> SurfaceNet {
    let pts = (0..16)
        .map(|k| {
            let (i, j) = (k % 4, k / 4);
            Vec3::new(i as f64, j as f64, if (i, j) == (2, 2) { 1.0 } else { 0.0 })
        })
        .collect();
    SurfaceNet::new(4, 4, pts, TOL).unwrap()
}

#[test]
fn bump_net_agrees_with_curve_composition_and_golden() {
    let net = bump();
    let (l, m) = oracle_patch(&net, 1, 1, 0.5, 0.5);
    // From tests/oracle/golden.py.
    let golden = Vec3::new(1.5155479643041500272, 1.5155479643041500272, 0.30694772190960246869);
    assert!(((l + m) * 0.5 - golden).max_abs() < 1e-14);
    let avg = net.eval_patch(1, 1, 0.5, 0.5, PatchScheme::Average).unwrap();
    assert!((avg - golden).max_abs() < 1e-14);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn patches_match_the_composition_oracle(seed in any::<u64>(), x in 0.0f64..1.0, y in 0.0f64..1.0) {
        let mut rng = rng(seed);
        let net = random_net(&mut rng, 5, 6);
        let (pi, pj) = (rng.gen_range(0..4), rng.gen_range(0..5));
        let (l, m) = oracle_patch(&net, pi, pj, x, y);
        prop_assert_eq!(net.eval_patch(pi, pj, x, y, PatchScheme::LCurve).unwrap(), l);
        prop_assert_eq!(net.eval_patch(pi, pj, x, y, PatchScheme::MCurve).unwrap(), m);
    }

    #[test]
    fn schemes_coincide_on_network_lines(seed in any::<u64>(), s in 0.0f64..1.0) {
        let mut rng = rng(seed);
        let net = random_net(&mut rng, 5, 5);
        for pj in 0..4 {
            for pi in 0..4 {
                for (x, y) in [(s, 0.0), (s, 1.0), (0.0, s), (1.0, s)] {
                    let l = net.eval_patch(pi, pj, x, y, PatchScheme::LCurve).unwrap();
                    let m = net.eval_patch(pi, pj, x, y, PatchScheme::MCurve).unwrap();
                    prop_assert!((l - m).norm() <= 1e-9 * 5.0);
                }
            }
        }
    }

    #[test]
    fn adjacent_patches_share_boundaries(seed in any::<u64>(), s in 0.0f64..1.0) {
        let mut rng = rng(seed);
        let net = random_net(&mut rng, 5, 4);
        for scheme in PatchScheme::ALL {
            for b in [Boundary::Column { i: 1, j: 0 }, Boundary::Column { i: 2, j: 2 }, Boundary::Row { i: 0, j: 1 }, Boundary::Row { i: 3, j: 0 }] {
                let (a, c) = boundary_points(&net, b, s, scheme).unwrap();
                prop_assert!((a - c).norm() <= 1e-9 * 5.0);
            }
        }
    }

    #[test]
    fn average_is_the_mean_of_l_and_m(seed in any::<u64>(), x in 0.0f64..1.0, y in 0.0f64..1.0) {
        let mut rng = rng(seed);
        let net = random_net(&mut rng, 4, 5);
        let l = net.eval_patch(1, 2, x, y, PatchScheme::LCurve).unwrap();
        let m = net.eval_patch(1, 2, x, y, PatchScheme::MCurve).unwrap();
        prop_assert_eq!(net.eval_patch(1, 2, x, y, PatchScheme::Average).unwrap(), l * 0.5 + m * 0.5);
    }

    #[test]
    fn far_points_do_not_influence_a_patch(seed in any::<u64>()) {
        let mut rng = rng(seed);
        let net = random_net(&mut rng, 6, 6);
        let (pi, pj) = (rng.gen_range(0..5), rng.gen_range(0..5));
        let footprint = net.patch_footprint(pi, pj).unwrap();
        let probes = [(0.3, 0.6), (0.5, 0.5), (0.9, 0.1)];
        let before: Vec<Vec3> = probes.iter().map(|&(x, y)| net.eval_patch(pi, pj, x, y, PatchScheme::Average).unwrap()).collect();
        for j in 0..6 {
            for i in 0..6 {
                let inside = footprint.contains(&(i, j));
                let dz = if inside { 1e-3 } else { rng.gen_range(-30.0..30.0) };
                let moved = net.with_point(i, j, net.get(i, j) + Vec3::new(0.0, 0.0, dz));
                let after: Vec<Vec3> = probes.iter().map(|&(x, y)| moved.eval_patch(pi, pj, x, y, PatchScheme::Average).unwrap()).collect();
                if inside {
                    prop_assert_ne!(&after, &before);
                } else {
                    prop_assert_eq!(&after, &before);
                }
            }
        }
    }

    #[test]
    fn patches_commute_with_similarities(seed in any::<u64>(), x in 0.0f64..1.0, y in 0.0f64..1.0) {
        let mut rng = rng(seed);
        let net = random_net(&mut rng, 5, 5);
        let sim = Similarity::random(&mut rng);
        let moved = SurfaceNet::new(5, 5, net.points().iter().map(|&p| sim.apply(p)).collect(), TOL).unwrap();
        let scale = sim.scale * (5.0 + sim.translation.norm());
        for scheme in PatchScheme::ALL {
            let p = sim.apply(net.eval_patch(2, 1, x, y, scheme).unwrap());
            let q = moved.eval_patch(2, 1, x, y, scheme).unwrap();
            prop_assert!((p - q).norm() <= 1e-9 * scale);
        }
    }
}

#[test]
fn tangent_planes_agree_across_boundaries() {
    let mut rng = rng(2024);
    let mut worst = [0.0f64; 3];
    let mut blend_direction: f64 = 0.0;
    for _ in 0..10 {
        let net = smooth_net(&mut rng, 6, 6);
        for _ in 0..20 {
            let (i, j) = (rng.gen_range(0..4), rng.gen_range(0..4));
            let b = if rng.gen_bool(0.5) { Boundary::Column { i, j } } else { Boundary::Row { i, j } };
            let s = rng.gen_range(0.0..1.0);
            for (k, scheme) in PatchScheme::ALL.into_iter().enumerate() {
                let a = boundary_normal_angle(&net, b, s, scheme, NORMAL_STEP).unwrap();
                worst[k] = worst[k].max(a);
                let along_blend = matches!(
                    (scheme, b),
                    (PatchScheme::LCurve, Boundary::Row { .. }) | (PatchScheme::MCurve, Boundary::Column { .. })
                );
                if along_blend {
                    blend_direction = blend_direction.max(a);
                }
            }
        }
    }
    assert!(worst.iter().all(|&w| w <= 1e-3), "{worst:?}");
    // Across the direction an iso-curve blends, continuity is exact up to
    // finite-difference noise.
    assert!(blend_direction <= 1e-7, "{blend_direction}");
}

#[test]
fn tessellation_is_planar_for_planar_nets() {
    let mut rng = rng(5);
    let normal = Vec3::new(0.3, -0.4, 0.866).normalized().unwrap();
    let u = Vec3::new(1.0, 0.0, 0.0).cross(normal).normalized().unwrap();
    let w = normal.cross(u);
    let mut pts = Vec::new();
    for j in 0..4 {
        for i in 0..5 {
            let a = i as f64 + rng.gen_range(-0.2..0.2);
            let b = j as f64 + rng.gen_range(-0.2..0.2);
            pts.push(u * a + w * b);
        }
    }
    let net = SurfaceNet::new(5, 4, pts, TOL).unwrap();
    let mesh = net.tessellate(6, PatchScheme::Average).unwrap();
    assert_eq!(mesh.vertices.len(), (4 * 6 + 1) * (3 * 6 + 1));
    for p in &mesh.vertices {
        assert!(p.dot(normal).abs() <= 1e-9, "{p:?}");
    }
}
