//! Dense-grid midpoint sums in dimensions 1 and 2, at step 10⁻³.

use toric_kstab::exact::to_f64;
use toric_kstab::integrate::moments;
use toric_kstab::polytope::Polytope;

pub const STEP: f64 = 1e-3;

pub struct Grid {
    pub volume: f64,
    pub first: Vec<f64>,
    pub second: Vec<Vec<f64>>,
}

fn facets_f64(p: &Polytope) -> Vec<(Vec<f64>, f64)> {
    p.facets()
        .iter()
        .map(|h| (h.normal.iter().map(to_f64).collect(), to_f64(&h.offset)))
        .collect()
}

fn bounds(p: &Polytope, i: usize) -> (f64, f64) {
    let xs = p.vertices().iter().map(|v| to_f64(&v[i]));
    let lo = xs.clone().fold(f64::INFINITY, f64::min);
    let hi = xs.fold(f64::NEG_INFINITY, f64::max);
    (lo, hi)
}

pub fn grid_sums(p: &Polytope) -> Grid {
    let n = p.dim();
    let facets = facets_f64(p);
    let inside = |x: &[f64]| {
        facets
            .iter()
            .all(|(u, c)| u.iter().zip(x).map(|(a, b)| a * b).sum::<f64>() + c >= 0.0)
    };
    let axes: Vec<Vec<f64>> = (0..n)
        .map(|i| {
            let (lo, hi) = bounds(p, i);
            let cells = ((hi - lo) / STEP).round() as usize;
            (0..cells).map(|k| lo + (k as f64 + 0.5) * STEP).collect()
        })
        .collect();
    let cell = STEP.powi(n as i32);
    let mut g = Grid {
        volume: 0.0,
        first: vec![0.0; n],
        second: vec![vec![0.0; n]; n],
    };
    let mut visit = |x: &[f64]| {
        if !inside(x) {
            return;
        }
        g.volume += cell;
        for i in 0..n {
            g.first[i] += x[i] * cell;
            for j in 0..n {
                g.second[i][j] += x[i] * x[j] * cell;
            }
        }
    };
    match n {
        1 => axes[0].iter().for_each(|&x| visit(&[x])),
        2 => {
            for &x in &axes[0] {
                for &y in &axes[1] {
                    visit(&[x, y]);
                }
            }
        }
        _ => unreachable!("grid oracle covers dimensions 1 and 2"),
    }
    g
}

pub fn close(grid: f64, exact: f64, scale: f64) -> bool {
    (grid - exact).abs() <= 1e-3 * exact.abs().max(scale)
}

/// Panics unless volume and all moments agree within relative 10⁻³.
pub fn check(name: &str, p: &Polytope) {
    let m = moments(p);
    let g = grid_sums(p);
    let vol = to_f64(&m.volume);
    assert!(close(g.volume, vol, vol), "{name}: volume {} vs {}", g.volume, vol);
    for i in 0..p.dim() {
        let b = to_f64(&m.first[i]);
        assert!(close(g.first[i], b, vol), "{name}: b{i} {} vs {}", g.first[i], b);
        for j in 0..p.dim() {
            let c = to_f64(&m.second[(i, j)]);
            assert!(close(g.second[i][j], c, vol), "{name}: c{i}{j} {} vs {}", g.second[i][j], c);
        }
    }
}

