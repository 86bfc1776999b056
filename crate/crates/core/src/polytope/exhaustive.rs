//! Brute-force enumeration over n-subsets.
//!
//! These are slow reference routes kept independent of the double
//! description code: every n-subset of hyperplanes (or points) is solved
//! exactly and filtered for feasibility. Cost is O(C(m, n)) exact solves.

use num_traits::{One, Signed, Zero};

use super::Halfspace;
use crate::exact::{self, RatMatrix, RatVector, Scalar};

/// Calls `f` with every `k`-subset of `0..m` in lexicographic order.
pub fn for_each_subset(m: usize, k: usize, mut f: impl FnMut(&[usize])) {
    if k > m {
        return;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        f(&idx);
        let Some(i) = (0..k).rev().find(|&i| idx[i] != i + m - k) else {
            return;
        };
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// Vertices of `{x : ⟨x, u_j⟩ + c_j ≥ 0}` from all n-subsets of the
/// bounding hyperplanes, sorted and deduplicated.
pub fn exhaustive_vertices(halfspaces: &[Halfspace], n: usize) -> Vec<RatVector> {
    let mut out = Vec::new();
    for_each_subset(halfspaces.len(), n, |subset| {
        let a = RatMatrix::from_rows(subset.iter().map(|&j| halfspaces[j].normal.clone()).collect())
            .expect("halfspaces share a dimension");
        let rhs: RatVector = subset.iter().map(|&j| -halfspaces[j].offset.clone()).collect();
        if let Ok(x) = exact::solve_linear_system(&a, &rhs) {
            if halfspaces.iter().all(|h| !h.eval(&x).is_negative()) {
                out.push(x);
            }
        }
    });
    out.sort();
    out.dedup();
    out
}

/// Facet inequalities of `conv(points)` from all hyperplanes through
/// n-subsets of the points, normalized and sorted.
pub fn exhaustive_facets(points: &[RatVector]) -> Vec<Halfspace> {
    let Some(n) = points.first().map(Vec::len) else {
        return Vec::new();
    };
    let mut out = Vec::new();
    for_each_subset(points.len(), n, |subset| {
        // Solve for (u, c) with ⟨p, u⟩ + c = 0 on the subset, fixing one
        // coordinate of (u, c) to 1 in turn until the system is regular.
        for fixed in 0..=n {
            let mut rows = Vec::with_capacity(n + 1);
            let mut rhs = Vec::with_capacity(n + 1);
            for &k in subset {
                let mut row = points[k].clone();
                row.push(Scalar::one());
                rows.push(row);
                rhs.push(Scalar::zero());
            }
            let mut pin = vec![Scalar::zero(); n + 1];
            pin[fixed] = Scalar::one();
            rows.push(pin);
            rhs.push(Scalar::one());
            let a = RatMatrix::from_rows(rows).expect("rows share a dimension");
            let Ok(sol) = exact::solve_linear_system(&a, &rhs) else {
                continue;
            };
            let h = Halfspace::new(sol[..n].to_vec(), sol[n].clone());
            if h.normal.iter().all(Zero::is_zero) {
                break;
            }
            let values: Vec<Scalar> = points.iter().map(|p| h.eval(p)).collect();
            if values.iter().all(|v| !v.is_negative()) {
                out.push(h.normalized());
            } else if values.iter().all(|v| !v.is_positive()) {
                let flipped = Halfspace::new(
                    h.normal.iter().map(|x| -x).collect(),
                    -h.offset.clone(),
                );
                out.push(flipped.normalized());
            }
            break;
        }
    });
    out.sort();
    out.dedup();
    out
}
