//! Double description method over the integers.
//!
//! Computes the extreme rays of a pointed cone `{y : a_i · y >= 0}`.
//! Rays are kept as primitive integer vectors and combined with integer
//! coefficients, so no fractions appear. Adjacency uses the combinatorial
//! test: two rays are adjacent iff no third ray vanishes on every
//! constraint both of them vanish on.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::bitset::BitSet;
use crate::exact::{self, make_primitive, Scalar};

#[derive(Clone, Debug)]
struct Ray {
    coords: Vec<BigInt>,
    zeros: BitSet,
}

/// The constraint system has a nontrivial lineality space; `rank` is the
/// rank of the constraint matrix.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) struct Lineality {
    pub rank: usize,
}

fn dot(a: &[BigInt], b: &[BigInt]) -> BigInt {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Extreme rays of `{y : row · y >= 0 for all rows}`.
pub(crate) fn extreme_rays(rows: &[Vec<BigInt>]) -> Result<Vec<Vec<BigInt>>, Lineality> {
    let Some(d) = rows.first().map(Vec::len) else {
        return Err(Lineality { rank: 0 });
    };
    let m = rows.len();

    let mut basis: Vec<usize> = Vec::with_capacity(d);
    let mut basis_rows: Vec<Vec<BigInt>> = Vec::with_capacity(d);
    for (i, row) in rows.iter().enumerate() {
        if basis.len() == d {
            break;
        }
        if row.iter().all(Zero::is_zero) {
            continue;
        }
        basis_rows.push(row.clone());
        if exact::pivot_columns(&basis_rows).len() == basis_rows.len() {
            basis.push(i);
        } else {
            basis_rows.pop();
        }
    }
    if basis.len() < d {
        return Err(Lineality { rank: basis.len() });
    }

    // Columns of the inverse of the basis matrix.
    let b = exact::RatMatrix::from_rows(
        basis_rows
            .iter()
            .map(|r| r.iter().cloned().map(Scalar::from_integer).collect())
            .collect(),
    )
    .expect("basis rows have equal length");
    let mut rays = Vec::with_capacity(d);
    for j in 0..d {
        let mut e = vec![Scalar::zero(); d];
        e[j] = Scalar::from_integer(1.into());
        let col = exact::solve_linear_system(&b, &e).expect("basis is nonsingular");
        let (mut coords, _) = exact::clear_denominators(&col);
        make_primitive(&mut coords);
        let zeros = BitSet::from_indices(
            m,
            basis.iter().enumerate().filter(|&(k, _)| k != j).map(|(_, &i)| i),
        );
        rays.push(Ray { coords, zeros });
    }

    let mut in_basis = BitSet::new(m);
    for &i in &basis {
        in_basis.insert(i);
    }
    for (i, row) in rows.iter().enumerate() {
        if in_basis.contains(i) || row.iter().all(Zero::is_zero) {
            continue;
        }
        rays = add_constraint(rays, i, row, d);
    }
    Ok(rays.into_iter().map(|r| r.coords).collect())
}

fn add_constraint(rays: Vec<Ray>, index: usize, row: &[BigInt], d: usize) -> Vec<Ray> {
    let values: Vec<BigInt> = rays.iter().map(|r| dot(row, &r.coords)).collect();
    let pos: Vec<usize> = (0..rays.len()).filter(|&k| values[k].is_positive()).collect();
    let neg: Vec<usize> = (0..rays.len()).filter(|&k| values[k].is_negative()).collect();
    if neg.is_empty() {
        let mut rays = rays;
        for (r, v) in rays.iter_mut().zip(&values) {
            if v.is_zero() {
                r.zeros.insert(index);
            }
        }
        return rays;
    }

    let mut created = Vec::new();
    for &p in &pos {
        for &q in &neg {
            let common = rays[p].zeros.intersection(&rays[q].zeros);
            if common.count() + 2 < d {
                continue;
            }
            let adjacent = rays
                .iter()
                .enumerate()
                .all(|(k, r)| k == p || k == q || !common.is_subset(&r.zeros));
            if !adjacent {
                continue;
            }
            // values[p] > 0 > values[q]; the combination vanishes on `row`.
            let mut coords: Vec<BigInt> = rays[q]
                .coords
                .iter()
                .zip(&rays[p].coords)
                .map(|(rq, rp)| &values[p] * rq - &values[q] * rp)
                .collect();
            make_primitive(&mut coords);
            let mut zeros = common;
            zeros.insert(index);
            created.push(Ray { coords, zeros });
        }
    }

    let mut next = Vec::with_capacity(pos.len() + created.len());
    for (k, mut r) in rays.into_iter().enumerate() {
        if values[k].is_negative() {
            continue;
        }
        if values[k].is_zero() {
            r.zeros.insert(index);
        }
        next.push(r);
    }
    next.extend(created);
    next
}
