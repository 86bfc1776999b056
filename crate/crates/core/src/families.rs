//! Polytope families: the Fano polytopes `Δ_r` of the 5r-dimensional
//! manifolds `𝔛_r`, and the standard simplices of projective spaces.
//!
//! `𝔛_r` is obtained from `ℙ^{2r} × ℙ^{2r} × (ℙ¹)^r` by 2r blow-ups along
//! torus-invariant codimension-2 submanifolds. Its Fano polytope is the
//! convex hull of the ray generators
//!
//! * `u_1..u_{2r}` = `e_1..e_{2r}`, `u_{2r+1}` = `-(e_1 + … + e_{2r})`
//! * `v_1..v_{2r}` = `e_{2r+1}..e_{4r}`, `v_{2r+1}` = `-(e_{2r+1} + … + e_{4r})`
//! * `w_{i,1}` = `e_{4r+i}`, `w_{i,2}` = `-e_{4r+i}` for `i = 1..r`
//! * `y_i = u_i + v_i` and `z_i = w_{i,1} + y_i` for `i = 1..r`
//!
//! For `r = 2` this is the 18-vertex, 10-dimensional polytope whose dual has
//! 500 vertices. Its list is sometimes quoted with `(0,1,0,…)` twice; the
//! formulas above give 18 distinct generators, with `(0,0,1,0,…)` in that
//! slot.

use std::ops::{Add, Neg};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact::{int_vector, RatVector};
use crate::polytope::{enumerate_facets, Polytope};

/// Integer lattice vector used to build generators.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LatticeVector(pub Vec<i64>);

impl LatticeVector {
    fn zero(n: usize) -> Self {
        Self(vec![0; n])
    }

    fn unit(n: usize, i: usize) -> Self {
        let mut v = Self::zero(n);
        v.0[i] = 1;
        v
    }

    pub fn to_rational(&self) -> RatVector {
        int_vector(&self.0)
    }
}

impl Add for &LatticeVector {
    type Output = LatticeVector;

    fn add(self, rhs: &LatticeVector) -> LatticeVector {
        LatticeVector(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Neg for &LatticeVector {
    type Output = LatticeVector;

    fn neg(self) -> LatticeVector {
        LatticeVector(self.0.iter().map(|a| -a).collect())
    }
}

fn sum<'a>(n: usize, vs: impl IntoIterator<Item = &'a LatticeVector>) -> LatticeVector {
    vs.into_iter().fold(LatticeVector::zero(n), |acc, v| &acc + v)
}

/// Generators of `Δ_r`. Indices in accessors are 1-based, matching the
/// usual labels `u_1, …, u_{2r+1}` and so on.
#[derive(Clone, Debug)]
pub struct XrSpec {
    r: usize,
    u: Vec<LatticeVector>,
    v: Vec<LatticeVector>,
    w: Vec<[LatticeVector; 2]>,
    y: Vec<LatticeVector>,
    z: Vec<LatticeVector>,
}

impl XrSpec {
    pub fn new(r: usize) -> Result<Self> {
        if r == 0 {
            return Err(Error::DimensionMismatch {
                expected: 1,
                found: 0,
            });
        }
        let n = 5 * r;
        let e = |i: usize| LatticeVector::unit(n, i);
        let mut u: Vec<LatticeVector> = (0..2 * r).map(e).collect();
        u.push(-&sum(n, &u));
        let mut v: Vec<LatticeVector> = (2 * r..4 * r).map(e).collect();
        v.push(-&sum(n, &v));
        let w: Vec<[LatticeVector; 2]> = (0..r).map(|i| [e(4 * r + i), -&e(4 * r + i)]).collect();
        let y: Vec<LatticeVector> = (0..r).map(|i| &u[i] + &v[i]).collect();
        let z: Vec<LatticeVector> = (0..r).map(|i| &w[i][0] + &y[i]).collect();
        Ok(Self { r, u, v, w, y, z })
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn dim(&self) -> usize {
        5 * self.r
    }

    /// Expected vertex count of `Δ_r`.
    pub fn vertex_count(&self) -> usize {
        8 * self.r + 2
    }

    /// Expected Picard number of `𝔛_r` (vertex count minus dimension).
    pub fn picard_number(&self) -> usize {
        3 * self.r + 2
    }

    pub fn u(&self, i: usize) -> &LatticeVector {
        &self.u[i - 1]
    }

    pub fn v(&self, i: usize) -> &LatticeVector {
        &self.v[i - 1]
    }

    pub fn w(&self, i: usize, j: usize) -> &LatticeVector {
        &self.w[i - 1][j - 1]
    }

    pub fn y(&self, i: usize) -> &LatticeVector {
        &self.y[i - 1]
    }

    pub fn z(&self, i: usize) -> &LatticeVector {
        &self.z[i - 1]
    }

    /// Labelled generators in listing order: u-block, v-block, w-block,
    /// y-block, z-block.
    pub fn generators(&self) -> Vec<(String, LatticeVector)> {
        let mut out = Vec::with_capacity(self.vertex_count());
        for (i, g) in self.u.iter().enumerate() {
            out.push((format!("u{}", i + 1), g.clone()));
        }
        for (i, g) in self.v.iter().enumerate() {
            out.push((format!("v{}", i + 1), g.clone()));
        }
        for (i, [a, b]) in self.w.iter().enumerate() {
            out.push((format!("w{},1", i + 1), a.clone()));
            out.push((format!("w{},2", i + 1), b.clone()));
        }
        for (i, g) in self.y.iter().enumerate() {
            out.push((format!("y{}", i + 1), g.clone()));
        }
        for (i, g) in self.z.iter().enumerate() {
            out.push((format!("z{}", i + 1), g.clone()));
        }
        out
    }
}

/// The Fano polytope `Δ_r`.
pub fn xr_fano_polytope(r: usize) -> Result<Polytope> {
    let spec = XrSpec::new(r)?;
    let points: Vec<RatVector> = spec
        .generators()
        .iter()
        .map(|(_, g)| g.to_rational())
        .collect();
    enumerate_facets(&points)
}

/// `Δ(ℙⁿ) = conv{e_1, …, e_n, −(e_1 + … + e_n)}`.
pub fn projective_space_polytope(n: usize) -> Result<Polytope> {
    if n == 0 {
        return Err(Error::DimensionMismatch {
            expected: 1,
            found: 0,
        });
    }
    let mut points: Vec<LatticeVector> = (0..n).map(|i| LatticeVector::unit(n, i)).collect();
    points.push(-&sum(n, &points));
    enumerate_facets(&points.iter().map(LatticeVector::to_rational).collect::<Vec<_>>())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum RelationFamily {
    /// `u_{i+1} + … + u_{2r+1} + y_1 + … + y_i = v_1 + … + v_i`
    BlowUpOfZ,
    /// `u_{r+1} + … + u_{2r+1} + y_{i+1} + … + y_r + z_1 + … + z_i
    ///  = v_1 + … + v_r + w_{1,1} + … + w_{i,1}`
    BlowUpOfY,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RelationCheck {
    pub family: RelationFamily,
    pub i: usize,
    pub holds: bool,
    /// Number of generators on the left minus the number on the right.
    pub degree: i64,
    pub expected_degree: i64,
}

impl RelationCheck {
    pub fn ok(&self) -> bool {
        self.holds && self.degree == self.expected_degree
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MoriReport {
    pub r: usize,
    pub checks: Vec<RelationCheck>,
}

impl MoriReport {
    pub fn all_ok(&self) -> bool {
        self.checks.iter().all(RelationCheck::ok)
    }

    pub fn get(&self, family: RelationFamily, i: usize) -> Option<&RelationCheck> {
        self.checks.iter().find(|c| c.family == family && c.i == i)
    }

    /// The 2r anticanonical degrees in blow-up order; strictly decreasing
    /// from 2r down to 1 when the construction is right.
    pub fn degree_sequence(&self) -> Vec<i64> {
        let mut seq: Vec<i64> = Vec::with_capacity(self.checks.len());
        for family in [RelationFamily::BlowUpOfZ, RelationFamily::BlowUpOfY] {
            for i in 1..=self.r {
                if let Some(c) = self.get(family, i) {
                    seq.push(c.degree);
                }
            }
        }
        seq
    }
}

/// Checks both families of extremal-curve relations among the generators
/// of `Δ_r` as exact vector identities, with their degrees.
pub fn mori_relation_check(r: usize) -> Result<MoriReport> {
    let s = XrSpec::new(r)?;
    let n = s.dim();
    let r_i = r as i64;
    let mut checks = Vec::with_capacity(2 * r);
    for i in 1..=r {
        let left: Vec<&LatticeVector> = (i + 1..=2 * r + 1)
            .map(|k| s.u(k))
            .chain((1..=i).map(|k| s.y(k)))
            .collect();
        let right: Vec<&LatticeVector> = (1..=i).map(|k| s.v(k)).collect();
        checks.push(RelationCheck {
            family: RelationFamily::BlowUpOfZ,
            i,
            holds: sum(n, left.iter().copied()) == sum(n, right.iter().copied()),
            degree: left.len() as i64 - right.len() as i64,
            expected_degree: 2 * r_i + 1 - i as i64,
        });
    }
    for i in 1..=r {
        let left: Vec<&LatticeVector> = (r + 1..=2 * r + 1)
            .map(|k| s.u(k))
            .chain((i + 1..=r).map(|k| s.y(k)))
            .chain((1..=i).map(|k| s.z(k)))
            .collect();
        let right: Vec<&LatticeVector> = (1..=r)
            .map(|k| s.v(k))
            .chain((1..=i).map(|k| s.w(k, 1)))
            .collect();
        checks.push(RelationCheck {
            family: RelationFamily::BlowUpOfY,
            i,
            holds: sum(n, left.iter().copied()) == sum(n, right.iter().copied()),
            degree: left.len() as i64 - right.len() as i64,
            expected_degree: r_i + 1 - i as i64,
        });
    }
    Ok(MoriReport { r, checks })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polytope::polar_dual;

    #[test]
    fn x1_shape() {
        let s = XrSpec::new(1).unwrap();
        assert_eq!(s.generators().len(), 10);
        assert_eq!(s.picard_number(), 5);
        let d = xr_fano_polytope(1).unwrap();
        assert_eq!(d.dim(), 5);
        assert_eq!(d.vertices().len(), 10);
        assert_eq!(d.vertices().len() - d.dim(), s.picard_number());
        assert!(d.is_reflexive());
        assert!(d.is_smooth_fano());
    }

    #[test]
    fn x2_generators_match_listing() {
        let s = XrSpec::new(2).unwrap();
        let g = s.generators();
        assert_eq!(g.len(), 18);
        assert_eq!(g[4].1 .0, vec![-1, -1, -1, -1, 0, 0, 0, 0, 0, 0]);
        assert_eq!(g[14].1 .0, vec![1, 0, 0, 0, 1, 0, 0, 0, 0, 0]);
        assert_eq!(g[16].1 .0, vec![1, 0, 0, 0, 1, 0, 0, 0, 1, 0]);
        assert_eq!(g[17].1 .0, vec![0, 1, 0, 0, 0, 1, 0, 0, 0, 1]);
        let mut distinct: Vec<_> = g.iter().map(|(_, v)| v.clone()).collect();
        distinct.sort();
        distinct.dedup();
        assert_eq!(distinct.len(), 18);
    }

    #[test]
    fn x2_and_its_dual() {
        let d = xr_fano_polytope(2).unwrap();
        assert_eq!(d.vertices().len(), 18);
        assert_eq!(d.facets().len(), 500);
        assert!(d.is_smooth_fano());
        let p = polar_dual(&d).unwrap();
        assert_eq!(p.vertices().len(), 500);
        assert_eq!(p.facets().len(), 18);
        assert!(p.is_reflexive());
    }

    #[test]
    fn projective_spaces() {
        let p1 = projective_space_polytope(1).unwrap();
        assert_eq!(p1.vertices(), &[int_vector(&[-1]), int_vector(&[1])]);
        let p2 = projective_space_polytope(2).unwrap();
        assert_eq!(p2.vertices().len(), 3);
        assert!(p2.is_smooth_fano());
        let dual = polar_dual(&p2).unwrap();
        assert_eq!(
            dual.vertices(),
            &[int_vector(&[-1, -1]), int_vector(&[-1, 2]), int_vector(&[2, -1])]
        );
        assert!(projective_space_polytope(0).is_err());
    }

    #[test]
    fn relations_r2() {
        let rep = mori_relation_check(2).unwrap();
        assert!(rep.all_ok());
        let first = rep.get(RelationFamily::BlowUpOfZ, 1).unwrap();
        assert!(first.holds);
        assert_eq!(first.degree, 4);
        let second = rep.get(RelationFamily::BlowUpOfY, 2).unwrap();
        assert!(second.holds);
        assert_eq!(second.degree, 1);
        assert_eq!(rep.degree_sequence(), vec![4, 3, 2, 1]);
    }

    #[test]
    fn relations_r1() {
        let rep = mori_relation_check(1).unwrap();
        assert!(rep.all_ok());
        assert_eq!(rep.degree_sequence(), vec![2, 1]);
    }

    #[test]
    fn relations_hold_for_larger_r() {
        for r in 3..=5 {
            let rep = mori_relation_check(r).unwrap();
            assert!(rep.all_ok());
            let seq = rep.degree_sequence();
            assert_eq!(seq.first(), Some(&(2 * r as i64)));
            assert_eq!(seq.last(), Some(&1));
            assert!(seq.windows(2).all(|w| w[0] > w[1]));
        }
    }

    #[test]
    fn zero_r_rejected() {
        assert!(XrSpec::new(0).is_err());
        assert!(mori_relation_check(0).is_err());
    }
}
