//! Rational polytopes carried in both representations.
//!
//! A [`Polytope`] stores its vertices and its facet inequalities
//! `⟨x, u⟩ + c ≥ 0` together with the facet–vertex incidence. Vertices and
//! facets are kept in lexicographic order so every derived quantity is
//! deterministic.

mod dd;
pub mod exhaustive;

use std::sync::OnceLock;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::exact::{self, clear_denominators, make_primitive, RatVector, Scalar};

/// The closed halfspace `⟨x, normal⟩ + offset ≥ 0`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Halfspace {
    pub normal: RatVector,
    pub offset: Scalar,
}

impl Halfspace {
    pub fn new(normal: RatVector, offset: Scalar) -> Self {
        Self { normal, offset }
    }

    pub fn from_ints(normal: &[i64], offset: i64) -> Self {
        Self::new(exact::int_vector(normal), exact::int(offset))
    }

    pub fn dim(&self) -> usize {
        self.normal.len()
    }

    /// Value of the defining affine function at `x`.
    pub fn eval(&self, x: &[Scalar]) -> Scalar {
        exact::dot(&self.normal, x) + &self.offset
    }

    /// Positive rescaling that makes the normal a primitive integer vector.
    /// Halfspaces with a zero normal are returned unchanged.
    pub fn normalized(&self) -> Halfspace {
        if self.normal.iter().all(Zero::is_zero) {
            return self.clone();
        }
        let (mut ints, lcm) = clear_denominators(&self.normal);
        let g = exact::gcd_of(&ints);
        make_primitive(&mut ints);
        let factor = Scalar::new(lcm, g);
        Halfspace {
            normal: ints.into_iter().map(Scalar::from_integer).collect(),
            offset: &self.offset * factor,
        }
    }

    /// Integer normal with gcd 1.
    pub fn is_lattice_primitive(&self) -> bool {
        self.normal.iter().all(|x| x.is_integer())
            && exact::gcd_of(&self.normal.iter().map(|x| x.to_integer()).collect::<Vec<_>>())
                .is_one()
    }
}

/// A rational polytope in `R^dim`.
///
/// For full-dimensional polytopes `facets` is the irredundant facet list and
/// `incidence[j]` lists the vertices on facet `j`. A lower-dimensional
/// polytope (for example a degenerate halfspace cut) keeps its defining
/// system in `facets` instead; its `affine_dim` records the true dimension.
#[derive(Debug)]
pub struct Polytope {
    dim: usize,
    affine_dim: Option<usize>,
    vertices: Vec<RatVector>,
    facets: Vec<Halfspace>,
    incidence: Vec<Vec<usize>>,
    dropped_redundant: usize,
    lattice: bool,
    reflexive: OnceLock<bool>,
    smooth: OnceLock<bool>,
}

impl Clone for Polytope {
    fn clone(&self) -> Self {
        let clone_lock = |l: &OnceLock<bool>| {
            let c = OnceLock::new();
            if let Some(&v) = l.get() {
                let _ = c.set(v);
            }
            c
        };
        Self {
            dim: self.dim,
            affine_dim: self.affine_dim,
            vertices: self.vertices.clone(),
            facets: self.facets.clone(),
            incidence: self.incidence.clone(),
            dropped_redundant: self.dropped_redundant,
            lattice: self.lattice,
            reflexive: clone_lock(&self.reflexive),
            smooth: clone_lock(&self.smooth),
        }
    }
}

impl PartialEq for Polytope {
    fn eq(&self, other: &Self) -> bool {
        self.dim == other.dim
            && self.affine_dim == other.affine_dim
            && self.vertices == other.vertices
            && self.facets == other.facets
    }
}

fn affine_dimension(points: &[RatVector]) -> Option<usize> {
    let first = points.first()?;
    let diffs: Vec<RatVector> = points[1..].iter().map(|p| exact::sub(p, first)).collect();
    Some(exact::rank(&diffs))
}

impl Polytope {
    pub fn empty(dim: usize) -> Self {
        Self {
            dim,
            affine_dim: None,
            vertices: Vec::new(),
            facets: Vec::new(),
            incidence: Vec::new(),
            dropped_redundant: 0,
            lattice: true,
            reflexive: OnceLock::from(false),
            smooth: OnceLock::from(false),
        }
    }

    /// Assembles a polytope from its complete vertex set and a valid
    /// inequality description. Redundant inequalities are dropped when the
    /// polytope is full-dimensional.
    pub(crate) fn from_parts(
        dim: usize,
        mut vertices: Vec<RatVector>,
        halfspaces: Vec<Halfspace>,
        irredundant: bool,
    ) -> Self {
        vertices.sort();
        vertices.dedup();
        let affine_dim = affine_dimension(&vertices);
        let lattice = vertices.iter().all(|v| exact::is_integral(v));
        let input_count = halfspaces.len();
        let mut hs: Vec<Halfspace> = halfspaces.iter().map(Halfspace::normalized).collect();
        hs.sort();
        hs.dedup();
        debug_assert!(vertices
            .iter()
            .all(|v| hs.iter().all(|h| !h.eval(v).is_negative())));

        let tight = |h: &Halfspace| {
            BitSet::from_indices(
                vertices.len(),
                (0..vertices.len()).filter(|&k| h.eval(&vertices[k]).is_zero()),
            )
        };

        let (facets, sets) = if affine_dim == Some(dim) {
            let all = BitSet::full(vertices.len());
            let mut candidates: Vec<(Halfspace, BitSet)> = Vec::new();
            for h in hs {
                let t = tight(&h);
                if t.is_empty() || t == all {
                    continue;
                }
                if !irredundant && candidates.iter().any(|(_, s)| *s == t) {
                    continue;
                }
                candidates.push((h, t));
            }
            let maximal: Vec<bool> = candidates
                .iter()
                .map(|(_, t)| {
                    irredundant
                        || !candidates
                            .iter()
                            .any(|(_, s)| s != t && t.is_subset(s))
                })
                .collect();
            candidates
                .into_iter()
                .zip(maximal)
                .filter_map(|(c, keep)| keep.then_some(c))
                .unzip()
        } else {
            let sets: Vec<BitSet> = hs.iter().map(tight).collect();
            (hs, sets)
        };
        let incidence = sets
            .iter()
            .map(|s: &BitSet| s.iter().collect())
            .collect::<Vec<Vec<usize>>>();
        let dropped_redundant = input_count.saturating_sub(facets.len());
        Self {
            dim,
            affine_dim,
            vertices,
            facets,
            incidence,
            dropped_redundant,
            lattice,
            reflexive: OnceLock::new(),
            smooth: OnceLock::new(),
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Affine dimension; `None` for the empty polytope.
    pub fn affine_dim(&self) -> Option<usize> {
        self.affine_dim
    }

    pub fn is_empty(&self) -> bool {
        self.affine_dim.is_none()
    }

    pub fn is_full_dimensional(&self) -> bool {
        self.affine_dim == Some(self.dim)
    }

    pub fn vertices(&self) -> &[RatVector] {
        &self.vertices
    }

    pub fn facets(&self) -> &[Halfspace] {
        &self.facets
    }

    pub fn incidence(&self) -> &[Vec<usize>] {
        &self.incidence
    }

    /// Number of input inequalities found redundant (or duplicated) when
    /// the polytope was built.
    pub fn dropped_redundant(&self) -> usize {
        self.dropped_redundant
    }

    pub fn is_lattice(&self) -> bool {
        self.lattice
    }

    pub(crate) fn facet_sets(&self) -> Vec<BitSet> {
        self.incidence
            .iter()
            .map(|inc| BitSet::from_indices(self.vertices.len(), inc.iter().copied()))
            .collect()
    }

    pub fn contains(&self, x: &[Scalar]) -> bool {
        !self.is_empty() && self.facets.iter().all(|h| !h.eval(x).is_negative())
    }

    /// Origin strictly inside: every facet has positive offset.
    pub fn has_interior_origin(&self) -> bool {
        self.is_full_dimensional() && self.facets.iter().all(|h| h.offset.is_positive())
    }

    pub fn is_reflexive(&self) -> bool {
        *self.reflexive.get_or_init(|| is_reflexive(self))
    }

    pub fn is_smooth_fano(&self) -> bool {
        *self.smooth.get_or_init(|| is_smooth_fano(self))
    }

    /// Cached predicate values: `None` when not yet evaluated.
    pub fn cached_flags(&self) -> (Option<bool>, Option<bool>) {
        (self.reflexive.get().copied(), self.smooth.get().copied())
    }

    /// Image under `x ↦ A·x`, rebuilt from the mapped vertices.
    pub fn linear_image(&self, a: &exact::RatMatrix) -> Result<Polytope> {
        let mapped = self
            .vertices
            .iter()
            .map(|v| a.mul_vec(v))
            .collect::<Result<Vec<_>>>()?;
        enumerate_facets(&mapped)
    }
}

fn check_dims<'a>(n: usize, rows: impl IntoIterator<Item = &'a [Scalar]>) -> Result<()> {
    for r in rows {
        if r.len() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: r.len(),
            });
        }
    }
    Ok(())
}

/// Vertices of `{x : ⟨x, u_j⟩ + c_j ≥ 0}`.
pub fn enumerate_vertices(halfspaces: &[Halfspace], n: usize) -> Result<Polytope> {
    check_dims(n, halfspaces.iter().map(|h| h.normal.as_slice()))?;
    // Homogenized cone in (t, x): t ≥ 0 and c·t + ⟨u, x⟩ ≥ 0.
    let mut rows = Vec::with_capacity(halfspaces.len() + 1);
    let mut t_row = vec![BigInt::zero(); n + 1];
    t_row[0] = BigInt::one();
    rows.push(t_row);
    for h in halfspaces {
        let mut row = Vec::with_capacity(n + 1);
        row.push(h.offset.clone());
        row.extend(h.normal.iter().cloned());
        rows.push(clear_denominators(&row).0);
    }
    let rays = match dd::extreme_rays(&rows) {
        Ok(rays) => rays,
        Err(_) => return Err(classify_with_lineality(halfspaces, n)),
    };
    let mut vertices = Vec::new();
    let mut recession = false;
    for ray in rays {
        if ray[0].is_zero() {
            recession = true;
            continue;
        }
        let t = &ray[0];
        vertices.push(
            ray[1..]
                .iter()
                .map(|x| Scalar::new(x.clone(), t.clone()))
                .collect(),
        );
    }
    if vertices.is_empty() {
        return Err(Error::Empty);
    }
    if recession {
        return Err(Error::Unbounded);
    }
    Ok(Polytope::from_parts(n, vertices, halfspaces.to_vec(), false))
}

/// The normals do not span: the region, if nonempty, contains a line.
/// Decide feasibility on the subsystem of spanning coordinates.
fn classify_with_lineality(halfspaces: &[Halfspace], n: usize) -> Error {
    let normals: Vec<Vec<BigInt>> = halfspaces
        .iter()
        .map(|h| clear_denominators(&h.normal).0)
        .collect();
    let pivots = exact::pivot_columns(&normals);
    if pivots.is_empty() {
        return if halfspaces.iter().all(|h| !h.offset.is_negative()) {
            Error::Unbounded
        } else {
            Error::Empty
        };
    }
    if pivots.len() == n {
        // Full rank: the lineality came from elsewhere, which cannot happen
        // with the t ≥ 0 row present.
        return Error::Unbounded;
    }
    let reduced: Vec<Halfspace> = halfspaces
        .iter()
        .map(|h| Halfspace::new(pivots.iter().map(|&c| h.normal[c].clone()).collect(), h.offset.clone()))
        .collect();
    match enumerate_vertices(&reduced, pivots.len()) {
        Err(Error::Empty) => Error::Empty,
        _ => Error::Unbounded,
    }
}

/// Convex hull of a finite point set, with its facets.
pub fn enumerate_facets(points: &[RatVector]) -> Result<Polytope> {
    let Some(n) = points.first().map(Vec::len) else {
        return Err(Error::Empty);
    };
    check_dims(n, points.iter().map(Vec::as_slice))?;
    let mut pts = points.to_vec();
    pts.sort();
    pts.dedup();
    // Valid inequalities (c, u) form the cone c + ⟨u, p⟩ ≥ 0 for all p.
    let rows: Vec<Vec<BigInt>> = pts
        .iter()
        .map(|p| {
            let mut row = Vec::with_capacity(n + 1);
            row.push(Scalar::one());
            row.extend(p.iter().cloned());
            clear_denominators(&row).0
        })
        .collect();
    let rays = dd::extreme_rays(&rows).map_err(|l| Error::Degenerate {
        ambient_dim: n,
        affine_dim: l.rank.saturating_sub(1),
    })?;
    let facets: Vec<Halfspace> = rays
        .into_iter()
        .map(|r| {
            Halfspace::new(
                r[1..].iter().cloned().map(Scalar::from_integer).collect(),
                Scalar::from_integer(r[0].clone()),
            )
            .normalized()
        })
        .collect();

    // A point is a vertex iff the facets through it meet only in it.
    let tight: Vec<BitSet> = facets
        .iter()
        .map(|h| {
            BitSet::from_indices(
                pts.len(),
                (0..pts.len()).filter(|&k| h.eval(&pts[k]).is_zero()),
            )
        })
        .collect();
    let vertices: Vec<RatVector> = (0..pts.len())
        .filter(|&k| {
            let mut meet = BitSet::full(pts.len());
            for t in tight.iter().filter(|t| t.contains(k)) {
                meet = meet.intersection(t);
            }
            meet.count() == 1
        })
        .map(|k| pts[k].clone())
        .collect();
    Ok(Polytope::from_parts(n, vertices, facets, true))
}

/// `{x : ⟨x, v⟩ ≥ −1 for every vertex v of p}`.
pub fn polar_dual(p: &Polytope) -> Result<Polytope> {
    if !p.has_interior_origin() {
        return Err(Error::OriginNotInterior);
    }
    let halfspaces: Vec<Halfspace> = p
        .vertices()
        .iter()
        .map(|v| Halfspace::new(v.clone(), Scalar::one()))
        .collect();
    enumerate_vertices(&halfspaces, p.dim())
}

/// Lattice polytope with the origin inside whose facets all read
/// `⟨x, u⟩ + 1 ≥ 0` with `u` primitive integral.
pub fn is_reflexive(p: &Polytope) -> bool {
    p.is_lattice()
        && p.is_full_dimensional()
        && p.facets()
            .iter()
            .all(|h| h.is_lattice_primitive() && h.offset.is_one())
}

/// Every facet is a simplex whose vertices form a lattice basis.
pub fn is_smooth_fano(p: &Polytope) -> bool {
    if !p.is_reflexive() {
        return false;
    }
    let n = p.dim();
    p.incidence().iter().all(|inc| {
        if inc.len() != n {
            return false;
        }
        let rows: Vec<Vec<BigInt>> = inc.iter().map(|&k| clear_denominators(&p.vertices()[k]).0).collect();
        exact::int_determinant(rows).abs().is_one()
    })
}

/// `p ∩ {ℓ_h ≥ 0}`. The result may be empty or lower-dimensional.
pub fn intersect_halfspace(p: &Polytope, h: &Halfspace) -> Result<Polytope> {
    if h.dim() != p.dim() {
        return Err(Error::DimensionMismatch {
            expected: p.dim(),
            found: h.dim(),
        });
    }
    if p.is_empty() {
        return Ok(Polytope::empty(p.dim()));
    }
    let mut hs = p.facets().to_vec();
    hs.push(h.clone());
    match enumerate_vertices(&hs, p.dim()) {
        Ok(q) => Ok(q),
        Err(Error::Empty) => Ok(Polytope::empty(p.dim())),
        Err(e) => Err(e),
    }
}

/// `p1 × p2` in `R^(n1+n2)`.
pub fn cartesian_product(p1: &Polytope, p2: &Polytope) -> Polytope {
    let (n1, n2) = (p1.dim(), p2.dim());
    let zeros = |k: usize| vec![Scalar::zero(); k];
    let mut vertices = Vec::with_capacity(p1.vertices().len() * p2.vertices().len());
    for a in p1.vertices() {
        for b in p2.vertices() {
            let mut v = a.clone();
            v.extend(b.iter().cloned());
            vertices.push(v);
        }
    }
    let mut facets = Vec::with_capacity(p1.facets().len() + p2.facets().len());
    for h in p1.facets() {
        let mut u = h.normal.clone();
        u.extend(zeros(n2));
        facets.push(Halfspace::new(u, h.offset.clone()));
    }
    for h in p2.facets() {
        let mut u = zeros(n1);
        u.extend(h.normal.iter().cloned());
        facets.push(Halfspace::new(u, h.offset.clone()));
    }
    if p1.is_empty() || p2.is_empty() {
        return Polytope::empty(n1 + n2);
    }
    Polytope::from_parts(n1 + n2, vertices, facets, true)
}

/// `conv(d1 × {0} ∪ {0} × d2)`.
pub fn free_sum(d1: &Polytope, d2: &Polytope) -> Result<Polytope> {
    if !d1.has_interior_origin() || !d2.has_interior_origin() {
        return Err(Error::OriginNotInterior);
    }
    let (n1, n2) = (d1.dim(), d2.dim());
    let mut points = Vec::with_capacity(d1.vertices().len() + d2.vertices().len());
    for a in d1.vertices() {
        let mut v = a.clone();
        v.extend(std::iter::repeat_n(Scalar::zero(), n2));
        points.push(v);
    }
    for b in d2.vertices() {
        let mut v = vec![Scalar::zero(); n1];
        v.extend(b.iter().cloned());
        points.push(v);
    }
    enumerate_facets(&points)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{int_vector, ratio};

    fn square_h() -> Vec<Halfspace> {
        vec![
            Halfspace::from_ints(&[1, 0], 1),
            Halfspace::from_ints(&[-1, 0], 1),
            Halfspace::from_ints(&[0, 1], 1),
            Halfspace::from_ints(&[0, -1], 1),
        ]
    }

    fn pts(v: &[&[i64]]) -> Vec<RatVector> {
        v.iter().map(|r| int_vector(r)).collect()
    }

    #[test]
    fn square_vertices() {
        let p = enumerate_vertices(&square_h(), 2).unwrap();
        assert_eq!(p.vertices(), pts(&[&[-1, -1], &[-1, 1], &[1, -1], &[1, 1]]).as_slice());
        assert_eq!(p.facets().len(), 4);
        assert!(p.incidence().iter().all(|i| i.len() == 2));
        assert!(p.is_reflexive());
    }

    #[test]
    fn dual_of_p2_triangle() {
        let h = vec![
            Halfspace::from_ints(&[1, 0], 1),
            Halfspace::from_ints(&[0, 1], 1),
            Halfspace::from_ints(&[-1, -1], 1),
        ];
        let p = enumerate_vertices(&h, 2).unwrap();
        assert_eq!(p.vertices(), pts(&[&[-1, -1], &[-1, 2], &[2, -1]]).as_slice());
    }

    #[test]
    fn unbounded_and_empty() {
        let h = vec![Halfspace::from_ints(&[1, 0], 0), Halfspace::from_ints(&[0, 1], 0)];
        assert!(matches!(enumerate_vertices(&h, 2), Err(Error::Unbounded)));
        let h = vec![Halfspace::from_ints(&[1], -2), Halfspace::from_ints(&[-1], 1)];
        assert!(matches!(enumerate_vertices(&h, 1), Err(Error::Empty)));
        // A strip: lineality in x2.
        let h = vec![Halfspace::from_ints(&[1, 0], 1), Halfspace::from_ints(&[-1, 0], 1)];
        assert!(matches!(enumerate_vertices(&h, 2), Err(Error::Unbounded)));
        let h = vec![Halfspace::from_ints(&[1, 0], -2), Halfspace::from_ints(&[-1, 0], 1)];
        assert!(matches!(enumerate_vertices(&h, 2), Err(Error::Empty)));
    }

    #[test]
    fn redundant_inequalities_are_dropped() {
        let mut h = square_h();
        h.push(Halfspace::from_ints(&[1, 1], 5));
        h.push(Halfspace::from_ints(&[2, 0], 2));
        let p = enumerate_vertices(&h, 2).unwrap();
        assert_eq!(p.facets().len(), 4);
        assert_eq!(p.dropped_redundant(), 2);
    }

    #[test]
    fn square_facets() {
        let p = enumerate_facets(&pts(&[&[1, 1], &[1, -1], &[-1, 1], &[-1, -1], &[0, 0], &[1, 0]])).unwrap();
        assert_eq!(p.vertices().len(), 4);
        let mut expected = square_h();
        expected.sort();
        assert_eq!(p.facets(), expected.as_slice());
    }

    #[test]
    fn p2_fano_triangle_facets() {
        let p = enumerate_facets(&pts(&[&[1, 0], &[0, 1], &[-1, -1]])).unwrap();
        assert_eq!(p.facets().len(), 3);
        assert!(p.facets().iter().all(|h| h.offset.is_one()));
        assert!(p.is_reflexive());
        assert!(p.is_smooth_fano());
    }

    #[test]
    fn degenerate_hull() {
        let err = enumerate_facets(&pts(&[&[0, 0], &[1, 1], &[2, 2]])).unwrap_err();
        assert!(matches!(err, Error::Degenerate { ambient_dim: 2, affine_dim: 1 }));
    }

    #[test]
    fn polar_duality() {
        let cross = enumerate_facets(&pts(&[&[1, 0], &[-1, 0], &[0, 1], &[0, -1]])).unwrap();
        let cube = polar_dual(&cross).unwrap();
        assert_eq!(cube.vertices(), pts(&[&[-1, -1], &[-1, 1], &[1, -1], &[1, 1]]).as_slice());
        let back = polar_dual(&cube).unwrap();
        assert_eq!(back.vertices(), cross.vertices());
        let off = enumerate_facets(&pts(&[&[1, 0], &[2, 0], &[1, 1]])).unwrap();
        assert!(matches!(polar_dual(&off), Err(Error::OriginNotInterior)));
    }

    #[test]
    fn reflexivity_and_smoothness() {
        // conv{e1, e2, -e1-2e2} is reflexive but singular; with -e1-3e2 the
        // edge through e1 has offset 3.
        let w112 = enumerate_facets(&pts(&[&[1, 0], &[0, 1], &[-1, -2]])).unwrap();
        assert!(w112.is_reflexive());
        assert!(!w112.is_smooth_fano());
        let w113 = enumerate_facets(&pts(&[&[1, 0], &[0, 1], &[-1, -3]])).unwrap();
        assert!(!w113.is_reflexive());
        assert!(w113.facets().contains(&Halfspace::from_ints(&[-3, 2], 3)));
        let hex = enumerate_facets(&pts(&[&[1, 0], &[0, 1], &[-1, 0], &[0, -1], &[1, 1], &[-1, -1]])).unwrap();
        assert!(hex.is_reflexive());
        assert!(hex.is_smooth_fano());
        let cross = enumerate_facets(&pts(&[&[1, 0], &[-1, 0], &[0, 1], &[0, -1]])).unwrap();
        assert!(cross.is_smooth_fano());
        let sing = enumerate_facets(&pts(&[&[1, 1], &[-1, 1], &[1, -1], &[-1, -1]])).unwrap();
        assert!(sing.is_reflexive());
        assert!(!sing.is_smooth_fano());
        assert_eq!(sing.cached_flags(), (Some(true), Some(false)));
    }

    #[test]
    fn halfspace_cuts() {
        let sq = enumerate_vertices(&square_h(), 2).unwrap();
        let right = intersect_halfspace(&sq, &Halfspace::from_ints(&[1, 0], 0)).unwrap();
        assert_eq!(right.vertices(), pts(&[&[0, -1], &[0, 1], &[1, -1], &[1, 1]]).as_slice());
        assert!(right.is_full_dimensional());
        let none = intersect_halfspace(&sq, &Halfspace::from_ints(&[1, 0], -2)).unwrap();
        assert!(none.is_empty());
        let edge = intersect_halfspace(&sq, &Halfspace::from_ints(&[1, 0], -1)).unwrap();
        assert_eq!(edge.affine_dim(), Some(1));
        assert_eq!(edge.vertices().len(), 2);
        let corner = intersect_halfspace(&sq, &Halfspace::from_ints(&[1, 1], -2)).unwrap();
        assert_eq!(corner.affine_dim(), Some(0));
        let cut = intersect_halfspace(&sq, &Halfspace::new(int_vector(&[2, 0]), ratio(1, 3))).unwrap();
        assert!(cut.vertices().contains(&vec![ratio(-1, 6), exact::int(1)]));
    }

    #[test]
    fn products_and_free_sums() {
        let seg = enumerate_facets(&pts(&[&[-1], &[1]])).unwrap();
        let sq = cartesian_product(&seg, &seg);
        assert_eq!(sq.vertices(), pts(&[&[-1, -1], &[-1, 1], &[1, -1], &[1, 1]]).as_slice());
        assert_eq!(sq.facets().len(), 4);
        let cross = free_sum(&seg, &seg).unwrap();
        assert_eq!(cross.vertices(), pts(&[&[-1, 0], &[0, -1], &[0, 1], &[1, 0]]).as_slice());
        let p2 = enumerate_facets(&pts(&[&[1, 0], &[0, 1], &[-1, -1]])).unwrap();
        let prism = cartesian_product(&polar_dual(&seg).unwrap(), &polar_dual(&p2).unwrap());
        assert_eq!(prism.vertices().len(), 6);
        assert_eq!(prism.facets().len(), 5);
        let lhs = polar_dual(&free_sum(&seg, &p2).unwrap()).unwrap();
        assert_eq!(lhs.vertices(), prism.vertices());
        assert_eq!(lhs.facets(), prism.facets());
    }
}
