//! Exact triangulation and integration of affine and quadratic integrands.
//!
//! Interior integrals are taken against Lebesgue measure `dv`. Boundary
//! integrals use the facet measure `dσ` fixed by `dv = ±dσ ∧ dℓ`, where `ℓ`
//! is the facet's defining affine function with primitive integer normal.
//! On a reflexive polytope every facet has `ℓ(0) = 1`, so the pyramid over a
//! facet simplex `S` with apex `0` has volume `σ(S)/n`.

mod engine;
mod triangulation;

use num_traits::{One, Signed, Zero};

use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::exact::{self, RatMatrix, RatVector, Scalar};
use crate::polytope::{intersect_halfspace, Halfspace, Polytope};

use engine::{Engine, Measure};
pub use triangulation::Apex;

/// `x ↦ ⟨coeffs, x⟩ + constant`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AffineForm {
    pub coeffs: RatVector,
    pub constant: Scalar,
}

impl AffineForm {
    pub fn new(coeffs: RatVector, constant: Scalar) -> Self {
        Self { coeffs, constant }
    }

    pub fn constant(n: usize, value: Scalar) -> Self {
        Self::new(vec![Scalar::zero(); n], value)
    }

    pub fn one(n: usize) -> Self {
        Self::constant(n, Scalar::one())
    }

    /// The coordinate function `x_i` (0-based `i`).
    pub fn coordinate(n: usize, i: usize) -> Self {
        let mut coeffs = vec![Scalar::zero(); n];
        coeffs[i] = Scalar::one();
        Self::new(coeffs, Scalar::zero())
    }

    pub fn dim(&self) -> usize {
        self.coeffs.len()
    }

    pub fn eval(&self, x: &[Scalar]) -> Scalar {
        exact::dot(&self.coeffs, x) + &self.constant
    }

    pub fn is_zero(&self) -> bool {
        self.constant.is_zero() && self.coeffs.iter().all(Zero::is_zero)
    }
}

/// The product `g(x)·h(x)` of two affine forms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuadraticIntegrand {
    pub g: AffineForm,
    pub h: AffineForm,
}

impl QuadraticIntegrand {
    pub fn new(g: AffineForm, h: AffineForm) -> Self {
        Self { g, h }
    }

    pub fn square(f: AffineForm) -> Self {
        Self::new(f.clone(), f)
    }

    pub fn eval(&self, x: &[Scalar]) -> Scalar {
        self.g.eval(x) * self.h.eval(x)
    }
}

/// An n-simplex in `R^n` with `signed_volume = det(p_1 − p_0, …, p_n − p_0)/n!`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Simplex {
    pub points: Vec<RatVector>,
    pub signed_volume: Scalar,
}

impl Simplex {
    pub fn new(points: Vec<RatVector>) -> Result<Self> {
        let n = points.len().saturating_sub(1);
        if let Some(bad) = points.iter().find(|p| p.len() != n) {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: bad.len(),
            });
        }
        let signed_volume = if n == 0 {
            Scalar::one()
        } else {
            let rows: Vec<RatVector> = points[1..].iter().map(|p| exact::sub(p, &points[0])).collect();
            let det = exact::determinant(&RatMatrix::from_rows(rows)?)?;
            det / Scalar::from_integer(factorial(n))
        };
        Ok(Self {
            points,
            signed_volume,
        })
    }

    pub fn dim(&self) -> usize {
        self.points.len() - 1
    }

    pub fn volume(&self) -> Scalar {
        self.signed_volume.abs()
    }

    pub fn centroid(&self) -> RatVector {
        let k = Scalar::from_integer((self.points.len() as u64).into());
        let mut c = vec![Scalar::zero(); self.dim()];
        for p in &self.points {
            for (ci, pi) in c.iter_mut().zip(p) {
                *ci += pi;
            }
        }
        c.into_iter().map(|x| x / &k).collect()
    }

    /// `∫_S g·h dv` by the vertex formula.
    pub fn integrate(&self, q: &QuadraticIntegrand) -> Scalar {
        let n = self.dim() as i64;
        let g: Vec<Scalar> = self.points.iter().map(|p| q.g.eval(p)).collect();
        let h: Vec<Scalar> = self.points.iter().map(|p| q.h.eval(p)).collect();
        let gh = g.iter().zip(&h).fold(Scalar::zero(), |acc, (a, b)| acc + a * b);
        let sg = g.iter().fold(Scalar::zero(), |acc, a| acc + a);
        let sh = h.iter().fold(Scalar::zero(), |acc, a| acc + a);
        self.volume() * (gh + sg * sh) / exact::int((n + 1) * (n + 2))
    }
}

pub(crate) fn factorial(n: usize) -> num_bigint::BigInt {
    (1..=n as u64).map(num_bigint::BigInt::from).product()
}

fn require_full(p: &Polytope) -> Result<()> {
    if p.is_full_dimensional() {
        Ok(())
    } else {
        Err(Error::Degenerate {
            ambient_dim: p.dim(),
            affine_dim: p.affine_dim().unwrap_or(0),
        })
    }
}

fn walk_interior(p: &Polytope, apex: Apex, emit: &mut dyn FnMut(&[usize])) {
    let facets = p.facet_sets();
    triangulation::walk_face(&BitSet::full(p.vertices().len()), p.dim(), &facets, apex, emit);
}

/// Vertex-index lists of the pulling triangulation of a full-dimensional
/// polytope.
pub fn triangulation_indices(p: &Polytope, apex: Apex) -> Result<Vec<Vec<usize>>> {
    require_full(p)?;
    let mut out = Vec::new();
    walk_interior(p, apex, &mut |s| out.push(s.to_vec()));
    Ok(out)
}

/// Triangulation of `p` coning from lexicographically smallest vertices.
pub fn triangulate(p: &Polytope) -> Result<Vec<Simplex>> {
    triangulate_with(p, Apex::LexMin)
}

pub fn triangulate_with(p: &Polytope, apex: Apex) -> Result<Vec<Simplex>> {
    triangulation_indices(p, apex)?
        .into_iter()
        .map(|s| Simplex::new(s.into_iter().map(|k| p.vertices()[k].clone()).collect()))
        .collect()
}

/// For each facet `j` (in `p.facets()` order), the (n−1)-simplices of its
/// pulling triangulation.
pub fn boundary_triangulation_indices(p: &Polytope, apex: Apex) -> Result<Vec<(usize, Vec<usize>)>> {
    require_full(p)?;
    let facets = p.facet_sets();
    let mut out = Vec::new();
    for (j, f) in facets.iter().enumerate() {
        triangulation::walk_face(f, p.dim() - 1, &facets, apex, &mut |s| out.push((j, s.to_vec())));
    }
    Ok(out)
}

/// Exact `∫_p f_a·f_b dv` for each requested pair of forms. Zero for every
/// pair when `p` is not full-dimensional.
pub fn integrate_products(
    p: &Polytope,
    forms: &[AffineForm],
    pairs: &[(usize, usize)],
    apex: Apex,
) -> Vec<Scalar> {
    if !p.is_full_dimensional() {
        return vec![Scalar::zero(); pairs.len()];
    }
    let engine = Engine::new(p.vertices(), Measure::Volume, forms, pairs);
    let mut sums = engine.sums();
    walk_interior(p, apex, &mut |s| engine.add(s, &mut sums));
    engine.finish(sums)
}

/// Volume, first and second moments from a single triangulation pass.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Moments {
    pub volume: Scalar,
    /// `b_i = ∫ x_i dv`
    pub first: RatVector,
    /// `c_ij = ∫ x_i x_j dv`
    pub second: RatMatrix,
}

pub fn moments(p: &Polytope) -> Moments {
    moments_with(p, Apex::LexMin)
}

pub fn moments_with(p: &Polytope, apex: Apex) -> Moments {
    let n = p.dim();
    let mut forms = vec![AffineForm::one(n)];
    forms.extend((0..n).map(|i| AffineForm::coordinate(n, i)));
    let mut pairs = vec![(0, 0)];
    pairs.extend((1..=n).map(|i| (0, i)));
    for i in 1..=n {
        for j in i..=n {
            pairs.push((i, j));
        }
    }
    let values = integrate_products(p, &forms, &pairs, apex);
    let mut it = values.into_iter();
    let volume = it.next().expect("volume pair");
    let first: RatVector = it.by_ref().take(n).collect();
    let mut second = vec![vec![Scalar::zero(); n]; n];
    for i in 0..n {
        for j in i..n {
            let v = it.next().expect("second moment pair");
            second[j][i] = v.clone();
            second[i][j] = v;
        }
    }
    Moments {
        volume,
        first,
        second: RatMatrix::from_rows(second).expect("square rows"),
    }
}

/// Exact Lebesgue volume; zero for lower-dimensional polytopes.
pub fn volume(p: &Polytope) -> Scalar {
    volume_with(p, Apex::LexMin)
}

pub fn volume_with(p: &Polytope, apex: Apex) -> Scalar {
    let n = p.dim();
    integrate_products(p, &[AffineForm::one(n)], &[(0, 0)], apex)
        .pop()
        .expect("one pair")
}

/// `b_i = ∫_p x_i dv`.
pub fn moment_first(p: &Polytope) -> RatVector {
    let n = p.dim();
    let mut forms = vec![AffineForm::one(n)];
    forms.extend((0..n).map(|i| AffineForm::coordinate(n, i)));
    let pairs: Vec<(usize, usize)> = (1..=n).map(|i| (0, i)).collect();
    integrate_products(p, &forms, &pairs, Apex::LexMin)
}

/// `c_ij = ∫_p x_i x_j dv`.
pub fn moment_second(p: &Polytope) -> RatMatrix {
    moments(p).second
}

/// `∫_p g·h dv`.
pub fn integrate_affine_product(p: &Polytope, q: &QuadraticIntegrand) -> Scalar {
    integrate_products(p, &[q.g.clone(), q.h.clone()], &[(0, 1)], Apex::LexMin)
        .pop()
        .expect("one pair")
}

fn require_reflexive(p: &Polytope) -> Result<()> {
    if p.is_reflexive() {
        Ok(())
    } else {
        Err(Error::NotReflexive)
    }
}

/// `∫ f_a dσ` over the facets of `region` listed in `facets`, each of which
/// must read `⟨x, u⟩ + 1 ≥ 0` with `u` primitive.
fn integrate_facets(
    region: &Polytope,
    facets: &[usize],
    forms: &[AffineForm],
    apex: Apex,
) -> Result<Vec<Scalar>> {
    let n = region.dim();
    if facets
        .iter()
        .any(|&j| !(region.facets()[j].offset.is_one() && region.facets()[j].is_lattice_primitive()))
    {
        return Err(Error::NotReflexive);
    }
    let mut all = vec![AffineForm::one(n)];
    all.extend(forms.iter().cloned());
    let pairs: Vec<(usize, usize)> = (1..all.len()).map(|a| (0, a)).collect();
    let engine = Engine::new(region.vertices(), Measure::Facet, &all, &pairs);
    let mut sums = engine.sums();
    let sets = region.facet_sets();
    for &j in facets {
        triangulation::walk_face(&sets[j], n - 1, &sets, apex, &mut |s| engine.add(s, &mut sums));
    }
    Ok(engine.finish(sums))
}

/// `∫_{∂p} f dσ` for each form, on a reflexive polytope.
pub fn integrate_boundary(p: &Polytope, forms: &[AffineForm], apex: Apex) -> Result<Vec<Scalar>> {
    require_reflexive(p)?;
    let all: Vec<usize> = (0..p.facets().len()).collect();
    integrate_facets(p, &all, forms, apex)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundaryMoments {
    /// `Vol(∂P) = ∫_{∂P} dσ`
    pub volume: Scalar,
    /// `∫_{∂P} x_i dσ`
    pub first: RatVector,
}

pub fn boundary_moments(p: &Polytope, apex: Apex) -> Result<BoundaryMoments> {
    let n = p.dim();
    let mut forms = vec![AffineForm::one(n)];
    forms.extend((0..n).map(|i| AffineForm::coordinate(n, i)));
    let mut values = integrate_boundary(p, &forms, apex)?.into_iter();
    let volume = values.next().expect("volume");
    Ok(BoundaryMoments {
        volume,
        first: values.collect(),
    })
}

pub fn boundary_volume(p: &Polytope) -> Result<Scalar> {
    Ok(boundary_moments(p, Apex::LexMin)?.volume)
}

pub fn boundary_moment_first(p: &Polytope) -> Result<RatVector> {
    Ok(boundary_moments(p, Apex::LexMin)?.first)
}

/// `f(x) = max(0, ⟨u, x⟩ + d)`, with `(u, d) ≠ 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplePLFunction {
    pub u: RatVector,
    pub d: Scalar,
}

impl SimplePLFunction {
    pub fn new(u: RatVector, d: Scalar) -> Self {
        debug_assert!(!(d.is_zero() && u.iter().all(Zero::is_zero)));
        Self { u, d }
    }

    /// The affine piece `⟨u, x⟩ + d`.
    pub fn affine(&self) -> AffineForm {
        AffineForm::new(self.u.clone(), self.d.clone())
    }

    pub fn eval(&self, x: &[Scalar]) -> Scalar {
        let v = self.affine().eval(x);
        if v.is_positive() {
            v
        } else {
            Scalar::zero()
        }
    }
}

/// Integrals of a simple PL function `f = max(0, ℓ)` over a reflexive `P`.
#[derive(Clone, Debug)]
pub struct PlIntegrals {
    /// `R = P ∩ {ℓ ≥ 0}`, where `f = ℓ`.
    pub region: Polytope,
    /// `∫_P f dv`
    pub integral: Scalar,
    /// `∫_P x_i f dv`
    pub weighted: RatVector,
    /// `∫_{∂P} f dσ`
    pub boundary: Scalar,
}

impl PlIntegrals {
    /// `∫_P g·f dv` for an affine `g`, from the stored moments.
    pub fn against(&self, g: &AffineForm) -> Scalar {
        exact::dot(&g.coeffs, &self.weighted) + &g.constant * &self.integral
    }
}

/// Splits `p` by the kink hyperplane: interior integrals run over `R`, and
/// the boundary integral over the facets of `R` that lie on facets of `p`.
pub fn integrate_pl(p: &Polytope, f: &SimplePLFunction) -> Result<PlIntegrals> {
    integrate_pl_with(p, f, Apex::LexMin)
}

pub fn integrate_pl_with(p: &Polytope, f: &SimplePLFunction, apex: Apex) -> Result<PlIntegrals> {
    require_reflexive(p)?;
    let n = p.dim();
    let region = intersect_halfspace(p, &Halfspace::new(f.u.clone(), f.d.clone()))?;
    if !region.is_full_dimensional() {
        return Ok(PlIntegrals {
            region,
            integral: Scalar::zero(),
            weighted: vec![Scalar::zero(); n],
            boundary: Scalar::zero(),
        });
    }
    let ell = f.affine();
    let mut forms = vec![AffineForm::one(n), ell.clone()];
    forms.extend((0..n).map(|i| AffineForm::coordinate(n, i)));
    let mut pairs = vec![(0, 1)];
    pairs.extend((2..n + 2).map(|i| (1, i)));
    let mut interior = integrate_products(&region, &forms, &pairs, apex).into_iter();
    let integral = interior.next().expect("integral");
    let weighted: RatVector = interior.collect();

    let on_boundary: Vec<usize> = region
        .facets()
        .iter()
        .enumerate()
        .filter(|(_, h)| p.facets().contains(h))
        .map(|(j, _)| j)
        .collect();
    let boundary = integrate_facets(&region, &on_boundary, &[ell], apex)?
        .pop()
        .expect("one form");
    Ok(PlIntegrals {
        region,
        integral,
        weighted,
        boundary,
    })
}
