//! Relative K-stability indicators of a toric Fano manifold from its moment
//! polytope `P`.
//!
//! The potential `θ(x) = ⟨a, x⟩ + c` is the unique affine function with
//! `L_P(1) = L_P(x_i) = 0`, where
//!
//! ```text
//! L_P(f) = ∫_{∂P} f dσ − ∫_P (S̄ + θ) f dv,   S̄ = Vol(∂P) / Vol(P).
//! ```
//!
//! Using `Vol(∂P) = n·Vol(P)` and `∫_{∂P} x_i dσ = (n+1)·b_i` these
//! conditions become the linear system
//! `Σ_j (c_ij − b_i b_j / V) a_j = b_i` with `c = −⟨a, b⟩ / V`.
//!
//! The Mabuchi constant `M = max_P θ` decides relative Ding stability:
//! `M ≤ 1` is sufficient for relative K-polystability and `M > 1` is
//! equivalent to relative Ding instability. Independently, with
//! `P⁻ = {x ∈ P : θ(x) ≥ 1}` of positive volume, the inequality
//! `1 − c < ∫_{P⁻} (1 − θ)² dv / Vol(P⁻)` implies relative K-instability.

use std::time::{Duration, Instant};

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exact::{self, RatMatrix, RatVector, Scalar};
use crate::integrate::{
    self, AffineForm, Apex, Moments, PlIntegrals, QuadraticIntegrand, SimplePLFunction,
};
use crate::polytope::{intersect_halfspace, polar_dual, Halfspace, Polytope};

/// `θ(x) = ⟨a, x⟩ + c`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AffinePotential {
    pub a: RatVector,
    pub c: Scalar,
}

impl AffinePotential {
    pub fn zero(n: usize) -> Self {
        Self {
            a: vec![Scalar::zero(); n],
            c: Scalar::zero(),
        }
    }

    pub fn eval(&self, x: &[Scalar]) -> Scalar {
        exact::dot(&self.a, x) + &self.c
    }

    pub fn form(&self) -> AffineForm {
        AffineForm::new(self.a.clone(), self.c.clone())
    }

    /// `1 − θ`.
    pub fn complement(&self) -> AffineForm {
        AffineForm::new(
            self.a.iter().map(|x| -x).collect(),
            Scalar::one() - &self.c,
        )
    }

    /// `max(0, θ − 1)`, the candidate destabilizer.
    pub fn excess(&self) -> SimplePLFunction {
        SimplePLFunction::new(self.a.clone(), &self.c - Scalar::one())
    }
}

fn require_reflexive(p: &Polytope) -> Result<()> {
    if p.is_reflexive() {
        Ok(())
    } else {
        Err(Error::NotReflexive)
    }
}

/// `S̄ = Vol(∂P) / Vol(P)`; equal to `n` on reflexive polytopes.
pub fn average_scalar_curvature(p: &Polytope) -> Result<Scalar> {
    require_reflexive(p)?;
    Ok(integrate::boundary_volume(p)? / integrate::volume(p))
}

pub fn solve_potential(p: &Polytope) -> Result<AffinePotential> {
    require_reflexive(p)?;
    solve_potential_from(&integrate::moments(p))
}

/// Solves for `θ` from precomputed moments of a reflexive polytope.
pub fn solve_potential_from(m: &Moments) -> Result<AffinePotential> {
    let n = m.first.len();
    let v = &m.volume;
    if !v.is_positive() {
        return Err(Error::SingularMomentMatrix);
    }
    let b = &m.first;
    if b.iter().all(Zero::is_zero) {
        return Ok(AffinePotential::zero(n));
    }
    let rows: Vec<RatVector> = (0..n)
        .map(|i| (0..n).map(|j| &m.second[(i, j)] - &b[i] * &b[j] / v).collect())
        .collect();
    let a = exact::solve_linear_system(&RatMatrix::from_rows(rows)?, b).map_err(|e| match e {
        Error::SingularMatrix => Error::SingularMomentMatrix,
        other => other,
    })?;
    let c = -exact::dot(&a, b) / v;
    Ok(AffinePotential { a, c })
}

/// A test function for `L_P`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TestFunction {
    Affine(AffineForm),
    SimplePL(SimplePLFunction),
}

/// `L_P(f)`, with the boundary term integrated facet by facet.
pub fn donaldson_futaki(p: &Polytope, theta: &AffinePotential, f: &TestFunction) -> Result<Scalar> {
    require_reflexive(p)?;
    let sbar = average_scalar_curvature(p)?;
    let weight = AffineForm::new(theta.a.clone(), &theta.c + &sbar);
    match f {
        TestFunction::Affine(f) => {
            let boundary = integrate::integrate_boundary(p, std::slice::from_ref(f), Apex::LexMin)?
                .pop()
                .expect("one form");
            let interior = integrate::integrate_affine_product(
                p,
                &QuadraticIntegrand::new(weight, f.clone()),
            );
            Ok(boundary - interior)
        }
        TestFunction::SimplePL(f) => {
            let r = integrate::integrate_pl(p, f)?;
            Ok(pl_value(&r, &weight))
        }
    }
}

fn pl_value(r: &PlIntegrals, weight: &AffineForm) -> Scalar {
    &r.boundary - r.against(weight)
}

/// `max_P θ` and the lexicographically smallest vertex attaining it.
pub fn mabuchi_constant(p: &Polytope, theta: &AffinePotential) -> (Scalar, RatVector) {
    let mut best: Option<(Scalar, &RatVector)> = None;
    for v in p.vertices() {
        let val = theta.eval(v);
        if best.as_ref().is_none_or(|(b, _)| val > *b) {
            best = Some((val, v));
        }
    }
    let (m, v) = best.expect("nonempty polytope");
    (m, v.clone())
}

/// `P⁻ = P ∩ {θ ≥ 1}`; may be empty or lower-dimensional.
pub fn pminus(p: &Polytope, theta: &AffinePotential) -> Result<Polytope> {
    intersect_halfspace(p, &Halfspace::new(theta.a.clone(), &theta.c - Scalar::one()))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CriterionResult {
    pub vol_pminus: Scalar,
    /// `∫_{P⁻} (1 − θ)² dv`
    pub integral: Scalar,
    /// `1 − c`
    pub lhs: Scalar,
    /// `integral / vol_pminus`; `None` when `Vol(P⁻) = 0`.
    pub rhs: Option<Scalar>,
    pub satisfied: bool,
    pub pminus_vertex_count: usize,
}

impl CriterionResult {
    pub fn applicable(&self) -> bool {
        self.rhs.is_some()
    }

    pub fn lhs_minus_rhs(&self) -> Option<Scalar> {
        self.rhs.as_ref().map(|r| &self.lhs - r)
    }
}

pub fn instability_test(p: &Polytope, theta: &AffinePotential) -> Result<CriterionResult> {
    let region = pminus(p, theta)?;
    Ok(criterion_on(&region, theta))
}

/// The criterion evaluated on an already computed `P⁻`.
pub fn criterion_on(region: &Polytope, theta: &AffinePotential) -> CriterionResult {
    let n = region.dim();
    let forms = [AffineForm::one(n), theta.complement()];
    let mut values =
        integrate::integrate_products(region, &forms, &[(0, 0), (1, 1)], Apex::LexMin).into_iter();
    let vol_pminus = values.next().expect("volume");
    let integral = values.next().expect("integral");
    let lhs = Scalar::one() - &theta.c;
    let rhs = vol_pminus.is_positive().then(|| &integral / &vol_pminus);
    let satisfied = rhs.as_ref().is_some_and(|r| lhs < *r);
    CriterionResult {
        vol_pminus,
        integral,
        lhs,
        rhs,
        satisfied,
        pminus_vertex_count: region.vertices().len(),
    }
}

/// Whether the input is the Fano polytope `Δ` or the moment polytope `P`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum InputKind {
    FanoPolytope,
    MomentPolytope,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MabuchiConstant {
    pub value: Scalar,
    pub argmax: RatVector,
}

impl MabuchiConstant {
    pub fn approx(&self, digits: usize) -> String {
        exact::to_decimal_string(&self.value, digits)
    }
}

/// Value of `L_P` on the candidate `max(0, θ − 1)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Destabilizer {
    pub candidate: SimplePLFunction,
    pub value: Scalar,
}

#[derive(Clone, Debug, Default)]
pub struct Timing {
    pub moments: Duration,
    pub pminus: Duration,
    pub criterion: Duration,
    pub destabilizer: Duration,
    pub total: Duration,
}

#[derive(Clone, Debug)]
pub struct StabilityCertificate {
    pub kind: InputKind,
    /// `Δ` when the input was a Fano polytope.
    pub fano: Option<Polytope>,
    pub moment_polytope: Polytope,
    pub reflexive: bool,
    /// Smoothness of the Fano polytope; computed from the dual when the
    /// input was `P`.
    pub smooth: bool,
    pub warnings: Vec<String>,
    pub moments: Moments,
    pub potential: AffinePotential,
    pub sbar: Scalar,
    pub mabuchi: MabuchiConstant,
    pub criterion: CriterionResult,
    pub destabilizer: Option<Destabilizer>,
    pub timing: Timing,
}

impl StabilityCertificate {
    /// `M ≤ 1`.
    pub fn sufficient_polystable(&self) -> bool {
        self.mabuchi.value <= Scalar::one()
    }

    /// `M > 1`.
    pub fn ding_unstable(&self) -> bool {
        !self.sufficient_polystable()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct AnalyzeOptions {
    /// Evaluate `L_P` on `max(0, θ − 1)` when `P⁻` is full-dimensional.
    pub destabilizer: bool,
}

impl Default for AnalyzeOptions {
    fn default() -> Self {
        Self { destabilizer: true }
    }
}

pub fn analyze(input: &Polytope, kind: InputKind) -> Result<StabilityCertificate> {
    analyze_with(input, kind, AnalyzeOptions::default())
}

pub fn analyze_with(input: &Polytope, kind: InputKind, opts: AnalyzeOptions) -> Result<StabilityCertificate> {
    let start = Instant::now();
    let mut timing = Timing::default();
    let (fano, p) = match kind {
        InputKind::FanoPolytope => {
            if !input.is_reflexive() {
                return Err(Error::NotReflexive);
            }
            (Some(input.clone()), polar_dual(input)?)
        }
        InputKind::MomentPolytope => {
            if !input.is_reflexive() {
                return Err(Error::NotReflexive);
            }
            (None, input.clone())
        }
    };
    let smooth = match &fano {
        Some(d) => d.is_smooth_fano(),
        None => polar_dual(&p)?.is_smooth_fano(),
    };
    let mut warnings = Vec::new();
    if !smooth {
        warnings.push("reflexive but not smooth: the toric variety is singular".to_string());
    }

    let t = Instant::now();
    let moments = integrate::moments(&p);
    let sbar = integrate::boundary_volume(&p)? / &moments.volume;
    let potential = solve_potential_from(&moments)?;
    timing.moments = t.elapsed();

    let (value, argmax) = mabuchi_constant(&p, &potential);
    let mabuchi = MabuchiConstant { value, argmax };

    let t = Instant::now();
    let region = pminus(&p, &potential)?;
    timing.pminus = t.elapsed();

    let t = Instant::now();
    let criterion = criterion_on(&region, &potential);
    timing.criterion = t.elapsed();

    let t = Instant::now();
    let destabilizer = if opts.destabilizer && criterion.applicable() {
        let candidate = potential.excess();
        let value = donaldson_futaki(&p, &potential, &TestFunction::SimplePL(candidate.clone()))?;
        Some(Destabilizer { candidate, value })
    } else {
        None
    };
    timing.destabilizer = t.elapsed();
    timing.total = start.elapsed();

    Ok(StabilityCertificate {
        kind,
        fano,
        reflexive: true,
        smooth,
        warnings,
        moment_polytope: p,
        moments,
        potential,
        sbar,
        mabuchi,
        criterion,
        destabilizer,
        timing,
    })
}
