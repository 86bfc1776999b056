//! Exact accumulation of `∫ f_a · f_b` over a union of simplices.
//!
//! On an m-simplex `S` with vertices `p_0..p_m` and affine `g`, `h`,
//!
//! ```text
//! ∫_S g·h = μ(S) / ((m+1)(m+2)) · [Σ_k g(p_k) h(p_k) + (Σ_k g(p_k)) (Σ_k h(p_k))]
//! ```
//!
//! Taking `g = 1` gives `μ(S)·mean(h)`, and `g = h = 1` gives `μ(S)`.
//!
//! Each vertex is stored as an integer row `x_k` over a positive integer
//! `δ_k` (so the vertex is `x_k / δ_k`), and each form `f_a` is scaled by an
//! integer `E_a` so that `E_a·f_a(p_k) = y_ka / δ_k` with `y_ka` integral.
//! A simplex contributes `|det(rows)| · bracket` over the key
//! `Πδ_k · Λ²`, where `Λ = lcm(δ_k)`. Contributions sharing a key are summed
//! as integers; division happens once per key at the end. Lattice simplices
//! run in `i128` with a checked fallback to `BigInt`.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::exact::{clear_denominators, int_determinant, small_determinant, RatVector, Scalar};

use super::AffineForm;

/// How the measure of a simplex is read off its vertex rows.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum Measure {
    /// Full-dimensional simplex in `R^n`: rows `[δ_k, x_k]`,
    /// `|det| / Πδ_k = n!·Vol(S)`.
    Volume,
    /// Simplex on a hyperplane `⟨x, u⟩ + 1 = 0` with `u` primitive: rows
    /// `x_k`, `|det| / Πδ_k = (n−1)!·σ(S)`.
    Facet,
}

pub(crate) struct Engine {
    m: usize,
    rows: Vec<Vec<BigInt>>,
    small_rows: Option<Vec<Vec<i128>>>,
    delta: Vec<BigInt>,
    values: Vec<Vec<BigInt>>,
    small_values: Option<Vec<Vec<i128>>>,
    form_scale: Vec<BigInt>,
    pairs: Vec<(usize, usize)>,
}

pub(crate) struct Sums {
    small: Vec<i128>,
    big: HashMap<BigInt, Vec<BigInt>>,
    pub simplices: usize,
}

fn to_small(v: &[BigInt]) -> Option<Vec<i128>> {
    v.iter().map(ToPrimitive::to_i128).collect()
}

impl Engine {
    pub(crate) fn new(
        vertices: &[RatVector],
        measure: Measure,
        forms: &[AffineForm],
        pairs: &[(usize, usize)],
    ) -> Self {
        let n = vertices.first().map_or(0, Vec::len);
        let m = match measure {
            Measure::Volume => n,
            Measure::Facet => n - 1,
        };
        let mut rows = Vec::with_capacity(vertices.len());
        let mut delta = Vec::with_capacity(vertices.len());
        let mut numerators = Vec::with_capacity(vertices.len());
        for v in vertices {
            let (x, d) = clear_denominators(v);
            let row = match measure {
                Measure::Volume => std::iter::once(d.clone()).chain(x.iter().cloned()).collect(),
                Measure::Facet => x.clone(),
            };
            rows.push(row);
            delta.push(d);
            numerators.push(x);
        }
        let mut form_scale = Vec::with_capacity(forms.len());
        let mut scaled_forms = Vec::with_capacity(forms.len());
        for f in forms {
            let mut all = f.coeffs.clone();
            all.push(f.constant.clone());
            let (ints, e) = clear_denominators(&all);
            scaled_forms.push(ints);
            form_scale.push(e);
        }
        let values: Vec<Vec<BigInt>> = numerators
            .iter()
            .zip(&delta)
            .map(|(x, d)| {
                scaled_forms
                    .iter()
                    .map(|f| {
                        let lin: BigInt = f[..n].iter().zip(x).map(|(a, b)| a * b).sum();
                        lin + &f[n] * d
                    })
                    .collect()
            })
            .collect();
        let lattice = delta.iter().all(One::is_one);
        let small_rows = if lattice {
            rows.iter().map(|r| to_small(r)).collect()
        } else {
            None
        };
        let small_values = if lattice {
            values.iter().map(|r| to_small(r)).collect()
        } else {
            None
        };
        Self {
            m,
            rows,
            small_rows,
            delta,
            values,
            small_values,
            form_scale,
            pairs: pairs.to_vec(),
        }
    }

    pub(crate) fn sums(&self) -> Sums {
        Sums {
            small: vec![0; self.pairs.len()],
            big: HashMap::new(),
            simplices: 0,
        }
    }

    pub(crate) fn add(&self, simplex: &[usize], sums: &mut Sums) {
        debug_assert_eq!(simplex.len(), self.m + 1);
        sums.simplices += 1;
        if self.add_small(simplex, sums).is_none() {
            self.add_big(simplex, sums);
        }
    }

    fn add_small(&self, simplex: &[usize], sums: &mut Sums) -> Option<()> {
        let (rows, values) = (self.small_rows.as_ref()?, self.small_values.as_ref()?);
        let mut mat: Vec<Vec<i128>> = simplex.iter().map(|&k| rows[k].clone()).collect();
        let det = small_determinant(&mut mat)?.checked_abs()?;
        let mut contrib = Vec::with_capacity(self.pairs.len());
        for &(a, b) in &self.pairs {
            let (mut s, mut ta, mut tb) = (0i128, 0i128, 0i128);
            for &k in simplex {
                let (ya, yb) = (values[k][a], values[k][b]);
                s = s.checked_add(ya.checked_mul(yb)?)?;
                ta = ta.checked_add(ya)?;
                tb = tb.checked_add(yb)?;
            }
            s = s.checked_add(ta.checked_mul(tb)?)?;
            contrib.push(det.checked_mul(s)?);
        }
        for (i, c) in contrib.into_iter().enumerate() {
            match sums.small[i].checked_add(c) {
                Some(v) => sums.small[i] = v,
                None => {
                    let len = self.pairs.len();
                    let entry = sums
                        .big
                        .entry(BigInt::one())
                        .or_insert_with(|| vec![BigInt::zero(); len]);
                    entry[i] += sums.small[i];
                    sums.small[i] = c;
                }
            }
        }
        Some(())
    }

    fn add_big(&self, simplex: &[usize], sums: &mut Sums) {
        let mat: Vec<Vec<BigInt>> = simplex.iter().map(|&k| self.rows[k].clone()).collect();
        let det = int_determinant(mat).abs();
        if det.is_zero() {
            return;
        }
        let lambda = simplex
            .iter()
            .fold(BigInt::one(), |acc, &k| acc.lcm(&self.delta[k]));
        let prod: BigInt = simplex.iter().map(|&k| &self.delta[k]).product();
        let key = prod * &lambda * &lambda;
        let t: Vec<Vec<BigInt>> = simplex
            .iter()
            .map(|&k| {
                let f = &lambda / &self.delta[k];
                if f.is_one() {
                    self.values[k].clone()
                } else {
                    self.values[k].iter().map(|y| y * &f).collect()
                }
            })
            .collect();
        let entry = sums
            .big
            .entry(key)
            .or_insert_with(|| vec![BigInt::zero(); self.pairs.len()]);
        for (slot, &(a, b)) in entry.iter_mut().zip(&self.pairs) {
            let mut s = BigInt::zero();
            let (mut ta, mut tb) = (BigInt::zero(), BigInt::zero());
            for tk in &t {
                s += &tk[a] * &tk[b];
                ta += &tk[a];
                tb += &tk[b];
            }
            s += ta * tb;
            *slot += &det * s;
        }
    }

    /// Exact integrals, one per requested pair.
    pub(crate) fn finish(&self, sums: Sums) -> Vec<Scalar> {
        let m = self.m as u64;
        let factorial: BigInt = (1..=m).map(BigInt::from).product();
        let norm = factorial * BigInt::from((m + 1) * (m + 2));
        let mut totals: Vec<Scalar> = sums
            .small
            .iter()
            .map(|&s| Scalar::from_integer(BigInt::from(s)))
            .collect();
        let mut keys: Vec<&BigInt> = sums.big.keys().collect();
        keys.sort();
        for key in keys {
            for (t, num) in totals.iter_mut().zip(&sums.big[key]) {
                if !num.is_zero() {
                    *t += Scalar::new(num.clone(), key.clone());
                }
            }
        }
        totals
            .into_iter()
            .zip(&self.pairs)
            .map(|(t, &(a, b))| {
                let d = &norm * &self.form_scale[a] * &self.form_scale[b];
                t / Scalar::from_integer(d)
            })
            .collect()
    }
}
