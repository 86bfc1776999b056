//! Reference data for `𝔛₂` bundled with the crate: the 500 vertices of its
//! moment polytope, a reference vertex listing of `P⁻`, and exact reference
//! values for the moments, the potential and the instability criterion.
//!
//! The reference potential has no `x_8` term; with `a_8 = 0` it satisfies
//! `c = −⟨a, b⟩ / V` exactly.

use std::collections::BTreeMap;

use num_traits::Zero;

use crate::exact::{parse_scalar, RatMatrix, RatVector, Scalar};
use crate::io::parse_points;
use crate::kstability::AffinePotential;

const MOMENT_VERTICES: &str = include_str!("../data/x2_moment_vertices.poly");
const PMINUS_REFERENCE: &str = include_str!("../data/x2_pminus_reference.poly");
const REFERENCE_VALUES: &str = include_str!("../data/x2_reference.txt");

/// Vertices of the moment polytope of `𝔛₂`, in listing order.
pub fn x2_moment_vertices() -> Vec<RatVector> {
    parse_points(MOMENT_VERTICES).expect("bundled vertex list parses").1
}

/// Reference listing of the vertices of `P⁻` for `𝔛₂` (rows with a missing
/// coordinate are left out).
pub fn x2_pminus_reference() -> Vec<RatVector> {
    parse_points(PMINUS_REFERENCE).expect("bundled vertex list parses").1
}

pub fn x2_moment_vertices_text() -> &'static str {
    MOMENT_VERTICES
}

#[derive(Clone, Debug)]
pub struct X2Reference {
    /// Reference value for `Vol(P)`.
    pub b0: Scalar,
    pub b: RatVector,
    pub c: RatMatrix,
    /// `theta_a[i]` is `None` for the missing coefficient.
    pub theta_a: Vec<Option<Scalar>>,
    pub theta_c: Scalar,
    pub mabuchi: Scalar,
    pub mabuchi_approx: String,
    pub mabuchi_argmax: RatVector,
    pub one_minus_c: Scalar,
    pub one_minus_c_approx: String,
    pub pminus_vertex_count: usize,
    pub pminus_volume: Scalar,
    pub pminus_volume_approx: String,
    pub pminus_integral: Scalar,
    pub pminus_integral_approx: String,
    pub lhs_minus_rhs: Scalar,
    pub lhs_minus_rhs_approx: String,
}

impl X2Reference {
    /// The reference potential with the missing coefficients set to zero.
    pub fn potential(&self) -> AffinePotential {
        AffinePotential {
            a: self
                .theta_a
                .iter()
                .map(|x| x.clone().unwrap_or_else(Scalar::zero))
                .collect(),
            c: self.theta_c.clone(),
        }
    }
}

pub fn x2_reference() -> X2Reference {
    let map: BTreeMap<&str, &str> = REFERENCE_VALUES
        .lines()
        .filter(|l| !l.trim_start().starts_with('#') && !l.trim().is_empty())
        .map(|l| {
            let (k, v) = l.split_once(" = ").expect("`key = value` lines");
            (k.trim(), v.trim())
        })
        .collect();
    let get = |k: &str| *map.get(k).unwrap_or_else(|| panic!("reference key `{k}`"));
    let q = |k: &str| parse_scalar(get(k)).unwrap_or_else(|e| panic!("reference `{k}`: {e}"));
    let n = 10;
    let b: RatVector = (1..=n).map(|i| q(&format!("b{i}"))).collect();
    let mut c = vec![vec![Scalar::zero(); n]; n];
    for i in 1..=n {
        for j in i..=n {
            let v = q(&format!("c{i}_{j}"));
            c[j - 1][i - 1] = v.clone();
            c[i - 1][j - 1] = v;
        }
    }
    let theta_a = (1..=n)
        .map(|i| map.get(format!("theta_a{i}").as_str()).map(|v| parse_scalar(v).expect("coefficient")))
        .collect();
    let argmax = get("mabuchi_argmax")
        .split_whitespace()
        .map(|t| parse_scalar(t).expect("argmax entry"))
        .collect();
    X2Reference {
        b0: q("b0"),
        b,
        c: RatMatrix::from_rows(c).expect("square"),
        theta_a,
        theta_c: q("theta_c"),
        mabuchi: q("mabuchi"),
        mabuchi_approx: get("mabuchi_approx").to_string(),
        mabuchi_argmax: argmax,
        one_minus_c: q("one_minus_c"),
        one_minus_c_approx: get("one_minus_c_approx").to_string(),
        pminus_vertex_count: get("pminus_vertex_count").parse().expect("count"),
        pminus_volume: q("pminus_volume"),
        pminus_volume_approx: get("pminus_volume_approx").to_string(),
        pminus_integral: q("pminus_integral"),
        pminus_integral_approx: get("pminus_integral_approx").to_string(),
        lhs_minus_rhs: q("lhs_minus_rhs"),
        lhs_minus_rhs_approx: get("lhs_minus_rhs_approx").to_string(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{dot, int, is_canonical};
    use num_traits::One;

    #[test]
    fn bundled_data_is_well_formed() {
        assert_eq!(x2_moment_vertices().len(), 500);
        assert_eq!(x2_pminus_reference().len(), 347);
        let r = x2_reference();
        assert!(r.theta_a[7].is_none());
        assert_eq!(r.theta_a.iter().filter(|a| a.is_some()).count(), 9);
        assert!(is_canonical(&r.pminus_volume));
        assert_eq!(r.one_minus_c, Scalar::one() - &r.theta_c);
        assert_eq!(r.mabuchi_argmax.len(), 10);
        assert_eq!(r.c[(8, 9)], crate::exact::ratio(2238581, 268800));
    }

    #[test]
    fn reference_constant_term_is_consistent_with_zero_a8() {
        let r = x2_reference();
        let theta = r.potential();
        assert_eq!(theta.c, -dot(&theta.a, &r.b) / &r.b0);
        assert_eq!(theta.eval(&r.mabuchi_argmax), r.mabuchi);
        let rhs = &r.pminus_integral / &r.pminus_volume;
        assert_eq!(&r.one_minus_c - rhs, r.lhs_minus_rhs);
        assert!(r.lhs_minus_rhs < int(0));
    }
}
