#![allow(dead_code)]

pub mod grid;

use toric_kstab::exact::{int, int_vector, RatVector};
use toric_kstab::families::{projective_space_polytope, xr_fano_polytope};
use toric_kstab::polytope::{enumerate_facets, polar_dual, Polytope};

pub fn hull(points: &[&[i64]]) -> Polytope {
    enumerate_facets(&points.iter().map(|p| int_vector(p)).collect::<Vec<_>>()).unwrap()
}

pub fn cube(n: usize) -> Polytope {
    let pts: Vec<RatVector> = (0..1u32 << n)
        .map(|mask| {
            (0..n)
                .map(|i| if mask >> i & 1 == 1 { int(1) } else { int(-1) })
                .collect()
        })
        .collect();
    enumerate_facets(&pts).unwrap()
}

pub fn moment(delta: &Polytope) -> Polytope {
    polar_dual(delta).unwrap()
}

pub fn p1() -> Polytope {
    moment(&projective_space_polytope(1).unwrap())
}

pub fn p2() -> Polytope {
    moment(&projective_space_polytope(2).unwrap())
}

pub fn x1() -> Polytope {
    moment(&xr_fano_polytope(1).unwrap())
}

/// Blow-up of ℙ² at a point; its potential is not zero.
pub fn blowup_p2() -> Polytope {
    moment(&hull(&[&[1, 0], &[0, 1], &[-1, -1], &[1, 1]]))
}

/// Reflexive polytopes used across the property tests: moment polytopes and
/// their Fano duals.
pub fn reflexive_zoo() -> Vec<(&'static str, Polytope)> {
    let mut zoo = vec![
        ("[-1,1]", cube(1)),
        ("[-1,1]^2", cube(2)),
        ("[-1,1]^3", cube(3)),
        ("P(P2)", p2()),
        ("P(P3)", moment(&projective_space_polytope(3).unwrap())),
        ("P(Bl P2)", blowup_p2()),
        ("hexagon", hull(&[&[1, 0], &[0, 1], &[-1, 1], &[-1, 0], &[0, -1], &[1, -1]])),
        ("P(1,1,2) dual", moment(&hull(&[&[1, 0], &[0, 1], &[-1, -2]]))),
        ("P(X1)", x1()),
    ];
    let duals: Vec<(&'static str, Polytope)> = zoo
        .iter()
        .filter(|(name, _)| *name != "P(X1)")
        .map(|(name, p)| (*name, polar_dual(p).unwrap()))
        .collect();
    zoo.extend(duals);
    zoo
}
