mod common;

use common::*;
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;
use toric_kstab::exact::{
    determinant, format_scalar, int, parse_scalar, ratio, solve_linear_system, RatMatrix, RatVector, Scalar,
};
use toric_kstab::integrate::{
    boundary_moments, integrate_boundary, moments, moments_with, AffineForm, Apex, QuadraticIntegrand, Simplex,
};
use toric_kstab::io::{parse_points, serialize_points};
use toric_kstab::kstability::{donaldson_futaki, mabuchi_constant, solve_potential, TestFunction};
use toric_kstab::polytope::{
    cartesian_product, enumerate_facets, free_sum, intersect_halfspace, polar_dual, Halfspace, Polytope,
};

fn small_rational() -> impl Strategy<Value = Scalar> {
    (-20i64..=20, 1i64..=6).prop_map(|(p, q)| ratio(p, q))
}

fn int_matrix(n: usize) -> impl Strategy<Value = Vec<Vec<i64>>> {
    prop::collection::vec(prop::collection::vec(-5i64..=5, n), n)
}

fn rat_matrix(rows: &[Vec<i64>]) -> RatMatrix {
    RatMatrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| int(x)).collect()).collect()).unwrap()
}

/// Lattice polygon with the origin strictly inside: hull of the given points
/// plus a small cross around the origin.
fn lattice_polygon() -> impl Strategy<Value = Polytope> {
    prop::collection::vec((-4i64..=4, -4i64..=4), 0..8).prop_map(|extra| {
        let mut pts: Vec<RatVector> = vec![
            vec![int(1), int(0)],
            vec![int(0), int(1)],
            vec![int(-1), int(-1)],
        ];
        pts.extend(extra.into_iter().map(|(a, b)| vec![int(a), int(b)]));
        enumerate_facets(&pts).unwrap()
    })
}

fn sorted(v: &[RatVector]) -> Vec<RatVector> {
    let mut v = v.to_vec();
    v.sort();
    v
}

/// Unimodular matrix as a product of elementary row operations.
fn unimodular(n: usize) -> impl Strategy<Value = Vec<Vec<i64>>> {
    prop::collection::vec((0..n, 0..n, -2i64..=2, any::<bool>()), 1..8).prop_map(move |ops| {
        let mut m: Vec<Vec<i64>> = (0..n).map(|i| (0..n).map(|j| i64::from(i == j)).collect()).collect();
        for (i, j, k, swap) in ops {
            if i == j {
                continue;
            }
            if swap {
                m.swap(i, j);
            } else {
                let row = m[j].clone();
                for (x, y) in m[i].iter_mut().zip(row) {
                    *x += k * y;
                }
            }
        }
        m
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn solve_satisfies_the_system(a in int_matrix(4), b in prop::collection::vec(small_rational(), 4)) {
        let m = rat_matrix(&a);
        match solve_linear_system(&m, &b) {
            Ok(x) => prop_assert_eq!(m.mul_vec(&x).unwrap(), b),
            Err(_) => prop_assert!(determinant(&m).unwrap().is_zero()),
        }
    }

    #[test]
    fn determinant_is_multiplicative(a in int_matrix(3), b in int_matrix(3)) {
        let (ma, mb) = (rat_matrix(&a), rat_matrix(&b));
        let prod = ma.mul(&mb).unwrap();
        prop_assert_eq!(
            determinant(&prod).unwrap(),
            determinant(&ma).unwrap() * determinant(&mb).unwrap()
        );
    }

    #[test]
    fn scalar_text_round_trip(q in small_rational()) {
        prop_assert_eq!(parse_scalar(&format_scalar(&q)).unwrap(), q);
    }

    #[test]
    fn point_file_round_trip(pts in prop::collection::vec(prop::collection::vec(small_rational(), 3), 1..10)) {
        let text = serialize_points(3, &pts);
        let (n, back) = parse_points(&text).unwrap();
        prop_assert_eq!(n, 3);
        prop_assert_eq!(serialize_points(3, &back), text);
        prop_assert_eq!(back, pts);
    }

    #[test]
    fn polar_dual_is_an_involution(p in lattice_polygon()) {
        let back = polar_dual(&polar_dual(&p).unwrap()).unwrap();
        prop_assert_eq!(sorted(back.vertices()), sorted(p.vertices()));
    }

    #[test]
    fn triangulation_apex_does_not_matter(p in lattice_polygon()) {
        prop_assert_eq!(moments_with(&p, Apex::LexMin), moments_with(&p, Apex::LexMax));
    }

    #[test]
    fn integrals_add_under_a_hyperplane_split(
        p in lattice_polygon(),
        u in prop::collection::vec(-3i64..=3, 2),
        c in -3i64..=3,
    ) {
        prop_assume!(u.iter().any(|&x| x != 0));
        let plus = intersect_halfspace(&p, &Halfspace::from_ints(&u, c)).unwrap();
        let neg: Vec<i64> = u.iter().map(|x| -x).collect();
        let minus = intersect_halfspace(&p, &Halfspace::from_ints(&neg, -c)).unwrap();
        let (a, b, whole) = (moments(&plus), moments(&minus), moments(&p));
        prop_assert_eq!(&a.volume + &b.volume, whole.volume);
        for i in 0..2 {
            prop_assert_eq!(&a.first[i] + &b.first[i], whole.first[i].clone());
            for j in 0..2 {
                prop_assert_eq!(&a.second[(i, j)] + &b.second[(i, j)], whole.second[(i, j)].clone());
            }
        }
    }

    #[test]
    fn barycentric_mass_matrix(pts in prop::collection::vec(prop::collection::vec(-6i64..=6, 3), 4)) {
        let points: Vec<RatVector> = pts.iter().map(|p| p.iter().map(|&x| int(x)).collect()).collect();
        let Ok(s) = Simplex::new(points.clone()) else { return Ok(()) };
        prop_assume!(!s.volume().is_zero());
        // λ_k as affine forms: solve [1 p_k^T] rows against unit vectors.
        let rows: Vec<RatVector> = points
            .iter()
            .map(|p| std::iter::once(Scalar::one()).chain(p.iter().cloned()).collect())
            .collect();
        let m = RatMatrix::from_rows(rows).unwrap();
        let lambdas: Vec<AffineForm> = (0..4)
            .map(|k| {
                let e: RatVector = (0..4).map(|i| if i == k { int(1) } else { int(0) }).collect();
                let x = solve_linear_system(&m, &e).unwrap();
                AffineForm::new(x[1..].to_vec(), x[0].clone())
            })
            .collect();
        let v = s.volume();
        for i in 0..4 {
            for j in 0..4 {
                let q = QuadraticIntegrand::new(lambdas[i].clone(), lambdas[j].clone());
                let expect = &v * int(if i == j { 2 } else { 1 }) / int(20);
                prop_assert_eq!(s.integrate(&q), expect);
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(10))]

    #[test]
    fn unimodular_equivariance_on_x1(a in unimodular(5)) {
        let p = x1();
        let m = rat_matrix(&a);
        prop_assert!(determinant(&m).unwrap().abs().is_one());
        let q = p.linear_image(&m).unwrap();
        let (theta, theta_q) = (solve_potential(&p).unwrap(), solve_potential(&q).unwrap());
        for v in p.vertices() {
            prop_assert_eq!(theta_q.eval(&m.mul_vec(v).unwrap()), theta.eval(v));
        }
        let (mp, argp) = mabuchi_constant(&p, &theta);
        let (mq, argq) = mabuchi_constant(&q, &theta_q);
        prop_assert_eq!(&mp, &mq);
        prop_assert!(q.vertices().contains(&m.mul_vec(&argp).unwrap()));
        prop_assert_eq!(theta_q.eval(&argq), mq);
    }
}

#[test]
fn boundary_identities_on_reflexive_polytopes() {
    for (name, p) in reflexive_zoo() {
        let n = p.dim() as i64;
        let m = moments(&p);
        let bm = boundary_moments(&p, Apex::LexMin).unwrap();
        assert_eq!(bm.volume, &m.volume * int(n), "{name}");
        for i in 0..p.dim() {
            assert_eq!(bm.first[i], &m.first[i] * int(n + 1), "{name}");
        }
        assert_eq!(bm, boundary_moments(&p, Apex::LexMax).unwrap(), "{name}");
        assert_eq!(m, moments_with(&p, Apex::LexMax), "{name}");
    }
}

#[test]
fn futaki_vanishes_on_affine_functions() {
    let cases = [("[-1,1]", cube(1)), ("[-1,1]^2", cube(2)), ("[-1,1]^3", cube(3)), ("P(P2)", p2()), ("P(X1)", x1()), ("P(Bl P2)", blowup_p2())];
    for (name, p) in cases {
        let theta = solve_potential(&p).unwrap();
        let n = p.dim();
        let one = TestFunction::Affine(AffineForm::one(n));
        assert!(donaldson_futaki(&p, &theta, &one).unwrap().is_zero(), "{name}");
        for i in 0..n {
            let xi = TestFunction::Affine(AffineForm::coordinate(n, i));
            assert!(donaldson_futaki(&p, &theta, &xi).unwrap().is_zero(), "{name} x{i}");
        }
    }
}

#[test]
fn mabuchi_constant_is_additive_on_products() {
    let factors = [("P1", p1()), ("P2", p2()), ("Bl P2", blowup_p2()), ("X1", x1())];
    let m = |p: &Polytope| mabuchi_constant(p, &solve_potential(p).unwrap()).0;
    for (i, (na, a)) in factors.iter().enumerate() {
        for (nb, b) in &factors[i..] {
            if a.dim() + b.dim() > 7 {
                continue;
            }
            let prod = cartesian_product(a, b);
            assert_eq!(m(&prod), m(a) + m(b), "{na} x {nb}");
        }
    }
}

#[test]
fn dual_of_free_sum_is_product_of_duals() {
    let deltas = [
        ("P1", polar_dual(&p1()).unwrap()),
        ("P2", polar_dual(&p2()).unwrap()),
        ("X1", polar_dual(&x1()).unwrap()),
    ];
    for (na, a) in &deltas {
        for (nb, b) in &deltas {
            let sum = free_sum(a, b).unwrap();
            let prod = cartesian_product(&polar_dual(a).unwrap(), &polar_dual(b).unwrap());
            assert_eq!(
                sorted(polar_dual(&sum).unwrap().vertices()),
                sorted(prod.vertices()),
                "{na} + {nb}"
            );
        }
    }
}

#[test]
fn boundary_integrals_of_affine_forms_match_the_identity_form() {
    // ∫_∂P (a·x + c) dσ = (n+1) a·b + n c Vol(P) on reflexive P.
    let p = blowup_p2();
    let m = moments(&p);
    let f = AffineForm::new(vec![ratio(3, 2), int(-1)], ratio(1, 3));
    let got = integrate_boundary(&p, std::slice::from_ref(&f), Apex::LexMin).unwrap().pop().unwrap();
    let expect = int(3) * toric_kstab::exact::dot(&f.coeffs, &m.first) + int(2) * &f.constant * &m.volume;
    assert_eq!(got, expect);
}
