// The potential θ of the blow-up of ℙ² at one point, checked through the
// boundary form of `L_P`, and its Mabuchi constant.

use toric_kstab::exact::{format_scalar, int_vector, to_decimal_string};
use toric_kstab::integrate::AffineForm;
use toric_kstab::kstability::{donaldson_futaki, mabuchi_constant, solve_potential, TestFunction};
use toric_kstab::polytope::{enumerate_facets, polar_dual};

pub fn run_example() -> toric_kstab::Result<String> {
    let delta = enumerate_facets(&[
        int_vector(&[1, 0]),
        int_vector(&[0, 1]),
        int_vector(&[-1, -1]),
        int_vector(&[1, 1]),
    ])?;
    let p = polar_dual(&delta)?;
    let theta = solve_potential(&p)?;
    let mut out = format!(
        "θ = {} x1 + {} x2 + {}\n",
        format_scalar(&theta.a[0]),
        format_scalar(&theta.a[1]),
        format_scalar(&theta.c)
    );
    let mut tests = vec![TestFunction::Affine(AffineForm::one(2))];
    tests.extend((0..2).map(|i| TestFunction::Affine(AffineForm::coordinate(2, i))));
    let vanish = tests
        .iter()
        .map(|f| donaldson_futaki(&p, &theta, f))
        .collect::<toric_kstab::Result<Vec<_>>>()?;
    out += &format!(
        "L_P(1), L_P(x1), L_P(x2) = {}\n",
        vanish.iter().map(format_scalar).collect::<Vec<_>>().join(", ")
    );
    let (m, argmax) = mabuchi_constant(&p, &theta);
    out += &format!(
        "M = {} ≈ {} at ({})\n",
        format_scalar(&m),
        to_decimal_string(&m, 15),
        argmax.iter().map(format_scalar).collect::<Vec<_>>().join(", ")
    );
    Ok(out)
}

#[allow(dead_code)]
fn main() -> toric_kstab::Result<()> {
    print!("{}", run_example()?);
    Ok(())
}
