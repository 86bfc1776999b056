// Polar duality, reflexivity and smoothness on small Fano polygons, plus
// the product / free-sum correspondence.

use toric_kstab::exact::int_vector;
use toric_kstab::io::{parse_polytope, serialize_polytope};
use toric_kstab::polytope::{cartesian_product, enumerate_facets, free_sum, polar_dual};

pub fn run_example() -> toric_kstab::Result<String> {
    let mut out = String::new();
    let hexagon = parse_polytope("2 6\n1 0\n0 1\n-1 1\n-1 0\n0 -1\n1 -1\n")?;
    let dual = polar_dual(&hexagon)?;
    out += &format!(
        "hexagon: reflexive {}, smooth {}; dual has {} vertices\n",
        hexagon.is_reflexive(),
        hexagon.is_smooth_fano(),
        dual.vertices().len()
    );
    out += &serialize_polytope(&dual);

    // Reflexive but singular: the weighted projective plane P(1,1,2).
    let weighted = enumerate_facets(&[int_vector(&[1, 0]), int_vector(&[0, 1]), int_vector(&[-1, -2])])?;
    out += &format!(
        "P(1,1,2): reflexive {}, smooth {}\n",
        weighted.is_reflexive(),
        weighted.is_smooth_fano()
    );

    let segment = enumerate_facets(&[int_vector(&[1]), int_vector(&[-1])])?;
    let sum = free_sum(&hexagon, &segment)?;
    let product = cartesian_product(&dual, &polar_dual(&segment)?);
    let dual_of_sum = polar_dual(&sum)?;
    let mut a = dual_of_sum.vertices().to_vec();
    let mut b = product.vertices().to_vec();
    a.sort();
    b.sort();
    out += &format!(
        "dual of free sum equals product of duals: {} ({} vertices)\n",
        a == b,
        a.len()
    );
    Ok(out)
}

#[allow(dead_code)]
fn main() -> toric_kstab::Result<()> {
    print!("{}", run_example()?);
    Ok(())
}
