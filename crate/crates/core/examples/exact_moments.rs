// Exact volume, first and second moments, and boundary integrals of a
// moment polytope, with the boundary identities checked exactly.

use toric_kstab::exact::{format_scalar, int};
use toric_kstab::families::xr_fano_polytope;
use toric_kstab::integrate::{boundary_moments, moments, moments_with, Apex};
use toric_kstab::polytope::polar_dual;

pub fn run_example() -> toric_kstab::Result<String> {
    let p = polar_dual(&xr_fano_polytope(1)?)?;
    let m = moments(&p);
    let mut out = format!(
        "P(X1): {} vertices, Vol = {}\n",
        p.vertices().len(),
        format_scalar(&m.volume)
    );
    out += &format!(
        "b = [{}]\n",
        m.first.iter().map(format_scalar).collect::<Vec<_>>().join(", ")
    );
    out += &format!("c_11 = {}\n", format_scalar(&m.second[(0, 0)]));

    let n = p.dim() as i64;
    let bm = boundary_moments(&p, Apex::LexMin)?;
    let volume_identity = bm.volume == &m.volume * int(n);
    let first_identity = bm
        .first
        .iter()
        .zip(&m.first)
        .all(|(s, b)| *s == b * int(n + 1));
    out += &format!(
        "Vol(∂P) = n·Vol(P): {volume_identity}; ∫_∂P x dσ = (n+1)·b: {first_identity}\n"
    );
    out += &format!(
        "second triangulation agrees: {}\n",
        moments_with(&p, Apex::LexMax) == m
    );
    Ok(out)
}

#[allow(dead_code)]
fn main() -> toric_kstab::Result<()> {
    print!("{}", run_example()?);
    Ok(())
}
