// The Fano polytopes `Δ_r`: generators, flags, dual vertex counts and the
// curve relations with their anticanonical degrees.

use toric_kstab::families::{mori_relation_check, xr_fano_polytope, XrSpec};
use toric_kstab::polytope::polar_dual;

pub fn run_example() -> toric_kstab::Result<String> {
    let mut out = String::new();
    for r in 1..=2 {
        let spec = XrSpec::new(r)?;
        let delta = xr_fano_polytope(r)?;
        let p = polar_dual(&delta)?;
        out += &format!(
            "r = {r}: dim {}, {} generators, Picard number {}, reflexive {}, smooth {}, dual has {} vertices\n",
            spec.dim(),
            delta.vertices().len(),
            spec.picard_number(),
            delta.is_reflexive(),
            delta.is_smooth_fano(),
            p.vertices().len()
        );
        let report = mori_relation_check(r)?;
        out += &format!(
            "  relations hold: {}, degrees {:?}\n",
            report.all_ok(),
            report.degree_sequence()
        );
    }
    let spec = XrSpec::new(2)?;
    for (label, v) in spec.generators().iter().take(3) {
        out += &format!("  {label} = {:?}\n", v.0);
    }
    Ok(out)
}

#[allow(dead_code)]
fn main() -> toric_kstab::Result<()> {
    print!("{}", run_example()?);
    Ok(())
}
