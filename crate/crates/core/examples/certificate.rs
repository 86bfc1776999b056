// Full analysis of `𝔛₁` and its JSON certificate.

use toric_kstab::certificate::{CertificateDocument, Source};
use toric_kstab::families::xr_fano_polytope;
use toric_kstab::kstability::{analyze, InputKind};

pub fn run_example() -> toric_kstab::Result<String> {
    let cert = analyze(&xr_fano_polytope(1)?, InputKind::FanoPolytope)?;
    let doc = CertificateDocument::new(&cert, Source::Family { r: 1 }, 15).without_timing();
    let c = &doc.verdicts.criterion;
    let mut out = format!(
        "M ≈ {}; sufficient_polystable {}, ding_unstable {}\n",
        doc.mabuchi.approx, doc.verdicts.sufficient_polystable, doc.verdicts.ding_unstable
    );
    out += &format!(
        "criterion: applicable {}, satisfied {}, lhs ≈ {}, rhs ≈ {}\n",
        c.applicable,
        c.satisfied,
        c.lhs_approx,
        c.rhs_approx.as_deref().unwrap_or("n/a")
    );
    if let Some(d) = &doc.destabilizer {
        out += &format!("L_P(max(0, θ − 1)) ≈ {}\n", d.approx);
    }
    out += &format!("certificate: {} bytes of JSON\n", doc.to_json().len());
    Ok(out)
}

#[allow(dead_code)]
fn main() -> toric_kstab::Result<()> {
    print!("{}", run_example()?);
    Ok(())
}
