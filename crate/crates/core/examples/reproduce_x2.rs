// Recomputes every `𝔛₂` reference value and prints one line per check.
// Takes about two minutes in release mode.

use toric_kstab::verify::run_all;

pub fn run_example() -> toric_kstab::Result<String> {
    let (run, checks) = run_all()?;
    let mut out = String::new();
    for c in &checks {
        out += &format!("{c}\n");
    }
    out += &format!("total {:.1}s\n", run.elapsed.as_secs_f64());
    Ok(out)
}

#[allow(dead_code)]
fn main() -> toric_kstab::Result<()> {
    print!("{}", run_example()?);
    Ok(())
}
