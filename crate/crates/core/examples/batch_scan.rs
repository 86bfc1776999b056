// Scanning a directory of `.poly` files into CSV rows, with a malformed
// file reported as an error row rather than aborting the batch.

use toric_kstab::certificate::write_csv;
use toric_kstab::cli::{poly_files, scan_files};
use toric_kstab::families::{projective_space_polytope, xr_fano_polytope};
use toric_kstab::io::{serialize_polytope, write_text};
use toric_kstab::kstability::InputKind;

pub fn run_example() -> toric_kstab::Result<String> {
    let dir = std::env::temp_dir().join(format!("kstab-scan-{}", std::process::id()));
    std::fs::create_dir_all(&dir).map_err(|source| toric_kstab::Error::Io {
        path: dir.clone(),
        source,
    })?;
    write_text(&dir.join("p2.poly"), &serialize_polytope(&projective_space_polytope(2)?))?;
    write_text(&dir.join("p3.poly"), &serialize_polytope(&projective_space_polytope(3)?))?;
    write_text(&dir.join("x1.poly"), &serialize_polytope(&xr_fano_polytope(1)?))?;
    write_text(&dir.join("broken.poly"), "3 2\n1 0 0\n")?;

    let rows = scan_files(&poly_files(&dir)?, 2, InputKind::FanoPolytope, 15);
    let mut csv = Vec::new();
    write_csv(&rows, &mut csv).expect("in-memory CSV");
    let _ = std::fs::remove_dir_all(&dir);
    Ok(String::from_utf8(csv).expect("CSV is UTF-8"))
}

#[allow(dead_code)]
fn main() -> toric_kstab::Result<()> {
    print!("{}", run_example()?);
    Ok(())
}
