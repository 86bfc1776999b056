//! The `kstab` command-line driver.
//!
//! Exit codes: 0 success, 1 input error (bad arguments, unreadable or
//! malformed files, non-reflexive input) or a failed reproduction check,
//! 2 internal error.

use std::ffi::OsString;
use std::io::Write;
use std::panic::{self, AssertUnwindSafe};
use std::path::{Path, PathBuf};
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;

use clap::{Args, Parser, Subcommand};

use crate::certificate::{write_csv, CertificateDocument, ScanRow, Source};
use crate::error::Error;
use crate::families::xr_fano_polytope;
use crate::io::{read_polytope_file, serialize_polytope, write_text};
use crate::kstability::{analyze, InputKind};
use crate::verify;

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 1;
pub const EXIT_INTERNAL: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "kstab", version, about = "Exact relative K-stability indicators for toric Fano manifolds")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Write the Fano polytope of the r-th family member.
    Family {
        #[arg(long)]
        r: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Analyze one polytope file and emit a JSON certificate.
    Analyze {
        file: PathBuf,
        #[command(flatten)]
        kind: KindArgs,
        #[arg(long)]
        json: Option<PathBuf>,
        #[arg(long, default_value_t = 15)]
        digits: usize,
    },
    /// Analyze every `.poly` file in a directory and write one CSV row each.
    Scan {
        dir: PathBuf,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        #[arg(long)]
        csv: Option<PathBuf>,
        /// Treat the files as moment polytopes instead of Fano polytopes.
        #[arg(long)]
        moment_polytope: bool,
        #[arg(long, default_value_t = 15)]
        digits: usize,
    },
    /// Recompute the bundled 𝔛₂ reference values and report each check.
    VerifyPaper,
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
struct KindArgs {
    #[arg(long)]
    fano_polytope: bool,
    #[arg(long)]
    moment_polytope: bool,
}

impl KindArgs {
    fn kind(&self) -> InputKind {
        if self.fano_polytope {
            InputKind::FanoPolytope
        } else {
            InputKind::MomentPolytope
        }
    }
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Parse { .. }
        | Error::Io { .. }
        | Error::DimensionMismatch { .. }
        | Error::Degenerate { .. }
        | Error::Unbounded
        | Error::Empty
        | Error::OriginNotInterior
        | Error::NotReflexive => EXIT_INPUT,
        Error::SingularMatrix | Error::SingularMomentMatrix => EXIT_INTERNAL,
    }
}

fn emit(out: Option<&Path>, text: &str, stdout: &mut dyn Write) -> crate::Result<()> {
    match out {
        Some(path) => write_text(path, text),
        None => stdout.write_all(text.as_bytes()).map_err(|source| Error::Io {
            path: PathBuf::from("<stdout>"),
            source,
        }),
    }
}

/// Parses `argv` (including the program name) and runs the command,
/// writing results to `stdout` and diagnostics to `stderr`.
pub fn run_with<I, T>(argv: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let rendered = e.render().to_string();
            let sink: &mut dyn Write = if e.use_stderr() { stderr } else { stdout };
            let _ = sink.write_all(rendered.as_bytes());
            return code;
        }
    };
    let result = match cli.command {
        Command::Family { r, out } => family(r, out.as_deref(), stdout),
        Command::Analyze { file, kind, json, digits } => {
            analyze_file(&file, kind.kind(), json.as_deref(), digits, stdout)
        }
        Command::Scan { dir, jobs, csv, moment_polytope, digits } => {
            let kind = if moment_polytope { InputKind::MomentPolytope } else { InputKind::FanoPolytope };
            scan(&dir, jobs, kind, digits, csv.as_deref(), stdout)
        }
        Command::VerifyPaper => verify_reference(stdout),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            exit_code(&e)
        }
    }
}

pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    run_with(argv, &mut std::io::stdout().lock(), &mut std::io::stderr().lock())
}

fn family(r: usize, out: Option<&Path>, stdout: &mut dyn Write) -> crate::Result<i32> {
    let delta = xr_fano_polytope(r)?;
    emit(out, &serialize_polytope(&delta), stdout)?;
    Ok(EXIT_OK)
}

fn analyze_file(
    file: &Path,
    kind: InputKind,
    json: Option<&Path>,
    digits: usize,
    stdout: &mut dyn Write,
) -> crate::Result<i32> {
    let input = read_polytope_file(file)?;
    let cert = analyze(&input, kind)?;
    let doc = CertificateDocument::new(&cert, Source::File(file.display().to_string()), digits);
    emit(json, &doc.to_json(), stdout)?;
    Ok(EXIT_OK)
}

fn analyze_one(path: &Path, name: String, kind: InputKind, digits: usize) -> ScanRow {
    let outcome = panic::catch_unwind(AssertUnwindSafe(|| {
        read_polytope_file(path).and_then(|p| analyze(&p, kind))
    }));
    match outcome {
        Ok(Ok(cert)) => ScanRow::ok(name, &cert, digits),
        Ok(Err(e)) => ScanRow::failed(name, e.to_string()),
        Err(_) => ScanRow::failed(name, "internal error".to_string()),
    }
}

/// `.poly` files directly inside `dir`, sorted by file name.
pub fn poly_files(dir: &Path) -> crate::Result<Vec<PathBuf>> {
    let io_err = |source| Error::Io {
        path: dir.to_path_buf(),
        source,
    };
    let mut files = Vec::new();
    for entry in std::fs::read_dir(dir).map_err(io_err)? {
        let path = entry.map_err(io_err)?.path();
        if path.is_file() && path.extension().is_some_and(|e| e == "poly") {
            files.push(path);
        }
    }
    files.sort();
    Ok(files)
}

/// Analyzes every file on `jobs` worker threads. Rows come back in input
/// order regardless of scheduling.
pub fn scan_files(files: &[PathBuf], jobs: usize, kind: InputKind, digits: usize) -> Vec<ScanRow> {
    let next = AtomicUsize::new(0);
    let rows: Mutex<Vec<Option<ScanRow>>> = Mutex::new(vec![None; files.len()]);
    std::thread::scope(|s| {
        for _ in 0..jobs.clamp(1, files.len().max(1)) {
            s.spawn(|| loop {
                let i = next.fetch_add(1, Ordering::Relaxed);
                let Some(path) = files.get(i) else { break };
                let name = path.file_name().map_or_else(String::new, |n| n.to_string_lossy().into_owned());
                let row = analyze_one(path, name, kind, digits);
                rows.lock().expect("no poisoned workers")[i] = Some(row);
            });
        }
    });
    rows.into_inner()
        .expect("no poisoned workers")
        .into_iter()
        .map(|r| r.expect("every file visited"))
        .collect()
}

fn scan(
    dir: &Path,
    jobs: usize,
    kind: InputKind,
    digits: usize,
    csv: Option<&Path>,
    stdout: &mut dyn Write,
) -> crate::Result<i32> {
    let rows = scan_files(&poly_files(dir)?, jobs, kind, digits);
    let mut buf = Vec::new();
    write_csv(&rows, &mut buf).expect("writing to memory");
    emit(csv, &String::from_utf8(buf).expect("csv is utf-8"), stdout)?;
    Ok(EXIT_OK)
}

fn verify_reference(stdout: &mut dyn Write) -> crate::Result<i32> {
    let (run, checks) = verify::run_all()?;
    let mut text = String::new();
    for c in &checks {
        text.push_str(&format!("{c}\n"));
    }
    let passed = checks.iter().filter(|c| c.pass).count();
    text.push_str(&format!(
        "{passed}/{} checks passed in {:.1}s\n",
        checks.len(),
        run.elapsed.as_secs_f64()
    ));
    emit(None, &text, stdout)?;
    Ok(if passed == checks.len() { EXIT_OK } else { EXIT_INPUT })
}
