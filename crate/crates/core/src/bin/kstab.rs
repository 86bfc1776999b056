fn main() {
    std::process::exit(toric_kstab::cli::run(std::env::args_os()));
}
