use std::process::exit;

fn main() {
    exit(moduli_forge::cli::run(std::env::args_os()));
}
