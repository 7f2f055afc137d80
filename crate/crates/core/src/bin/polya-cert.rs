fn main() {
    std::process::exit(polya_cert::cli::run_cli(std::env::args_os()));
}
