fn main() {
    std::process::exit(zpd_cli::run(std::env::args_os()));
}
