fn main() {
    std::process::exit(parablend_cli::run(std::env::args_os()));
}
