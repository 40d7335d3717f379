fn main() {
    std::process::exit(inverse_turan::cli::run(std::env::args_os()));
}
