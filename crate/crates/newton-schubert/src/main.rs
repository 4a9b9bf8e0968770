fn main() {
    std::process::exit(newton_schubert::cli::run(std::env::args_os()));
}
