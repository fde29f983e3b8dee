fn main() {
    std::process::exit(scheme_walk::cli::run(std::env::args_os()));
}
