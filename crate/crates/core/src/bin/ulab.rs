fn main() {
    std::process::exit(ulab::cli::run(std::env::args_os()));
}
