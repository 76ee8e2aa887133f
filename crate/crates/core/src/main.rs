fn main() {
    std::process::exit(nilform::cli::run(std::env::args_os()));
}
