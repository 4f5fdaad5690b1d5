fn main() {
    std::process::exit(dfinite::cli::run(std::env::args_os()));
}
