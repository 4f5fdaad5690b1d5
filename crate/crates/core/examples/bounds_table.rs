//! Observed degrees against the degree bounds over random instances, run
//! through the command-line driver.

fn main() {
    let args = [
        "dfinite",
        "bounds-table",
        "--trials",
        "2",
        "--generic",
        "--regular-infinity",
        "--seed",
        "3",
    ];
    std::process::exit(dfinite::cli::run(args));
}
