fn main() {
    std::process::exit(wellcovered::cli::run());
}
