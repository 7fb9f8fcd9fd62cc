fn main() {
    std::process::exit(ljunggren::cli::run());
}
