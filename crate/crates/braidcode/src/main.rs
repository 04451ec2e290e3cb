fn main() {
    std::process::exit(braidcode::cli::run());
}
