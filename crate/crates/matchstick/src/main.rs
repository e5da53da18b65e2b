fn main() {
    std::process::exit(matchstick::cli::run());
}
