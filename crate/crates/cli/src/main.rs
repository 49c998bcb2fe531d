fn main() {
    std::process::exit(knotforge_cli::run(std::env::args().collect()));
}
