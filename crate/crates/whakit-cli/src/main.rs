fn main() {
    std::process::exit(whakit_cli::run(std::env::args().collect()));
}
