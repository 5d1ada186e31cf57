fn main() {
    std::process::exit(twistvoa::cli::main_with_args(std::env::args()));
}
