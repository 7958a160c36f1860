fn main() {
    std::process::exit(tropical::cli::main());
}
