fn main() {
    std::process::exit(singcat::cli::main());
}
