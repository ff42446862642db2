fn main() {
    std::process::exit(tubular::cli::main());
}
