fn main() {
    std::process::exit(csh::cli::main());
}
