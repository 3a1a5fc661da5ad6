fn main() {
    std::process::exit(pncoef::cli::main());
}
