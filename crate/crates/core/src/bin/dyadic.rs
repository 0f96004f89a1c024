fn main() {
    std::process::exit(dyadic_lattice::cli::main());
}
