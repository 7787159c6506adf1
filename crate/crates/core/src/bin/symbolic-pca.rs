fn main() {
    std::process::exit(symbolic_pca::cli::main_with_args(std::env::args_os()));
}
