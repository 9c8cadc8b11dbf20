fn main() {
    std::process::exit(bslemma::cli::main_with_args(std::env::args_os()));
}
