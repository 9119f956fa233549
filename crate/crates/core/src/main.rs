fn main() {
    std::process::exit(nodal_conics::cli::main_with_args(std::env::args_os()));
}
