fn main() {
    std::process::exit(nilpair::cli::main_with_args(std::env::args_os()));
}
