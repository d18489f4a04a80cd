fn main() {
    std::process::exit(cwlab::cli::main_with_args(std::env::args_os()));
}
