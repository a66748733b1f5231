fn main() {
    std::process::exit(lpstlab::cli::main_with_args(std::env::args_os()));
}
