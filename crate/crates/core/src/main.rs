fn main() {
    std::process::exit(bfsp::cli::main_with_args(std::env::args_os()));
}
