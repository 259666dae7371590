fn main() {
    std::process::exit(qentropy::cli::main_with_args(std::env::args_os()));
}
