fn main() {
    std::process::exit(whill_cli::main_with_args(std::env::args_os()));
}
