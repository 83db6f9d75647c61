fn main() {
    std::process::exit(homanti::cli::main_with_args(std::env::args_os()));
}
