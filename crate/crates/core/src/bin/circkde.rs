fn main() {
    std::process::exit(circkde::cli::main_with(std::env::args_os()));
}
