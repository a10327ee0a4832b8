fn main() {
    std::process::exit(pawfree_cli::run(std::env::args_os()));
}
