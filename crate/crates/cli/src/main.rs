fn main() {
    std::process::exit(logradius_cli::run(std::env::args_os()));
}
