fn main() {
    std::process::exit(quon::cli::cli_main(std::env::args_os()));
}
