fn main() {
    std::process::exit(antiramsey::cli::run(std::env::args_os()));
}
