fn main() {
    std::process::exit(tilting::cli::run(std::env::args_os()));
}
