fn main() {
    std::process::exit(spg::cli::run(std::env::args_os()));
}
