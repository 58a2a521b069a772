fn main() {
    std::process::exit(cuhg::cli::run(std::env::args_os()));
}
