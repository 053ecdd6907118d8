fn main() {
    std::process::exit(weylseries::cli::run(std::env::args_os()));
}
