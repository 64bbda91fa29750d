fn main() {
    std::process::exit(fan_turan::cli::run(std::env::args_os()));
}
