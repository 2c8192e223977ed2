fn main() {
    std::process::exit(shuffle_twist::cli::run(std::env::args_os()));
}
