fn main() {
    std::process::exit(zkrange::harness::cli::run(std::env::args_os()));
}
