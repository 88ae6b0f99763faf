fn main() {
    std::process::exit(metafsm::cli::run(std::env::args_os()));
}
