fn main() {
    std::process::exit(sniplab_cli::run(std::env::args_os()));
}
