fn main() {
    std::process::exit(vc_stream::harness::cli::run_cli(std::env::args_os()));
}
