fn main() {
    let argv: Vec<String> = std::env::args().collect();
    env_logger::Builder::new()
        .filter_level(coordctl::cli::log_level(&argv))
        .format_timestamp(None)
        .init();
    std::process::exit(coordctl::cli::run(argv));
}
