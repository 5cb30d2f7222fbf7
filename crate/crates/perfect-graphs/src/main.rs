fn main() {
    let args: Vec<String> = std::env::args().collect();
    std::process::exit(perfect_graphs::cli::cli_main(&args));
}
