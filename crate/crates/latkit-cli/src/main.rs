fn main() {
    std::process::exit(latkit_cli::run_command(std::env::args_os()));
}
