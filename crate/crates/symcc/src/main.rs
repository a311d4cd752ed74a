use clap::Parser;

fn main() {
    let cli = symcc::cli::Cli::parse();
    std::process::exit(symcc::cli::run(cli));
}
