use clap::Parser;
use hopfkit_cli::{run, Cli};

fn main() {
    let cli = Cli::parse();
    let (out, code) = run(&cli);
    print!("{out}");
    std::process::exit(code);
}
