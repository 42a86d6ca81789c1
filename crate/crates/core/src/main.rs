use clap::Parser;

use derham::cli::{run, Cli};

fn main() {
    let cli = Cli::parse();
    let report = run(&cli);
    print!("{}", report.render(cli.text));
    std::process::exit(report.exit_status.code());
}
