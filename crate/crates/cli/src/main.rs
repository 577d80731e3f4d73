use std::process::ExitCode;

use clap::Parser;
use tropical_groups_cli::{run, Cli};

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(report) => {
            if cli.json {
                print!("{}", report.render_json());
            } else {
                print!("{}", report.render_text());
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("tropgroups {}: {e}", cli.command.name());
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
