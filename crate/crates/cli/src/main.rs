use std::process::ExitCode;

use clap::Parser;
use qolab::{error_json, render_text, run_batch, run_command, wants_json, Cli, CliError, Command};

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Command::Batch = cli.command {
        let stdin = std::io::stdin();
        return match run_batch(stdin.lock(), std::io::stdout().lock()) {
            Ok(0) => ExitCode::SUCCESS,
            Ok(_) => ExitCode::from(1),
            Err(e) => {
                eprintln!("qolab: {}", e);
                ExitCode::from(3)
            }
        };
    }
    let json = wants_json(&cli.command);
    match run_command(&cli.command) {
        Ok(v) => {
            if json {
                println!("{}", serde_json::to_string_pretty(&v).unwrap());
            } else {
                print!("{}", render_text(&v));
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            if json {
                println!("{}", error_json(&e));
            }
            eprintln!("qolab: {}", e);
            ExitCode::from(match e {
                CliError::Usage(_) => 2,
                CliError::Analysis(_) => 1,
            })
        }
    }
}
