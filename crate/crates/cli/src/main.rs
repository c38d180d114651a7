use std::fs;
use std::io::Write;
use std::process::ExitCode;

use arcspace_cli::{run, Cli, CliError, Command};
use clap::Parser;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let out = match &cli.command {
        Command::Analyze(a) => a.out.clone(),
        Command::Census(c) => c.out.clone(),
    };
    let result = run(&cli).and_then(|json| match out {
        Some(path) => fs::write(&path, json).map_err(|source| CliError::Write { path, source }),
        None => std::io::stdout()
            .write_all(json.as_bytes())
            .map_err(|source| CliError::Write {
                path: "<stdout>".into(),
                source,
            }),
    });
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("arcspace: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
