use std::process::ExitCode;

use tavis_map::error::Error;
use tavis_map::io::{parse_config, run};

fn main() -> ExitCode {
    let result = parse_config(std::env::args_os())
        .and_then(|cfg| run(&cfg, &mut std::io::stdout().lock(), &mut std::io::stderr()));
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Error::Help(text)) => {
            print!("{text}");
            ExitCode::SUCCESS
        }
        Err(Error::Usage(msg)) => {
            eprintln!("tavis-map: {msg}");
            ExitCode::from(2)
        }
        Err(e) => {
            eprintln!("tavis-map: {e}");
            ExitCode::FAILURE
        }
    }
}
