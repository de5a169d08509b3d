mod args;
mod commands;
mod error;
mod formats;
mod report;
mod source;

use std::io::Write;
use std::process::ExitCode;
use std::sync::mpsc::{self, RecvTimeoutError};
use std::time::{Duration, Instant};

use clap::error::ErrorKind;
use clap::Parser;
use hopfdy::relext::Budget;
use serde_json::Value;

use args::Cli;
use error::CliError;
use report::Report;

/// Exit code for command-line usage errors.
const USAGE: u8 = 64;

pub fn progress(msg: &str) {
    eprintln!("hopfdy: {msg}");
}

fn execute(cli: Cli, echo: Vec<String>) -> (Value, i32) {
    let budget = cli.max_seconds.map(Budget::seconds).unwrap_or_else(Budget::unlimited);
    let (tx, rx) = mpsc::channel();
    let worker_echo = echo.clone();
    let command = cli.command;
    let spawned = std::thread::Builder::new().stack_size(256 << 20).spawn(move || {
        let mut rep = Report::new(worker_echo);
        let out = commands::run(&command, &mut rep, &budget);
        let _ = tx.send((rep, out));
    });
    if let Err(e) = spawned {
        return Report::new(echo).finish(Some(&CliError::Io(e.to_string())));
    }
    let received = match cli.max_seconds {
        Some(s) => rx.recv_timeout(Duration::from_secs_f64(s.max(0.0))),
        None => rx.recv().map_err(|_| RecvTimeoutError::Disconnected),
    };
    match received {
        Ok((rep, Ok(None))) => rep.finish(None),
        Ok((_, Ok(Some(raw)))) => (raw, 0),
        Ok((rep, Err(e))) => {
            progress(&e.to_string());
            rep.finish(Some(&e))
        }
        Err(RecvTimeoutError::Timeout) => {
            let e = CliError::Budget;
            progress(&e.to_string());
            Report::new(echo).finish(Some(&e))
        }
        Err(RecvTimeoutError::Disconnected) => {
            Report::new(echo).finish(Some(&CliError::Consistency("computation aborted".into())))
        }
    }
}

fn main() -> ExitCode {
    let argv: Vec<String> = std::env::args().collect();
    let cli = match Cli::try_parse_from(&argv) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => ExitCode::SUCCESS,
                _ => ExitCode::from(USAGE),
            };
        }
    };
    let json_out = cli.json_out.clone();
    let echo: Vec<String> = std::iter::once("hopfdy".to_string()).chain(argv.into_iter().skip(1)).collect();
    let start = Instant::now();
    let (doc, mut code) = execute(cli, echo);
    progress(&format!("finished in {:.3} s", start.elapsed().as_secs_f64()));

    let text = serde_json::to_string_pretty(&doc).expect("serializable") + "\n";
    if let Some(path) = json_out {
        if let Err(e) = std::fs::write(&path, &text) {
            progress(&format!("cannot write {}: {e}", path.display()));
            code = code.max(2);
        }
    }
    let mut out = std::io::stdout().lock();
    let _ = out.write_all(text.as_bytes());
    let _ = out.flush();
    ExitCode::from(code as u8)
}
