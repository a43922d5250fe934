use std::io::Write;
use std::process::ExitCode;

use threegap_cli::{parse_args, run};

fn main() -> ExitCode {
    let invocation = match parse_args(std::env::args_os()) {
        Ok(inv) => inv,
        // usage errors exit with 2, --help and --version with 0
        Err(e) => e.exit(),
    };
    let outcome = run(&invocation);
    if let Some(msg) = &outcome.error {
        eprintln!("error: {msg}");
        return ExitCode::from(2);
    }
    let written = match &invocation.output_path {
        Some(path) => std::fs::write(path, &outcome.document),
        None => std::io::stdout().lock().write_all(outcome.document.as_bytes()),
    };
    if let Err(e) = written {
        eprintln!("error: {e}");
        return ExitCode::from(2);
    }
    ExitCode::from(outcome.status as u8)
}
