use std::io::Write;
use std::panic;
use std::process::ExitCode;

fn main() -> ExitCode {
    let args: Vec<std::ffi::OsString> = std::env::args_os().collect();
    let outcome = match panic::catch_unwind(|| strata_cli::run(args)) {
        Ok(o) => o,
        Err(_) => return ExitCode::from(strata_cli::EXIT_INTERNAL as u8),
    };
    let _ = std::io::stdout().write_all(outcome.stdout.as_bytes());
    let _ = std::io::stderr().write_all(outcome.stderr.as_bytes());
    ExitCode::from(outcome.code as u8)
}
