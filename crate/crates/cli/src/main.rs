use std::io::Write;
use std::process::ExitCode;

fn main() -> ExitCode {
    let response = adduce_cli::run(std::env::args_os());
    let _ = std::io::stdout().write_all(response.stdout.as_bytes());
    let _ = std::io::stderr().write_all(response.stderr.as_bytes());
    ExitCode::from(response.code as u8)
}
