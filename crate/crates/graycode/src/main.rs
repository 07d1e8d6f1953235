use std::io;
use std::process::ExitCode;

fn main() -> ExitCode {
    let stdin = io::stdin().lock();
    let stdout = io::stdout().lock();
    let stderr = io::stderr().lock();
    let code = graycode::cli::run(std::env::args_os(), stdin, stdout, stderr);
    ExitCode::from(code)
}
