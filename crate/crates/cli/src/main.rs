use std::io::Write;
use std::process::ExitCode;

fn main() -> ExitCode {
    let result = bcchow_cli::run(std::env::args_os());
    std::io::stdout().write_all(result.stdout.as_bytes()).expect("write stdout");
    std::io::stderr().write_all(result.stderr.as_bytes()).expect("write stderr");
    ExitCode::from(result.code as u8)
}
