use std::io::Write;
use std::process::ExitCode;

use linemg::cli;

fn main() -> ExitCode {
    if let Err(msg) = cli::configure_threads() {
        eprintln!("linemg: {msg}");
        return ExitCode::from(cli::EXIT_ERROR as u8);
    }
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    let mut out = stdout.lock();
    let mut err = stderr.lock();
    let code = cli::run(std::env::args_os(), &mut out, &mut err);
    let _ = out.flush();
    ExitCode::from(code as u8)
}
