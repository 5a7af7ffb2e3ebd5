use std::io;
use std::process::ExitCode;

use c4free::args::Cli;
use c4free::commands::{self, AppError};
use clap::Parser;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    let code = match commands::run(&cli, &mut io::stdout().lock()) {
        Ok(status) => status.exit_code(),
        // a closed downstream pipe is not an error
        Err(AppError::Io(e)) if e.kind() == io::ErrorKind::BrokenPipe => 0,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    };
    ExitCode::from(code as u8)
}
