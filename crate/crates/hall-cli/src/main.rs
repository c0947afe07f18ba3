use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use hall_cli::{run, Cli, CommandRequest};

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(e.exit_code() as u8);
        }
    };
    let outcome = CommandRequest::try_from(cli).and_then(|req| {
        let outcome = run(&req)?;
        Ok((outcome.document.render(req.format), outcome.status))
    });
    match outcome {
        Ok((text, status)) => {
            let mut out = std::io::stdout().lock();
            if out
                .write_all(text.as_bytes())
                .and_then(|_| out.flush())
                .is_err()
            {
                return ExitCode::from(2);
            }
            ExitCode::from(status.exit_code() as u8)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
