use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use multinet_cli::{run, Cli};

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(out) => {
            for w in &out.stderr {
                eprintln!("{w}");
            }
            let mut so = std::io::stdout().lock();
            if so.write_all(out.stdout.as_bytes()).is_err() {
                return ExitCode::from(4);
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
