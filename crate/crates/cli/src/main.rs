use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use diagcomm_cli::config::Cli;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let format = cli.format;
    match diagcomm_cli::run(cli) {
        Ok(report) => {
            let mut out = std::io::stdout().lock();
            // a closed pipe is not worth a panic
            let _ = out.write_all(report.render(format).as_bytes());
            ExitCode::from(report.exit_code() as u8)
        }
        Err(e) => {
            eprintln!("{e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
