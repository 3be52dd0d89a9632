use std::process::ExitCode;

use clap::Parser;
use realforms_cli::{execute, Cli};

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    let echo = std::env::args().skip(1).collect::<Vec<_>>().join(" ");
    match execute(&cli, echo) {
        Ok(run) => {
            print!("{}", run.report.render(cli.format));
            ExitCode::from(run.exit_code())
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
