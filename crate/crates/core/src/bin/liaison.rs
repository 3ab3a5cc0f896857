use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use liaison::shell::{parse_range, parse_worksheet, run, RunFlags};

#[derive(Parser)]
#[command(name = "liaison", version, about = "Run linkage worksheets")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Machine,
}

#[derive(Subcommand)]
enum Cmd {
    /// Evaluate a worksheet and print its report.
    Run {
        file: PathBuf,
        #[arg(long, env = "LIAISON_SEED", default_value_t = 0)]
        seed: u64,
        #[arg(long, env = "LIAISON_MAX_DEGREE", default_value_t = 24)]
        max_degree: u32,
        /// Degree window as `lo..hi`.
        #[arg(long, env = "LIAISON_WINDOW", default_value = "-2..8", allow_hyphen_values = true, value_parser = window)]
        window: (i32, i32),
        #[arg(long, value_enum, default_value = "text")]
        report: Format,
        #[arg(long, env = "LIAISON_JOBS", default_value_t = 1)]
        jobs: usize,
    },
    /// Parse a worksheet and print it back in canonical form.
    Check { file: PathBuf },
}

fn window(s: &str) -> Result<(i32, i32), String> {
    parse_range(s).ok_or_else(|| format!("expected lo..hi, got `{s}`"))
}

fn load(file: &PathBuf) -> Result<liaison::shell::Worksheet, ExitCode> {
    let text = std::fs::read_to_string(file).map_err(|e| {
        eprintln!("{}: {e}", file.display());
        ExitCode::from(2)
    })?;
    parse_worksheet(&text).map_err(|e| {
        eprintln!("{}: {e}", file.display());
        ExitCode::from(2)
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.cmd {
        Cmd::Run { file, seed, max_degree, window, report, jobs } => {
            let ws = match load(&file) {
                Ok(ws) => ws,
                Err(code) => return code,
            };
            let flags = RunFlags { seed, max_degree, window, jobs };
            let rep = run(&ws, &flags);
            match report {
                Format::Text => print!("{}", rep.to_text()),
                Format::Machine => println!("{}", rep.to_machine()),
            }
            ExitCode::from(rep.exit_code() as u8)
        }
        Cmd::Check { file } => match load(&file) {
            Ok(ws) => {
                print!("{ws}");
                ExitCode::SUCCESS
            }
            Err(code) => code,
        },
    }
}
