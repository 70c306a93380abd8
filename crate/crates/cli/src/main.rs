use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::Parser;
use monodromy_cli::{run, CliError, Command, JobConfig, Outcome};

/// Eigenprojector lifting, monodromy and adiabatic checks.
#[derive(Debug, Parser)]
#[command(name = "monodromy", version)]
struct Args {
    command: Command,
    /// JSON job configuration; defaults apply when omitted.
    #[arg(long)]
    config: Option<PathBuf>,
    /// Directory for `<command>.json` and `<command>.csv`.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Seed for the random sweep (overrides the config).
    #[arg(long)]
    seed: Option<u64>,
    /// Print the CSV table to stdout instead of the JSON report.
    #[arg(long)]
    csv: bool,
}

fn load(args: &Args) -> Result<JobConfig, CliError> {
    let mut config = match &args.config {
        Some(path) => {
            let text = fs::read_to_string(path)
                .map_err(|e| CliError::Config(format!("cannot read {}: {e}", path.display())))?;
            JobConfig::from_json(&text)?
        }
        None => JobConfig::default(),
    };
    if let Some(seed) = args.seed {
        config.sweep.seed = seed;
    }
    Ok(config)
}

fn emit(args: &Args, outcome: &Outcome) -> Result<(), CliError> {
    let json = outcome.report.to_json();
    let csv = outcome.table.as_ref().map(|t| t.render());
    if let Some(dir) = &args.out {
        fs::create_dir_all(dir)?;
        let name = args.command.name();
        fs::write(dir.join(format!("{name}.json")), format!("{json}\n"))?;
        if let Some(csv) = &csv {
            fs::write(dir.join(format!("{name}.csv")), csv)?;
        }
    }
    let text = match (args.csv, csv) {
        (true, Some(csv)) => csv,
        _ => format!("{json}\n"),
    };
    match io::stdout().lock().write_all(text.as_bytes()) {
        Err(e) if e.kind() != io::ErrorKind::BrokenPipe => Err(e.into()),
        _ => Ok(()),
    }
}

fn main() -> ExitCode {
    let args = Args::parse();
    let result = load(&args).and_then(|config| run(args.command, &config)).and_then(|outcome| {
        emit(&args, &outcome)?;
        match outcome.violation {
            Some(msg) => Err(CliError::TheoremViolation(msg)),
            None => Ok(()),
        }
    });
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("monodromy: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
