use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, ValueEnum};
use lindef::report::{parse_job, run_job, run_property_suite, SuiteScale};

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Text,
}

/// Runs a job file, or a property suite with `--suite`.
#[derive(Parser)]
#[command(version, about)]
struct Cli {
    job: Option<PathBuf>,
    #[arg(long)]
    cutoff: Option<i32>,
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
    #[arg(long)]
    suite: Option<String>,
    /// Number of suite instances.
    #[arg(long)]
    instances: Option<usize>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}

fn run(cli: &Cli) -> lindef::Result<ExitCode> {
    if let Some(name) = &cli.suite {
        let mut scale = SuiteScale::default_for(name);
        if let Some(n) = cli.instances {
            scale.instances = n;
        }
        if let Some(c) = cli.cutoff {
            scale.cutoff = c;
        }
        let report = run_property_suite(name, cli.seed.unwrap_or(0), Some(scale))?;
        match cli.format {
            Format::Json => println!("{}", serde_json::to_string_pretty(&report).expect("report serializes")),
            Format::Text => {
                println!("{}", report.summary());
                for f in &report.failures {
                    println!("instance {} failed {}: {}\n{}", f.instance, f.check, f.detail, f.input);
                }
            }
        }
        return Ok(ExitCode::from(if report.ok() { 0 } else { 2 }));
    }
    let Some(path) = &cli.job else {
        return Err(lindef::Error::Precondition("no job file and no --suite given".into()));
    };
    let text = std::fs::read_to_string(path)
        .map_err(|e| lindef::Error::Precondition(format!("{}: {e}", path.display())))?;
    let mut spec = parse_job(&text).map_err(|e| e.context(path.display().to_string()))?;
    if let Some(c) = cli.cutoff {
        if c < 1 {
            return Err(lindef::Error::Precondition(format!("cutoff {c} must be at least 1")));
        }
        spec.options.cutoff = cli.cutoff;
    }
    if cli.seed.is_some() {
        spec.options.seed = cli.seed;
    }
    let report = run_job(&spec)?;
    match cli.format {
        Format::Json => println!("{}", serde_json::to_string_pretty(&report).expect("report serializes")),
        Format::Text => print!("{}", report.to_text()),
    }
    Ok(ExitCode::from(if report.has_failed_checks() { 2 } else { 0 }))
}
