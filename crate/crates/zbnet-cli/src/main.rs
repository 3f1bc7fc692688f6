//! Command-line pipeline driver: ingest field-tagged records, build the
//! two-mode networks, and derive the collaboration, subject, and
//! distribution reports.

mod config;
mod ops;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use config::PipelineConfig;

#[derive(Parser)]
#[command(name = "zbnet", about = "Bibliographic network analysis pipeline")]
struct Cli {
    /// Config file in `key = value` format.
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    /// Output directory (overrides the config file).
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Worker threads (current implementation is single-threaded; the
    /// flag is accepted for forward compatibility and must be >= 1).
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Parse raw records into the canonical store with entity maps.
    Ingest {
        /// Raw record file (overrides the config key `records`).
        input: Option<PathBuf>,
    },
    /// Write the four two-mode networks and the year partition.
    Build,
    /// Derive collaboration networks, indices, cores, and islands.
    Derive,
    /// Subject report bundle: bias, profiles, co-classification, TF-IDF.
    Subject {
        /// MSC prefix such as 05C (overrides the config key).
        prefix: Option<String>,
        /// Keep only the k best keywords per MSC class.
        #[arg(long)]
        top_k: Option<usize>,
    },
    /// Distribution, Bradford, and power-law plot data.
    Dist,
}

/// Exit 2 for configuration problems, 1 for data problems.
fn load_config(cli: &Cli) -> Result<PipelineConfig, String> {
    let mut config = match &cli.config {
        Some(path) => PipelineConfig::from_file(path).map_err(|e| format!("{e:#}"))?,
        None => PipelineConfig::default(),
    };
    if let Some(out) = &cli.out {
        config.out = out.clone();
    }
    if let Some(threads) = cli.threads {
        if threads < 1 {
            return Err("threads must be >= 1".to_string());
        }
        config.threads = threads;
    }
    if let Command::Ingest { input: Some(path) } = &cli.command {
        config.records = Some(path.clone());
    }
    if let Command::Subject {
        top_k: Some(k), ..
    } = &cli.command
    {
        config.top_k = *k;
    }
    config.validate().map_err(|e| format!("{e:#}"))?;
    if matches!(cli.command, Command::Ingest { .. }) {
        match &config.records {
            None => return Err("ingest needs an input path (argument or config key `records`)".into()),
            Some(path) if !path.exists() => {
                return Err(format!("input path {} does not exist", path.display()))
            }
            Some(_) => {}
        }
    }
    Ok(config)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let config = match load_config(&cli) {
        Ok(c) => c,
        Err(message) => {
            eprintln!("zbnet: config error: {message}");
            return ExitCode::from(2);
        }
    };
    let result = match &cli.command {
        Command::Ingest { .. } => ops::cmd_ingest(&config),
        Command::Build => ops::cmd_build(&config),
        Command::Derive => ops::cmd_derive(&config),
        Command::Subject { prefix, .. } => ops::cmd_subject(&config, prefix.as_deref()),
        Command::Dist => ops::cmd_dist(&config),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("zbnet: {e:#}");
            ExitCode::from(1)
        }
    }
}
