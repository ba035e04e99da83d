use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use meanchaos::experiment::{exit_code, list_experiments, load_config, run_with_workers};

#[derive(Parser)]
#[command(
    name = "meanchaos",
    version,
    about = "Run sequence-average and mean Li-Yorke experiments"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run the experiment described by a JSON config.
    Run {
        config: PathBuf,
        /// Output directory (overrides the config's `output_dir`).
        #[arg(long)]
        out: Option<PathBuf>,
        /// Worker threads.
        #[arg(long)]
        workers: Option<usize>,
        /// Master seed (overrides the config's `seed`).
        #[arg(long)]
        seed: Option<u64>,
        /// Override a config field, e.g. `--set experiment.n=1000`.
        #[arg(long = "set", value_name = "KEY=VALUE")]
        overrides: Vec<String>,
    },
    /// List the experiment kinds.
    List,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::List => {
            print!("{}", list_experiments());
            ExitCode::SUCCESS
        }
        Command::Run {
            config,
            out,
            workers,
            seed,
            overrides,
        } => {
            let result = load_config(&config, &overrides).and_then(|mut cfg| {
                if let Some(s) = seed {
                    cfg.seed = s;
                }
                let dir = out
                    .or_else(|| cfg.output_dir.clone())
                    .unwrap_or_else(|| PathBuf::from("out"));
                run_with_workers(&cfg, &dir, workers).map(|summary| (summary, dir))
            });
            match result {
                Ok((summary, dir)) => {
                    for a in &summary.assertions {
                        let tag = if a.passed { "PASS" } else { "FAIL" };
                        println!("{tag} {}: {}", a.name, a.detail);
                    }
                    println!("{} -> {}", summary.experiment, dir.display());
                    ExitCode::from(summary.exit_code() as u8)
                }
                Err(e) => {
                    eprintln!("error: {e}");
                    ExitCode::from(exit_code(&e) as u8)
                }
            }
        }
    }
}
