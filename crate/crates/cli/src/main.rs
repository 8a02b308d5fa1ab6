use std::path::PathBuf;
use std::process::ExitCode;

use algebra_core::TermOrder;
use clap::{Parser, ValueEnum};
use cli::task::{check_level, check_resolution_length, check_window};
use cli::{run_scenario, CliError, Options, TaskDefaults};

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Order {
    Grevlex,
    Lex,
}

/// Runs the tasks of a scenario file and writes a report.
#[derive(Parser, Debug)]
#[command(version)]
struct Args {
    /// Scenario file.
    scenario: PathBuf,
    /// Report destination; standard output when absent.
    #[arg(long, short)]
    output: Option<PathBuf>,
    /// Level cap J for tasks that do not set `level`.
    #[arg(long)]
    level: Option<usize>,
    /// Internal-degree window for tasks that do not set `window`.
    #[arg(long, num_args = 2, value_names = ["D0", "D1"], allow_negative_numbers = true)]
    window: Option<Vec<i64>>,
    /// Seed recorded for tasks that do not set `seed`.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, value_enum, default_value_t = Order::Grevlex)]
    order: Order,
    /// Resolution length for tasks that do not set `resolution_length`.
    #[arg(long)]
    resolution_length: Option<usize>,
    /// Worker threads.
    #[arg(long, default_value_t = 1)]
    jobs: usize,
}

fn options(a: &Args) -> Result<Options, CliError> {
    let usage = |e: CliError| match e {
        CliError::OutOfBounds { param, value, bounds, .. } => {
            CliError::Usage(format!("--{} {value} is outside {bounds}", param.replace('_', "-")))
        }
        e => e,
    };
    let mut d = TaskDefaults {
        seed: a.seed,
        ..TaskDefaults::default()
    };
    if let Some(l) = a.level {
        check_level(0, l, 1).map_err(usage)?;
        d.level = l;
    }
    if let Some(w) = &a.window {
        check_window(0, (w[0], w[1])).map_err(usage)?;
        d.window = (w[0], w[1]);
    }
    if let Some(l) = a.resolution_length {
        check_resolution_length(0, l).map_err(usage)?;
        d.resolution_length = Some(l);
    }
    if a.jobs == 0 {
        return Err(CliError::Usage("--jobs must be at least 1".into()));
    }
    Ok(Options {
        order: match a.order {
            Order::Grevlex => TermOrder::Grevlex,
            Order::Lex => TermOrder::Lex,
        },
        defaults: d,
        jobs: a.jobs,
    })
}

fn main() -> ExitCode {
    let args = Args::parse();
    let result = options(&args).and_then(|opts| {
        let text = std::fs::read_to_string(&args.scenario).map_err(|e| CliError::Io {
            path: args.scenario.display().to_string(),
            message: e.to_string(),
        })?;
        run_scenario(&text, &opts)
    });
    let outcome = match result {
        Ok(o) => o,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    match &args.output {
        Some(p) => {
            if let Err(e) = std::fs::write(p, &outcome.report) {
                eprintln!("error: {}: {e}", p.display());
                return ExitCode::from(2);
            }
        }
        None => print!("{}", outcome.report),
    }
    ExitCode::from(outcome.exit_code as u8)
}
