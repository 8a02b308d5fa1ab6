//! Batch front end: scenario files in, deterministic reports out.

pub mod error;
pub mod report;
pub mod run;
pub mod scenario;
pub mod task;

use algebra_core::TermOrder;

pub use error::CliError;
pub use run::{exit_code, run_all, Class, TaskResult};
pub use scenario::{parse_scenario, Scenario};
pub use task::{Op, Task, TaskDefaults};

#[derive(Clone, Debug)]
pub struct Options {
    pub order: TermOrder,
    pub defaults: TaskDefaults,
    pub jobs: usize,
}

impl Default for Options {
    fn default() -> Self {
        Self {
            order: TermOrder::Grevlex,
            defaults: TaskDefaults::default(),
            jobs: 1,
        }
    }
}

pub struct Outcome {
    pub report: String,
    pub exit_code: i32,
    pub results: Vec<TaskResult>,
}

/// Parses, runs and renders. Parse errors are returned before any task runs.
pub fn run_scenario(text: &str, opts: &Options) -> Result<Outcome, CliError> {
    let sc = parse_scenario(text, opts.order, &opts.defaults)?;
    let results = run_all(&sc, opts.jobs);
    let order = match opts.order {
        TermOrder::Grevlex => "grevlex",
        TermOrder::Lex => "lex",
    };
    let report = report::render(&sc, &results, &report::Meta { order, seed: opts.defaults.seed });
    Ok(Outcome {
        exit_code: exit_code(&results),
        report,
        results,
    })
}
