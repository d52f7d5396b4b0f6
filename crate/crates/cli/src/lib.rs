//! Command-line front end for `ratsq-core`: single queries, sweeps, heatmaps,
//! analysis reports and figure regeneration.

pub mod args;
pub mod commands;
pub mod error;
pub mod figures;
pub mod output;
pub mod render;

pub use args::Cli;
pub use error::CliError;

use args::Command;
use output::emit;

/// Runs one parsed invocation. Data generation uses a worker pool of `--jobs`
/// threads when given; output never depends on the pool size.
pub fn run(cli: Cli) -> Result<(), CliError> {
    match cli.jobs {
        Some(jobs) => rayon::ThreadPoolBuilder::new()
            .num_threads(jobs as usize)
            .build()
            .map_err(|e| CliError::Internal(format!("thread pool: {e}")))?
            .install(|| dispatch(cli.command)),
        None => dispatch(cli.command),
    }
}

fn dispatch(command: Command) -> Result<(), CliError> {
    use commands::*;
    match command {
        Command::Sigma { a, strategy } => emit(None, &cmd_sigma(&a, strategy)?),
        Command::Tau { a, s } => emit(None, &cmd_tau(&a, &s)?),
        Command::Tset { a, s } => emit(None, &cmd_tset(&a, &s)?),
        Command::FirstSquare { a } => emit(None, &cmd_first_square(&a)?),
        Command::Cf { d } => emit(None, &cmd_cf(&d)?),
        Command::Sweep {
            from,
            to,
            format,
            out,
        } => emit(out.as_deref(), &cmd_sweep(&from, &to, format)?),
        Command::Heatmap {
            a_min,
            a_max,
            s_min,
            s_max,
            mode,
            format,
            out,
        } => emit(
            out.as_deref(),
            &cmd_heatmap(a_min, a_max, (s_min, s_max), mode, format)?,
        ),
        Command::Figures { out_dir } => {
            let written = figures::write_figures(&out_dir)?;
            let listing: String = written
                .iter()
                .map(|p| format!("{}\n", p.display()))
                .collect();
            emit(None, listing.as_bytes())
        }
        Command::Analyze(args) => emit(args.out.as_deref(), &cmd_analyze(&args.report)?),
    }
}
