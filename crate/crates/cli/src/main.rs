use std::process::ExitCode;

use clap::{Parser, Subcommand};
use gtkit_cli::{
    cmd_closed, cmd_count, cmd_enumerate, cmd_table, cmd_verify, table_csv, ClosedArgs, CountArgs, EnumerateArgs,
    Format, RunReport, TableArgs, VerifyArgs, EXIT_USAGE,
};

/// Exact counting of generalized Gelfand-Tsetlin patterns and identity checks.
#[derive(Parser)]
#[command(name = "gtkit", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Signed count F or q-count F_q of (r,n,c)-patterns with a given top row.
    Count(CountArgs),
    /// Brute-force F(n-1,n,c;k) next to the closed form.
    Table(TableArgs),
    /// Run verification sweeps.
    Verify(VerifyArgs),
    /// Evaluate a closed-form product.
    Closed(ClosedArgs),
    /// List the patterns with a given top row.
    Enumerate(EnumerateArgs),
}

fn init_threads() -> Result<(), String> {
    let Ok(raw) = std::env::var("GTKIT_THREADS") else {
        return Ok(());
    };
    let n: usize = raw.trim().parse().map_err(|_| format!("GTKIT_THREADS must be a positive integer, got `{raw}`"))?;
    if n == 0 {
        return Err("GTKIT_THREADS must be positive".into());
    }
    rayon::ThreadPoolBuilder::new().num_threads(n).build_global().map_err(|e| e.to_string())
}

fn emit(report: &RunReport) -> ExitCode {
    print!("{}", report.to_json());
    ExitCode::from(report.exit_code as u8)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_USAGE as u8 } else { 0 });
        }
    };
    if let Err(msg) = init_threads() {
        eprintln!("error: {msg}");
        return ExitCode::from(EXIT_USAGE as u8);
    }
    let outcome = match &cli.command {
        Command::Count(a) => cmd_count(a).map(|r| emit(&r)),
        Command::Verify(a) => cmd_verify(a).map(|r| emit(&r)),
        Command::Closed(a) => cmd_closed(a).map(|r| emit(&r)),
        Command::Enumerate(a) => cmd_enumerate(a).map(|r| emit(&r)),
        Command::Table(a) => cmd_table(a).map(|(report, rows)| match a.format {
            Format::Json => emit(&report),
            Format::Csv => {
                print!("{}", table_csv(&rows));
                ExitCode::from(report.exit_code as u8)
            }
        }),
    };
    outcome.unwrap_or_else(|e| {
        eprintln!("error: {e}");
        ExitCode::from(EXIT_USAGE as u8)
    })
}
