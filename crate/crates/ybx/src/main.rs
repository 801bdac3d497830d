use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use ybx::chain::{format_chain, run_chain, ChainKind, DEFAULT_REL_GAP};
use ybx::suites::{run_suite, Suite, VerifyOptions};
use ybx::sweep::{format_summary, run_sweep, write_csv, SweepTarget, DEFAULT_BERRY_STEPS};

const EXIT_FAIL: u8 = 1;
const EXIT_USAGE: u8 = 2;

/// Yang-Baxter, braid and chain-model checks.
#[derive(Debug, Parser)]
#[command(name = "ybx", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Run a verification suite and write a JSON report.
    Verify {
        suite: Suite,
        #[arg(long, default_value_t = 100)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Override every relation check's tolerance.
        #[arg(long)]
        tol: Option<f64>,
        /// Report path; stdout when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Sweep a functional over theta in [0, pi] and write CSV.
    Sweep {
        target: SweepTarget,
        /// Grid points; 3001 by default, 25 for `berry`.
        #[arg(long)]
        grid: Option<usize>,
        /// Loop discretization for `berry`.
        #[arg(long, default_value_t = DEFAULT_BERRY_STEPS)]
        steps: usize,
        /// CSV path; stdout when omitted (the summary then goes to stderr).
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Diagonalize a Kitaev or Z3 chain and summarize its ground space.
    Chain {
        model: ChainKind,
        #[arg(long)]
        n: usize,
        #[arg(long, allow_negative_numbers = true)]
        t1: f64,
        #[arg(long, allow_negative_numbers = true)]
        t2: f64,
        #[arg(long, default_value_t = DEFAULT_REL_GAP)]
        rel_gap: f64,
        /// Print the summary as JSON.
        #[arg(long)]
        json: bool,
    },
}

fn usage(msg: impl std::fmt::Display) -> ExitCode {
    eprintln!("ybx: {msg}");
    ExitCode::from(EXIT_USAGE)
}

fn create(path: &PathBuf) -> io::Result<BufWriter<File>> {
    File::create(path).map(BufWriter::new)
}

fn verify(suite: Suite, opts: VerifyOptions, out: Option<PathBuf>) -> ExitCode {
    let report = match run_suite(suite, &opts) {
        Ok(r) => r,
        Err(e) => return usage(e),
    };
    let json = report.to_json();
    let written = match &out {
        Some(p) => create(p).and_then(|mut f| writeln!(f, "{json}").and_then(|_| f.flush())),
        None => writeln!(io::stdout(), "{json}"),
    };
    if let Err(e) = written {
        return usage(format!("cannot write report: {e}"));
    }
    let s = &report.summary;
    eprintln!(
        "{}: {}/{} checks passed, max residual {:.3e}",
        report.suite,
        s.total - s.failed,
        s.total,
        s.max_residual
    );
    if s.passed {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(EXIT_FAIL)
    }
}

fn sweep(target: SweepTarget, grid: usize, steps: usize, out: Option<PathBuf>) -> ExitCode {
    let result = match run_sweep(target, grid, steps) {
        Ok(r) => r,
        Err(e) => return usage(e),
    };
    let summary = format_summary(&result.summary);
    match &out {
        Some(p) => {
            let written = create(p)
                .map_err(csv::Error::from)
                .and_then(|f| write_csv(&result, f));
            if let Err(e) = written {
                return usage(format!("cannot write {}: {e}", p.display()));
            }
            println!("{summary}");
        }
        None => {
            if let Err(e) = write_csv(&result, io::stdout().lock()) {
                return usage(format!("cannot write CSV: {e}"));
            }
            eprintln!("{summary}");
        }
    }
    ExitCode::SUCCESS
}

fn chain(model: ChainKind, n: usize, t1: f64, t2: f64, rel_gap: f64, json: bool) -> ExitCode {
    match run_chain(model, n, t1, t2, rel_gap) {
        Ok(s) if json => {
            println!(
                "{}",
                serde_json::to_string_pretty(&s).expect("summary is serializable")
            );
            ExitCode::SUCCESS
        }
        Ok(s) => {
            print!("{}", format_chain(&s));
            ExitCode::SUCCESS
        }
        Err(e) => usage(e),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match cli.command {
        Command::Verify {
            suite,
            samples,
            seed,
            tol,
            out,
        } => {
            if let Some(t) = tol {
                if !(t.is_finite() && t > 0.0) {
                    return usage("--tol must be a positive number");
                }
            }
            verify(
                suite,
                VerifyOptions {
                    samples,
                    seed,
                    tolerance: tol,
                },
                out,
            )
        }
        Command::Sweep {
            target,
            grid,
            steps,
            out,
        } => sweep(
            target,
            grid.unwrap_or_else(|| target.default_grid()),
            steps,
            out,
        ),
        Command::Chain {
            model,
            n,
            t1,
            t2,
            rel_gap,
            json,
        } => chain(model, n, t1, t2, rel_gap, json),
    }
}
