use std::io::{Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Duration;

use clap::{Parser, Subcommand, ValueEnum};

use semideal::lab::{self, HypothesisMode, LabConfig};
use semideal::script::{self, LabOutcome, RunConfig};
use semideal::Bounds;

#[derive(Parser)]
#[command(name = "semideal", version, about = "Ideal theory in commutative semirings")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    Strict,
    DropZerosumfree,
    DropAll,
}

#[derive(Subcommand)]
enum Cmd {
    /// Execute a script; `-` reads standard input.
    Run {
        file: PathBuf,
        #[arg(long)]
        json: bool,
        #[arg(long, default_value_t = 200)]
        elem_bound: u64,
        #[arg(long, default_value_t = 8)]
        exp_bound: u32,
        #[arg(long, default_value_t = 16)]
        rad_bound: u32,
    },
    /// Sweep every theorem checker over the finite catalog.
    Lab {
        #[arg(long, default_value_t = script::DEFAULT_LAB_ORDER)]
        order_cap: usize,
        #[arg(long)]
        json: bool,
        /// Seconds before the sweep gives up.
        #[arg(long)]
        time_budget: Option<f64>,
        /// Comma-separated catalog entry names.
        #[arg(long, value_delimiter = ',')]
        scope: Option<Vec<String>>,
        #[arg(long, value_enum, default_value_t = Mode::Strict)]
        mode: Mode,
    },
}

fn read_source(file: &PathBuf) -> std::io::Result<String> {
    if file.as_os_str() == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s)?;
        Ok(s)
    } else {
        std::fs::read_to_string(file)
    }
}

/// Writes to stdout; a closed pipe downstream is not an error.
fn emit(text: &str) {
    let mut out = std::io::stdout().lock();
    let _ = out.write_all(text.as_bytes()).and_then(|()| out.flush());
}

fn run(file: &PathBuf, cfg: RunConfig) -> ExitCode {
    let src = match read_source(file) {
        Ok(s) => s,
        Err(e) => {
            eprintln!("semideal: {}: {e}", file.display());
            return ExitCode::from(2);
        }
    };
    let parsed = match script::parse(&src) {
        Ok(s) => s,
        Err(e) => {
            eprintln!("semideal: {}:{e}", file.display());
            return ExitCode::from(2);
        }
    };
    let reports = script::execute(&parsed, &cfg);
    emit(&script::render(&reports, cfg.json));
    if reports.iter().any(|r| r.is_error()) {
        ExitCode::FAILURE
    } else {
        ExitCode::SUCCESS
    }
}

fn sweep(order_cap: usize, json: bool, budget: Option<f64>, names: Option<Vec<String>>, mode: Mode) -> ExitCode {
    let cfg = LabConfig {
        order_cap,
        mode: match mode {
            Mode::Strict => HypothesisMode::Strict,
            Mode::DropZerosumfree => HypothesisMode::DropZerosumfree,
            Mode::DropAll => HypothesisMode::DropAll,
        },
        time_budget: budget.map(Duration::from_secs_f64),
        ..LabConfig::default()
    };
    let result = lab::scope(order_cap, names.as_deref()).and_then(|s| lab::run_all(&s, &cfg));
    let reports = match result {
        Ok(r) => r,
        Err(e) => {
            eprintln!("semideal: {e}");
            return ExitCode::from(2);
        }
    };
    let out = LabOutcome {
        order_cap,
        all_passed: !lab::any_violated(&reports),
        reports,
    };
    if json {
        emit(&format!("{}\n", serde_json::to_string_pretty(&out).expect("reports serialize")));
    } else {
        emit(&format!("{}\n", out.text()));
    }
    if out.all_passed {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

fn main() -> ExitCode {
    match Cli::parse().cmd {
        Cmd::Run {
            file,
            json,
            elem_bound,
            exp_bound,
            rad_bound,
        } => {
            let bounds = Bounds::default()
                .with_elem_bound(elem_bound)
                .with_exp_bound(exp_bound)
                .with_rad_bound(rad_bound);
            run(&file, RunConfig { bounds, json })
        }
        Cmd::Lab {
            order_cap,
            json,
            time_budget,
            scope,
            mode,
        } => sweep(order_cap, json, time_budget, scope, mode),
    }
}
