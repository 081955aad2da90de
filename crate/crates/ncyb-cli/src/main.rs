use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use ncyb::classical::demo_map_n3;
use ncyb::report::Status;
use ncyb::suites::{run_suite, RunMode, Suite, SuiteConfig, SuiteError};

/// Exact verification of quasi-determinant and Yang-Baxter map identities.
#[derive(Parser, Debug)]
#[command(name = "ncyb", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Run a verification suite.
    Verify {
        /// quasidet, uqrep, ybmap, classical, poisson, appendixA, appendixB or all
        suite: String,
        #[arg(long)]
        n: Option<usize>,
        /// symbolic, numeric or dual
        #[arg(long)]
        mode: Option<String>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long = "trunc-order", default_value_t = 12)]
        trunc_order: usize,
        #[arg(long)]
        samples: Option<usize>,
        /// Also write the JSON report here.
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Print worked examples.
    Demo {
        #[command(subcommand)]
        what: Demo,
    },
}

#[derive(Subcommand, Debug)]
enum Demo {
    /// Rank three classical map in symbolic coordinates.
    Map {
        #[arg(long, default_value_t = 3)]
        n: usize,
    },
}

const USAGE: u8 = 2;

fn thread_pool() -> Result<(), String> {
    let Ok(v) = std::env::var("NCYB_THREADS") else {
        return Ok(());
    };
    let k: usize = v
        .parse()
        .ok()
        .filter(|&k| k > 0)
        .ok_or_else(|| format!("NCYB_THREADS must be a positive integer, got {v:?}"))?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(k)
        .build_global()
        .map_err(|e| e.to_string())
}

fn verify(cfg: SuiteConfig, json: Option<PathBuf>) -> ExitCode {
    let report = match run_suite(&cfg) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(USAGE);
        }
    };
    print!("{}", report.to_text());
    if let Some(path) = json {
        if let Err(e) = fs::write(&path, report.to_json()) {
            eprintln!("error: cannot write {}: {e}", path.display());
            return ExitCode::from(USAGE);
        }
    }
    match report.status {
        Status::Fail => ExitCode::from(1),
        _ => ExitCode::SUCCESS,
    }
}

fn parse_config(
    suite: &str,
    n: Option<usize>,
    mode: Option<&str>,
    seed: u64,
    trunc_order: usize,
    samples: Option<usize>,
) -> Result<SuiteConfig, SuiteError> {
    let mut cfg = SuiteConfig::new(suite.parse::<Suite>()?);
    cfg.n = n;
    cfg.mode = mode.map(str::parse::<RunMode>).transpose()?;
    cfg.seed = seed;
    cfg.trunc_order = trunc_order;
    cfg.samples = samples;
    cfg.validate()?;
    Ok(cfg)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(USAGE) } else { ExitCode::SUCCESS };
        }
    };
    if let Err(e) = thread_pool() {
        eprintln!("error: {e}");
        return ExitCode::from(USAGE);
    }
    match cli.command {
        Command::Verify {
            suite,
            n,
            mode,
            seed,
            trunc_order,
            samples,
            json,
        } => match parse_config(&suite, n, mode.as_deref(), seed, trunc_order, samples) {
            Ok(cfg) => verify(cfg, json),
            Err(e) => {
                eprintln!("error: {e}");
                ExitCode::from(USAGE)
            }
        },
        Command::Demo { what: Demo::Map { n } } => {
            if n != 3 {
                eprintln!("error: the map demo is available for n = 3 only");
                return ExitCode::from(USAGE);
            }
            match demo_map_n3() {
                Ok(s) => {
                    print!("{s}");
                    ExitCode::SUCCESS
                }
                Err(e) => {
                    eprintln!("error: {e}");
                    ExitCode::from(1)
                }
            }
        }
    }
}
