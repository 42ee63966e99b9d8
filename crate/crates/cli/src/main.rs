//! `metaplectic`: command-line front end for the metaplectic cover library.

use std::io::Write;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde_json::Value;

use metaplectic::serial::{meta_to_cli, parse_gl2, parse_meta, parse_rational};
use metaplectic::verify::{all_passed, run_suite, SampleConfig, SuiteReport};
use metaplectic::{
    cocycle, hilbert, sigma, sigma_alpha, witness, witness_alpha, Error, PadicContext,
    WitnessReport,
};

#[derive(Parser, Debug)]
#[command(
    name = "metaplectic",
    version,
    about = "Exact arithmetic on the n-fold metaplectic cover of GL(2, Q_p)"
)]
struct Cli {
    /// Residue characteristic p.
    #[arg(long, global = true)]
    p: Option<u64>,
    /// Degree n of the cover.
    #[arg(long, global = true)]
    n: Option<u32>,
    /// Emit JSON instead of plain text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Option<Command>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Hilbert symbol ⟨a, b⟩ as an exponent of ζ.
    Hilbert {
        #[arg(allow_hyphen_values = true)]
        a: String,
        #[arg(allow_hyphen_values = true)]
        b: String,
    },
    /// Kubota cocycle c(g1, g2); matrices are written `a,b;c,d`.
    Cocycle {
        #[arg(allow_hyphen_values = true)]
        g1: String,
        #[arg(allow_hyphen_values = true)]
        g2: String,
    },
    /// Product of two cover elements `a,b;c,d[:e]`.
    Mul {
        #[arg(allow_hyphen_values = true)]
        h1: String,
        #[arg(allow_hyphen_values = true)]
        h2: String,
    },
    /// Inverse of a cover element.
    Inv {
        #[arg(allow_hyphen_values = true)]
        h: String,
    },
    /// The involution σ, or σ_α with `--alpha`.
    Sigma {
        #[arg(allow_hyphen_values = true)]
        h: String,
        #[arg(long, allow_hyphen_values = true)]
        alpha: Option<String>,
    },
    /// Conjugacy witness z for σ (or σ_α) applied to h.
    Witness {
        #[arg(allow_hyphen_values = true)]
        h: String,
        #[arg(long, allow_hyphen_values = true)]
        alpha: Option<String>,
    },
    /// Run property suites and print JSON reports.
    Verify {
        /// Suite name or `all`.
        #[arg(default_value = "all")]
        suite: String,
        #[arg(long, default_value_t = 1000)]
        trials: usize,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        #[arg(long, default_value_t = 12)]
        height: u32,
        /// Record wall time in the `ms` field (makes output non-reproducible).
        #[arg(long)]
        timing: bool,
    },
}

enum Failure {
    Usage(String),
    Verification(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::VerificationFailed(rep) => Failure::Verification(format!(
                "verification failed: lhs {} ≠ rhs {}",
                meta_to_cli(&rep.lhs),
                meta_to_cli(&rep.rhs)
            )),
            other => Failure::Usage(other.to_string()),
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Verification(msg)) => {
            eprintln!("{msg}");
            ExitCode::from(1)
        }
    }
}

fn context(cli: &Cli) -> Result<Option<PadicContext>, Failure> {
    match (cli.p, cli.n) {
        (Some(p), Some(n)) => Ok(Some(PadicContext::new(p, n)?)),
        (None, None) => Ok(None),
        _ => Err(Failure::Usage("--p and --n must be given together".into())),
    }
}

fn print(json: bool, value: Value, text: String) {
    let out = if json {
        serde_json::to_string(&value).expect("serializable")
    } else {
        text
    };
    println!("{out}");
}

/// Returns whether everything that was checked passed.
fn run(cli: Cli) -> Result<bool, Failure> {
    let ctx = context(&cli)?;
    let Some(command) = &cli.command else {
        return Err(Failure::Usage(
            "a subcommand is required (see --help)".into(),
        ));
    };
    if let Command::Verify {
        suite,
        trials,
        seed,
        height,
        timing,
    } = command
    {
        let contexts = match ctx {
            Some(ctx) => vec![ctx],
            None => SampleConfig::default_contexts(),
        };
        let mut cfg = SampleConfig::new(*seed, *height, *trials, contexts)?;
        cfg.timing = *timing;
        let reports = run_suite(suite, &cfg)?;
        emit_reports(cli.json, &reports);
        return Ok(all_passed(&reports));
    }

    let ctx = ctx.ok_or_else(|| Failure::Usage("--p and --n are required".into()))?;
    let json = cli.json;
    match command {
        Command::Hilbert { a, b } => {
            let s = hilbert(&parse_rational(a)?, &parse_rational(b)?, &ctx)?;
            print(
                json,
                serde_json::to_value(s).expect("serializable"),
                s.exp().to_string(),
            );
        }
        Command::Cocycle { g1, g2 } => {
            let c = cocycle(&parse_gl2(g1)?, &parse_gl2(g2)?, &ctx);
            print(
                json,
                serde_json::to_value(c).expect("serializable"),
                c.exp().to_string(),
            );
        }
        Command::Mul { h1, h2 } => {
            let h = parse_meta(h1, &ctx)?.mul(&parse_meta(h2, &ctx)?, &ctx);
            print(
                json,
                serde_json::to_value(&h).expect("serializable"),
                meta_to_cli(&h),
            );
        }
        Command::Inv { h } => {
            let h = parse_meta(h, &ctx)?.inv(&ctx);
            print(
                json,
                serde_json::to_value(&h).expect("serializable"),
                meta_to_cli(&h),
            );
        }
        Command::Sigma { h, alpha } => {
            let h = parse_meta(h, &ctx)?;
            let s = match alpha {
                Some(a) => sigma_alpha(&h, &parse_rational(a)?, &ctx)?,
                None => sigma(&h, &ctx),
            };
            print(
                json,
                serde_json::to_value(&s).expect("serializable"),
                meta_to_cli(&s),
            );
        }
        Command::Witness { h, alpha } => {
            let h = parse_meta(h, &ctx)?;
            let report = match alpha {
                Some(a) => witness_alpha(&h, &parse_rational(a)?, &ctx),
                None => witness(&h, &ctx),
            };
            let report = match report {
                Ok(r) => r,
                Err(Error::VerificationFailed(r)) => *r,
                Err(e) => return Err(e.into()),
            };
            print(
                json,
                serde_json::to_value(&report).expect("serializable"),
                witness_text(&report),
            );
            return Ok(report.verified);
        }
        Command::Verify { .. } => unreachable!("handled above"),
    }
    Ok(true)
}

fn witness_text(r: &WitnessReport) -> String {
    format!(
        "z = {}\nlhs = {}\nrhs = {}\nverified = {}",
        meta_to_cli(&r.z),
        meta_to_cli(&r.lhs),
        meta_to_cli(&r.rhs),
        r.verified
    )
}

/// JSON goes to stdout either way; without `--json` a summary is added on stderr.
fn emit_reports(json: bool, reports: &[SuiteReport]) {
    let mut out = std::io::stdout().lock();
    serde_json::to_writer_pretty(&mut out, reports).expect("serializable");
    let _ = writeln!(out);
    if !json {
        for r in reports {
            eprintln!(
                "{:<14} p={:<3} n={:<2} {:<15} trials={:<5} failures={}",
                r.suite,
                r.ctx.p,
                r.ctx.n,
                serde_json::to_value(r.status)
                    .expect("serializable")
                    .as_str()
                    .unwrap_or(""),
                r.trials,
                r.failures.len()
            );
        }
    }
}
