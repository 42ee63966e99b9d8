//! Acceptance criteria 1–8. Prints one PASS/FAIL line per criterion and
//! exits nonzero if any fails. Equality is exact throughout; the only
//! tolerances are the sample-count floors and wall-clock bounds below.

use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use metaplectic::verify::{run_one, SampleConfig, Status, Suite, SuiteReport};
use metaplectic::{square_map_trivial, PadicContext};

const SEED: u64 = 42;
const MIN_SAMPLES: usize = 1000;
const MIN_OBSTRUCTION_SAMPLES: usize = 500;
const MIN_SPLITTING_PAIRS: usize = 500;
const HILBERT_BOUND: Duration = Duration::from_secs(5);
const COCYCLE_BOUND: Duration = Duration::from_secs(10);
const WITNESS_BOUND: Duration = Duration::from_secs(30);
const FULL_RUN_BOUND: Duration = Duration::from_secs(300);

type Criterion<'a> = (&'static str, Box<dyn Fn() -> Outcome + 'a>);

struct Outcome {
    ok: bool,
    notes: Vec<String>,
}

impl Outcome {
    fn new() -> Self {
        Self {
            ok: true,
            notes: Vec::new(),
        }
    }

    fn require(&mut self, ok: bool, note: impl Into<String>) {
        if !ok {
            self.ok = false;
            self.notes.push(note.into());
        }
    }
}

fn config() -> SampleConfig {
    SampleConfig::new(SEED, 12, MIN_SAMPLES, SampleConfig::default_contexts())
        .expect("valid config")
}

fn timed(suite: Suite, ctx: &PadicContext, cfg: &SampleConfig) -> (SuiteReport, Duration) {
    let start = Instant::now();
    let report = run_one(suite, ctx, cfg);
    (report, start.elapsed())
}

fn label(ctx: &PadicContext) -> String {
    format!("(p={}, n={})", ctx.p(), ctx.n())
}

/// A plain property suite: passes, enough samples, and optionally a per-context time bound.
fn property_suites(suites: &[Suite], bound: Option<Duration>, cfg: &SampleConfig) -> Outcome {
    let mut out = Outcome::new();
    for ctx in &cfg.contexts {
        let mut elapsed = Duration::ZERO;
        for &suite in suites {
            let (r, t) = timed(suite, ctx, cfg);
            elapsed += t;
            out.require(
                r.status == Status::Pass,
                format!("{suite} {}: {} failures", label(ctx), r.failures.len()),
            );
            out.require(
                r.trials >= MIN_SAMPLES,
                format!("{suite} {}: only {} samples", label(ctx), r.trials),
            );
        }
        if let Some(bound) = bound {
            out.require(
                elapsed < bound,
                format!("{}: {:.2?} exceeds {:?}", label(ctx), elapsed, bound),
            );
        }
    }
    out
}

fn dichotomy(cfg: &SampleConfig) -> Outcome {
    let mut out = Outcome::new();
    for ctx in &cfg.contexts {
        let r = run_one(Suite::Obstruction, ctx, cfg);
        if ctx.n() <= 2 {
            out.require(
                r.status == Status::NotApplicable,
                format!("obstruction {}: expected not-applicable", label(ctx)),
            );
            continue;
        }
        out.require(
            r.status == Status::Pass,
            format!("obstruction {}: failed", label(ctx)),
        );
        out.require(
            r.trials >= MIN_OBSTRUCTION_SAMPLES,
            format!("obstruction {}: only {} samples", label(ctx), r.trials),
        );
        let d = r.details.as_ref().expect("obstruction details");
        let hist = d["lambda_histogram"].as_array().expect("histogram");
        let trivial = hist[0].as_u64().unwrap_or(0) as usize;
        out.require(
            trivial == r.trials,
            format!(
                "obstruction {}: λ = 0 on {trivial}/{} samples",
                label(ctx),
                r.trials
            ),
        );
        out.require(
            d["conjugates_matching_sigma"] == 0,
            format!("obstruction {}: some zhz⁻¹ equals σ(h)", label(ctx)),
        );
        out.require(
            d["corrected_witness_verified"] == true,
            format!(
                "obstruction {}: corrected witness did not verify",
                label(ctx)
            ),
        );
    }
    out.require(
        square_map_trivial(2),
        "square_map_trivial(2) should be true",
    );
    for n in [3, 4, 6] {
        out.require(
            !square_map_trivial(n),
            format!("square_map_trivial({n}) should be false"),
        );
    }
    out
}

fn splitting(cfg: &SampleConfig) -> Outcome {
    let mut out = Outcome::new();
    for ctx in &cfg.contexts {
        let r = run_one(Suite::Splitting, ctx, cfg);
        out.require(
            r.trials >= MIN_SPLITTING_PAIRS,
            format!("splitting {}: only {} pairs", label(ctx), r.trials),
        );
        for f in &r.failures {
            out.require(
                false,
                format!("splitting {}: {} at {}", label(ctx), f.property, f.inputs),
            );
        }
    }
    out
}

fn determinism() -> Outcome {
    let mut out = Outcome::new();
    let run = || {
        let start = Instant::now();
        let output = Command::new(env!("CARGO_BIN_EXE_metaplectic"))
            .args(["verify", "all", "--seed", "42", "--json"])
            .output()
            .expect("binary runs");
        (output, start.elapsed())
    };
    let (first, t1) = run();
    let (second, t2) = run();
    out.require(
        first.status.success(),
        format!("first run exited with {}", first.status),
    );
    out.require(
        second.status.success(),
        format!("second run exited with {}", second.status),
    );
    out.require(!first.stdout.is_empty(), "empty output");
    out.require(first.stdout == second.stdout, "outputs differ");
    for t in [t1, t2] {
        out.require(t < FULL_RUN_BOUND, format!("full run took {t:.2?}"));
    }
    out
}

fn main() -> ExitCode {
    let cfg = config();
    let criteria: Vec<Criterion> = vec![
        (
            "1 hilbert suite",
            Box::new(|| property_suites(&[Suite::Hilbert], Some(HILBERT_BOUND), &cfg)),
        ),
        (
            "2 cocycle suite",
            Box::new(|| property_suites(&[Suite::Cocycle], Some(COCYCLE_BOUND), &cfg)),
        ),
        (
            "3 group suite",
            Box::new(|| property_suites(&[Suite::Group], None, &cfg)),
        ),
        (
            "4 involution suite",
            Box::new(|| property_suites(&[Suite::Involution], None, &cfg)),
        ),
        (
            "5 witness suites",
            Box::new(|| {
                property_suites(
                    &[Suite::Witness, Suite::WitnessAlpha, Suite::Rho],
                    Some(WITNESS_BOUND),
                    &cfg,
                )
            }),
        ),
        ("6 n=2 / n≥3 dichotomy", Box::new(|| dichotomy(&cfg))),
        ("7 splitting homomorphism", Box::new(|| splitting(&cfg))),
        ("8 determinism", Box::new(determinism)),
    ];
    let mut all = true;
    for (name, check) in &criteria {
        let start = Instant::now();
        let outcome = check();
        let verdict = if outcome.ok { "PASS" } else { "FAIL" };
        println!("criterion {name}: {verdict} ({:.2?})", start.elapsed());
        for note in &outcome.notes {
            println!("    {note}");
        }
        all &= outcome.ok;
    }
    if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
