//! Seeded property suites over the whole stack.
//!
//! A suite runs its checks on the hand-built corpus followed by
//! `trials` random draws, per context, and reports every failing trial
//! with its inputs serialized in CLI syntax so it can be replayed.

mod sample;
mod suites;

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;
use serde_json::Value;

use crate::error::{Error, Result};
use crate::padic::PadicContext;

pub use sample::{
    alpha_corpus, corpus, random_gl2, rng_for, sample_gl2, unit_non_power, TrialDraw,
};

/// The default `(p, n)` contexts.
pub const DEFAULT_CONTEXTS: [(u64, u32); 6] = [(2, 2), (3, 2), (5, 2), (5, 4), (7, 3), (13, 6)];

#[derive(Clone, Debug)]
pub struct SampleConfig {
    pub seed: u64,
    /// Bound on numerators of sampled entries.
    pub height: u32,
    /// Random trials per suite and context, on top of the corpus.
    pub trials: usize,
    pub contexts: Vec<PadicContext>,
    /// Record wall time in reports. Off by default so output is reproducible.
    pub timing: bool,
}

impl SampleConfig {
    pub fn new(seed: u64, height: u32, trials: usize, contexts: Vec<PadicContext>) -> Result<Self> {
        if trials == 0 {
            return Err(Error::PreconditionViolated(
                "trials must be at least 1".into(),
            ));
        }
        if height < 2 {
            return Err(Error::PreconditionViolated(
                "height must be at least 2".into(),
            ));
        }
        if contexts.is_empty() {
            return Err(Error::PreconditionViolated("no contexts given".into()));
        }
        Ok(Self {
            seed,
            height,
            trials,
            contexts,
            timing: false,
        })
    }

    pub fn default_contexts() -> Vec<PadicContext> {
        DEFAULT_CONTEXTS
            .iter()
            .map(|&(p, n)| PadicContext::new(p, n).expect("default contexts are valid"))
            .collect()
    }
}

impl Default for SampleConfig {
    fn default() -> Self {
        Self::new(42, 12, 1000, Self::default_contexts()).expect("valid defaults")
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Suite {
    Hilbert,
    Cocycle,
    Splitting,
    Group,
    Involution,
    Witness,
    WitnessAlpha,
    Rho,
    Obstruction,
}

impl Suite {
    pub const ALL: [Suite; 9] = [
        Suite::Hilbert,
        Suite::Cocycle,
        Suite::Splitting,
        Suite::Group,
        Suite::Involution,
        Suite::Witness,
        Suite::WitnessAlpha,
        Suite::Rho,
        Suite::Obstruction,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Hilbert => "hilbert",
            Suite::Cocycle => "cocycle",
            Suite::Splitting => "splitting",
            Suite::Group => "group",
            Suite::Involution => "involution",
            Suite::Witness => "witness",
            Suite::WitnessAlpha => "witness-alpha",
            Suite::Rho => "rho",
            Suite::Obstruction => "obstruction",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|suite| suite.name() == s)
            .ok_or_else(|| Error::UnknownSuite(s.to_string()))
    }
}

/// One failing check, with everything needed to replay it.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Failure {
    pub property: String,
    pub inputs: Value,
    pub lhs: Value,
    pub rhs: Value,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Pass,
    Fail,
    NotApplicable,
}

#[derive(Clone, Debug, Serialize)]
pub struct CtxId {
    pub p: u64,
    pub n: u32,
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub ctx: CtxId,
    pub status: Status,
    pub trials: usize,
    pub failures: Vec<Failure>,
    pub ms: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub details: Option<Value>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.status != Status::Fail
    }
}

/// Runs `name` (a suite name or `all`) over every context in `cfg`.
pub fn run_suite(name: &str, cfg: &SampleConfig) -> Result<Vec<SuiteReport>> {
    let suites: Vec<Suite> = if name == "all" {
        Suite::ALL.to_vec()
    } else {
        vec![name.parse()?]
    };
    let mut reports = Vec::new();
    for suite in suites {
        for ctx in &cfg.contexts {
            reports.push(run_one(suite, ctx, cfg));
        }
    }
    reports.sort_by(|a, b| {
        let key = |r: &SuiteReport| {
            let s: Suite = r.suite.parse().expect("known suite");
            (s, r.ctx.p, r.ctx.n)
        };
        key(a).cmp(&key(b))
    });
    Ok(reports)
}

pub fn run_one(suite: Suite, ctx: &PadicContext, cfg: &SampleConfig) -> SuiteReport {
    let start = Instant::now();
    let (status, trials, failures, details) = match suite {
        Suite::Obstruction => suites::obstruction(ctx, cfg),
        _ => {
            let total = corpus(ctx).len() + cfg.trials;
            let failures: Vec<Failure> = (0..total as u64)
                .into_par_iter()
                .flat_map_iter(|i| confirmed_failures(suite, ctx, cfg, i))
                .collect();
            let status = if failures.is_empty() {
                Status::Pass
            } else {
                Status::Fail
            };
            let details = (suite == Suite::Splitting)
                .then(|| suites::splitting_details(ctx, cfg, total as u64));
            (status, total, failures, details)
        }
    };
    SuiteReport {
        suite: suite.name().to_string(),
        ctx: CtxId {
            p: ctx.p(),
            n: ctx.n(),
        },
        status,
        trials,
        failures,
        ms: if cfg.timing {
            start.elapsed().as_millis() as u64
        } else {
            0
        },
        details,
    }
}

/// Runs trial `i`; any failures are re-run and kept only if they recur.
fn confirmed_failures(
    suite: Suite,
    ctx: &PadicContext,
    cfg: &SampleConfig,
    i: u64,
) -> Vec<Failure> {
    let first = suites::run_trial(suite, ctx, cfg, i);
    if first.is_empty() {
        return first;
    }
    let again = suites::run_trial(suite, ctx, cfg, i);
    first.into_iter().filter(|f| again.contains(f)).collect()
}

/// Every report passed or was not applicable.
pub fn all_passed(reports: &[SuiteReport]) -> bool {
    reports.iter().all(SuiteReport::passed)
}
