//! Named verification suites and their default sizes.

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use rayon::prelude::*;
use thiserror::Error;

use crate::classical::{self, Mode};
use crate::quasidet;
use crate::report::{Check, ConfigEcho, Report};
use crate::uqrep;
use crate::ybmap;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Suite {
    Quasidet,
    Uqrep,
    Ybmap,
    Classical,
    Poisson,
    AppendixA,
    AppendixB,
    All,
}

impl Suite {
    pub const ALL: [Suite; 8] = [
        Suite::Quasidet,
        Suite::Uqrep,
        Suite::Ybmap,
        Suite::Classical,
        Suite::Poisson,
        Suite::AppendixA,
        Suite::AppendixB,
        Suite::All,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Quasidet => "quasidet",
            Suite::Uqrep => "uqrep",
            Suite::Ybmap => "ybmap",
            Suite::Classical => "classical",
            Suite::Poisson => "poisson",
            Suite::AppendixA => "appendixA",
            Suite::AppendixB => "appendixB",
            Suite::All => "all",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = SuiteError;

    fn from_str(s: &str) -> Result<Self, SuiteError> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| SuiteError::UnknownSuite(s.to_string()))
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum RunMode {
    Symbolic,
    Numeric,
    Dual,
}

impl RunMode {
    pub fn name(self) -> &'static str {
        match self {
            RunMode::Symbolic => "symbolic",
            RunMode::Numeric => "numeric",
            RunMode::Dual => "dual",
        }
    }
}

impl FromStr for RunMode {
    type Err = SuiteError;

    fn from_str(s: &str) -> Result<Self, SuiteError> {
        match s {
            "symbolic" => Ok(RunMode::Symbolic),
            "numeric" => Ok(RunMode::Numeric),
            "dual" => Ok(RunMode::Dual),
            _ => Err(SuiteError::InvalidConfig(format!("unknown mode {s:?}"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SuiteError {
    #[error("unknown suite {0:?}")]
    UnknownSuite(String),
    #[error("invalid configuration: {0}")]
    InvalidConfig(String),
}

/// `None` fields fall back to the suite defaults.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteConfig {
    pub suite: Suite,
    pub n: Option<usize>,
    pub mode: Option<RunMode>,
    pub seed: u64,
    pub trunc_order: usize,
    pub samples: Option<usize>,
}

impl SuiteConfig {
    pub fn new(suite: Suite) -> Self {
        SuiteConfig {
            suite,
            n: None,
            mode: None,
            seed: 0,
            trunc_order: 12,
            samples: None,
        }
    }

    pub fn echo(&self) -> ConfigEcho {
        ConfigEcho {
            n: self.n,
            mode: self.mode.map_or("auto", RunMode::name).to_string(),
            seed: self.seed,
            trunc_order: self.trunc_order,
            samples: self.samples,
        }
    }

    fn sizes(&self, default: &[usize]) -> Vec<usize> {
        self.n.map_or_else(|| default.to_vec(), |n| vec![n])
    }

    fn samples_or(&self, d: usize) -> usize {
        self.samples.unwrap_or(d)
    }

    pub fn validate(&self) -> Result<(), SuiteError> {
        let bad = |m: String| Err(SuiteError::InvalidConfig(m));
        if let Some(n) = self.n {
            if n < 2 {
                return bad(format!("n must be at least 2, got {n}"));
            }
            let cap = match (self.suite, self.mode) {
                (Suite::Quasidet, _) => 6,
                (Suite::Uqrep, _) | (Suite::Poisson, _) => 3,
                (Suite::Ybmap, Some(RunMode::Numeric)) => 4,
                (Suite::Ybmap, _) => 3,
                (Suite::Classical, Some(RunMode::Numeric)) => 6,
                (Suite::Classical, _) => 3,
                (Suite::AppendixA, _) => 2,
                (Suite::AppendixB, _) => 3,
                (Suite::All, _) => 3,
            };
            if n > cap {
                return bad(format!("n = {n} exceeds the limit {cap} for suite {} in this mode", self.suite));
            }
        }
        if self.samples == Some(0) {
            return bad("sample count must be at least 1".into());
        }
        if self.trunc_order < 2 {
            return bad(format!("truncation order must be at least 2, got {}", self.trunc_order));
        }
        let allowed: &[RunMode] = match self.suite {
            Suite::Quasidet => &[RunMode::Numeric],
            Suite::Classical | Suite::Ybmap => &[RunMode::Symbolic, RunMode::Numeric],
            Suite::Poisson => &[RunMode::Dual],
            Suite::Uqrep | Suite::AppendixA => &[RunMode::Symbolic],
            Suite::AppendixB => &[RunMode::Symbolic, RunMode::Numeric],
            Suite::All => &[],
        };
        match self.mode {
            Some(m) if !allowed.contains(&m) => bad(format!("mode {} is not available for suite {}", m.name(), self.suite)),
            _ => Ok(()),
        }
    }
}

type Task = Box<dyn Fn() -> Vec<Check> + Send + Sync>;

fn task(f: impl Fn() -> Vec<Check> + Send + Sync + 'static) -> Task {
    Box::new(f)
}

fn wants(mode: Option<RunMode>, m: RunMode) -> bool {
    mode.is_none() || mode == Some(m)
}

fn tasks(cfg: &SuiteConfig) -> Vec<Task> {
    let seed = cfg.seed;
    let mut v: Vec<Task> = Vec::new();
    match cfg.suite {
        Suite::Quasidet => {
            let max = cfg.n.unwrap_or(4);
            let samples = cfg.samples_or(200);
            v.push(task(move || quasidet::verify_random(max, seed, samples)));
        }
        Suite::Uqrep => {
            for n in cfg.sizes(&[2, 3]) {
                v.push(task(move || uqrep::verify_all(n)));
            }
        }
        Suite::Ybmap => {
            let samples = cfg.samples_or(10);
            for n in cfg.sizes(&[2, 3]) {
                if wants(cfg.mode, RunMode::Symbolic) {
                    v.push(task(move || ybmap::verify_rep_pair(n)));
                    v.push(task(move || ybmap::verify_set_ybe(n)));
                    v.push(task(move || ybmap::gauge_obstruction_check(n)));
                }
                if wants(cfg.mode, RunMode::Numeric) {
                    v.push(task(move || ybmap::verify_random(n, 2, seed, samples)));
                }
            }
        }
        Suite::Classical => {
            let samples = cfg.samples_or(100);
            let sym = cfg.sizes(&[2, 3]);
            let num = cfg.sizes(&[2, 3, 4]);
            for &n in &sym {
                if n <= 3 {
                    v.push(task(move || classical::verify_cybe(n)));
                }
            }
            if wants(cfg.mode, RunMode::Symbolic) {
                for &n in sym.iter().filter(|&&n| n <= 3) {
                    v.push(task(move || classical::verify_classical(n, Mode::Symbolic, seed, samples)));
                }
            }
            if wants(cfg.mode, RunMode::Numeric) {
                for n in num {
                    v.push(task(move || classical::verify_numeric(n, seed, samples)));
                }
            }
        }
        Suite::Poisson => {
            let samples = cfg.samples_or(5);
            for n in cfg.sizes(&[2, 3]) {
                v.push(task(move || classical::verify_poisson(n, seed, samples)));
            }
        }
        Suite::AppendixA => {
            for n in cfg.sizes(&[2]) {
                v.push(task(move || ybmap::verify_hopf_properties(n, seed)));
            }
        }
        Suite::AppendixB => {
            let k = cfg.trunc_order;
            if wants(cfg.mode, RunMode::Symbolic) {
                v.push(task(move || classical::verify_qexp_series(k)));
                for n in cfg.sizes(&[2, 3]) {
                    v.push(task(move || uqrep::verify_qexp(n)));
                }
            }
            if wants(cfg.mode, RunMode::Numeric) {
                v.push(task(|| classical::verify_dilog(&classical::DILOG_XS)));
            }
        }
        Suite::All => {
            for s in Suite::ALL.into_iter().filter(|&s| s != Suite::All) {
                let sub = SuiteConfig {
                    suite: s,
                    mode: None,
                    ..cfg.clone()
                };
                for t in tasks(&sub) {
                    let name = s.name();
                    v.push(task(move || {
                        let mut c = t();
                        for x in &mut c {
                            x.name = format!("{name}: {}", x.name);
                        }
                        c
                    }));
                }
            }
        }
    }
    v
}

/// Runs a suite on the current rayon pool. Output order does not depend on
/// scheduling.
pub fn run_suite(cfg: &SuiteConfig) -> Result<Report, SuiteError> {
    cfg.validate()?;
    let start = Instant::now();
    let parts: Vec<Vec<Check>> = tasks(cfg).par_iter().map(|t| t()).collect();
    let checks = parts.into_iter().flatten().collect();
    let elapsed = start.elapsed().as_millis() as u64;
    Ok(Report::new(cfg.suite.name(), cfg.echo(), checks, elapsed))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_round_trip() {
        for s in Suite::ALL {
            assert_eq!(s.name().parse::<Suite>(), Ok(s));
        }
        assert!(matches!("nosuch".parse::<Suite>(), Err(SuiteError::UnknownSuite(_))));
    }

    #[test]
    fn rejects_bad_sizes() {
        let mut c = SuiteConfig::new(Suite::Classical);
        c.n = Some(1);
        assert!(c.validate().is_err());
        c.n = Some(4);
        assert!(c.validate().is_err());
        c.mode = Some(RunMode::Numeric);
        assert!(c.validate().is_ok());
        c.samples = Some(0);
        assert!(c.validate().is_err());
    }

    #[test]
    fn quasidet_is_deterministic() {
        let mut c = SuiteConfig::new(Suite::Quasidet);
        c.n = Some(3);
        c.samples = Some(6);
        c.seed = 7;
        let a = run_suite(&c).unwrap();
        let b = run_suite(&c).unwrap();
        assert_eq!(a.checks, b.checks);
        assert_eq!(a.status, crate::report::Status::Pass);
    }
}
