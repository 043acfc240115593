//! Named verification suites with deterministic JSON reports.
//!
//! Each suite runs a family of exact checks on small instances and returns
//! one [`Outcome`] per instance. Instances are fixed per Cartan type; the
//! seed only drives the sampled spot checks.

mod algebra;
mod flag;
mod operators;

use crate::cartan::{CartanDatum, CartanError, RootSum, Weight};
use crate::coord::CoordError;
use crate::dmod::DmodError;
use crate::emod::EmodError;
use crate::rmatrix::RmatrixError;
use crate::uqg::UqError;
use crate::wmod::WmodError;
use serde::Serialize;
use std::fmt;
use std::str::FromStr;

pub const SCHEMA: u32 = 1;

#[derive(Debug, thiserror::Error)]
pub enum VerifyError {
    #[error("unknown suite {0:?}")]
    UnknownSuite(String),
    #[error("{0}")]
    Unsupported(String),
    #[error(transparent)]
    Cartan(#[from] CartanError),
    #[error(transparent)]
    Algebra(#[from] UqError),
    #[error(transparent)]
    Module(#[from] WmodError),
    #[error(transparent)]
    Rmatrix(#[from] RmatrixError),
    #[error(transparent)]
    Coord(#[from] CoordError),
    #[error(transparent)]
    Emod(#[from] EmodError),
    #[error(transparent)]
    Dmod(#[from] DmodError),
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct Outcome {
    pub suite: String,
    pub instance: String,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<String>,
}

impl Outcome {
    fn new(suite: Suite, instance: impl Into<String>, failure: Option<String>) -> Self {
        Outcome {
            suite: suite.name().to_string(),
            instance: instance.into(),
            pass: failure.is_none(),
            counterexample: failure,
        }
    }

    fn check(suite: Suite, instance: impl Into<String>, ok: bool, why: impl FnOnce() -> String) -> Self {
        Outcome::new(suite, instance, (!ok).then(why))
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub schema: u32,
    pub seed: u64,
    pub pass: bool,
    pub outcomes: Vec<Outcome>,
}

impl Report {
    /// Outcomes are sorted by `(suite, instance)` so the report does not
    /// depend on the order the instances ran in.
    pub fn new(seed: u64, mut outcomes: Vec<Outcome>) -> Self {
        outcomes.sort();
        Report {
            schema: SCHEMA,
            seed,
            pass: outcomes.iter().all(|o| o.pass),
            outcomes,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports contain only strings and booleans")
    }

    pub fn failures(&self) -> impl Iterator<Item = &Outcome> {
        self.outcomes.iter().filter(|o| !o.pass)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Suite {
    Presentation,
    Pbw,
    WeylCharacter,
    RMatrix,
    Braid,
    Coord,
    Ore,
    Localization,
    Relations,
    LemmaRl,
    Zw,
    Theta,
    Center,
    Annihilator,
    Bimodule,
    KeyLemma,
}

impl Suite {
    pub const ALL: [Suite; 16] = [
        Suite::Presentation,
        Suite::Pbw,
        Suite::WeylCharacter,
        Suite::RMatrix,
        Suite::Braid,
        Suite::Coord,
        Suite::Ore,
        Suite::Localization,
        Suite::Relations,
        Suite::LemmaRl,
        Suite::Zw,
        Suite::Theta,
        Suite::Center,
        Suite::Annihilator,
        Suite::Bimodule,
        Suite::KeyLemma,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Presentation => "presentation",
            Suite::Pbw => "pbw",
            Suite::WeylCharacter => "weyl-character",
            Suite::RMatrix => "r-matrix",
            Suite::Braid => "braid",
            Suite::Coord => "coord",
            Suite::Ore => "ore",
            Suite::Localization => "localization",
            Suite::Relations => "relations",
            Suite::LemmaRl => "lemma-rl",
            Suite::Zw => "zw",
            Suite::Theta => "theta",
            Suite::Center => "center",
            Suite::Annihilator => "annihilator",
            Suite::Bimodule => "bimodule",
            Suite::KeyLemma => "key-lemma",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = VerifyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| VerifyError::UnknownSuite(s.to_string()))
    }
}

/// What a suite runs on. Unset fields fall back to the per-type defaults
/// documented on each suite.
#[derive(Debug, Clone)]
pub struct SuiteConfig {
    pub datum: CartanDatum,
    pub cutoff: Option<Weight>,
    pub depth: Option<RootSum>,
    /// Height or size bound, meaning depends on the suite.
    pub max: Option<usize>,
    pub seed: u64,
    /// Deliberately break the operator realisation (negative control).
    pub fault: bool,
}

impl SuiteConfig {
    pub fn new(datum: CartanDatum) -> Self {
        SuiteConfig {
            datum,
            cutoff: None,
            depth: None,
            max: None,
            seed: 0,
            fault: false,
        }
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }

    fn rank(&self) -> usize {
        self.datum.rank()
    }

    fn label(&self) -> &str {
        self.datum.name()
    }

    /// Sum of the fundamental weights with the given multiplicity on each.
    fn uniform(&self, c: i32) -> Weight {
        Weight::new(&vec![c; self.rank()])
    }
}

pub fn run_suite(suite: Suite, cfg: &SuiteConfig) -> Result<Vec<Outcome>, VerifyError> {
    let mut out = match suite {
        Suite::Presentation => algebra::presentation(cfg)?,
        Suite::Pbw => algebra::pbw(cfg)?,
        Suite::WeylCharacter => algebra::weyl_character(cfg)?,
        Suite::RMatrix => algebra::r_matrix(cfg)?,
        Suite::Braid => algebra::braid(cfg)?,
        Suite::Coord => flag::coord(cfg)?,
        Suite::Ore => flag::ore(cfg)?,
        Suite::Localization => flag::localization(cfg)?,
        Suite::Relations => operators::relations(cfg)?,
        Suite::LemmaRl => operators::lemma_rl(cfg)?,
        Suite::Zw => operators::zw(cfg)?,
        Suite::Theta => operators::theta(cfg)?,
        Suite::Center => operators::center(cfg)?,
        Suite::Annihilator => operators::annihilator(cfg)?,
        Suite::Bimodule => flag::bimodule(cfg)?,
        Suite::KeyLemma => flag::key_lemma(cfg)?,
    };
    for o in &mut out {
        o.instance = format!("{} {}", cfg.label(), o.instance);
    }
    Ok(out)
}

/// Suites that the full run exercises on each type.
fn full_run_plan() -> Vec<(&'static str, Vec<Suite>)> {
    let mut a2: Vec<Suite> = Suite::ALL.to_vec();
    a2.retain(|s| !matches!(s, Suite::Center | Suite::Annihilator));
    vec![
        ("A1", Suite::ALL.to_vec()),
        ("A2", a2),
        ("B2", vec![Suite::Pbw, Suite::WeylCharacter]),
        ("G2", vec![Suite::Pbw]),
    ]
}

/// Every suite on its documented instances.
pub fn full_run(seed: u64) -> Result<Report, VerifyError> {
    let mut outcomes = Vec::new();
    for (name, suites) in full_run_plan() {
        let cfg = SuiteConfig::new(CartanDatum::preset(name)?).with_seed(seed);
        for s in suites {
            outcomes.extend(run_suite(s, &cfg)?);
        }
    }
    Ok(Report::new(seed, outcomes))
}

#[cfg(test)]
mod tests;
