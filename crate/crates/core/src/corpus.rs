//! Checked-in regression corpus: ring files plus a TOML manifest of expected
//! results.

use std::fs;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::algebra::{Algebra, BuildOptions, RingPresentation};
use crate::error::{Error, Result};
use crate::oracle::Oracle;
use crate::structure::{classify_dsc, spec_classify, Answer, SearchBounds};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CorpusEntry {
    pub key: String,
    pub group: String,
    pub file: String,
    pub dim: usize,
    pub dsc: Answer,
    pub spec_case: Option<String>,
    pub primes: Option<Vec<String>>,
    pub witness_summands: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Manifest {
    #[serde(rename = "entry")]
    pub entries: Vec<CorpusEntry>,
}

impl Manifest {
    pub fn load(dir: &Path) -> Result<Self> {
        let path = dir.join("manifest.toml");
        let text = fs::read_to_string(&path)
            .map_err(|e| Error::Corpus(format!("{}: {e}", path.display())))?;
        toml::from_str(&text).map_err(|e| Error::Corpus(format!("{}: {e}", path.display())))
    }

    /// Entries whose key or group equals `selector` (all when `None`),
    /// sorted by key.
    pub fn select(&self, selector: Option<&str>) -> Vec<&CorpusEntry> {
        let mut out: Vec<&CorpusEntry> = self
            .entries
            .iter()
            .filter(|e| selector.is_none_or(|s| s == "all" || e.key == s || e.group == s))
            .collect();
        out.sort_by(|a, b| a.key.cmp(&b.key));
        out
    }
}

/// The corpus shipped at the workspace root.
pub fn default_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../corpus")
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EntryOutcome {
    pub key: String,
    pub pass: bool,
    /// `expected ..., got ...` lines for every mismatch.
    pub diffs: Vec<String>,
    /// `Some(true)` when the oracle agreed, `None` when it was not run.
    pub oracle_agrees: Option<bool>,
    pub notes: Vec<String>,
}

pub fn load_algebra(dir: &Path, entry: &CorpusEntry) -> Result<Algebra> {
    let path = dir.join(&entry.file);
    let text = fs::read_to_string(&path)
        .map_err(|e| Error::Corpus(format!("{}: {e}", path.display())))?;
    Algebra::build_with(&RingPresentation::parse(&text)?, BuildOptions::default())
}

pub fn run_entry(dir: &Path, entry: &CorpusEntry, bounds: &SearchBounds, use_oracle: bool) -> EntryOutcome {
    let mut diffs = Vec::new();
    let mut notes = Vec::new();
    let mut oracle_agrees = None;
    let mut diff = |what: &str, expected: String, got: String| {
        if expected != got {
            diffs.push(format!("{what}: expected {expected}, got {got}"));
        }
    };

    match load_algebra(dir, entry) {
        Err(e) => diff("load", "a valid ring file".into(), e.to_string()),
        Ok(alg) => {
            diff("dim", entry.dim.to_string(), alg.dim().to_string());
            let verdict = classify_dsc(&alg, bounds);
            diff("dsc", entry.dsc.to_string(), verdict.answer.to_string());

            if let Some(dec) = verdict.local_witness() {
                if let Some(n) = entry.witness_summands {
                    diff("witness summands", n.to_string(), dec.summand_count().to_string());
                }
                if entry.spec_case.is_some() || entry.primes.is_some() {
                    match spec_classify(&alg, dec) {
                        Ok(r) => {
                            if let Some(c) = &entry.spec_case {
                                diff("spec case", c.clone(), r.case.to_string());
                            }
                            if let Some(p) = &entry.primes {
                                diff("primes", format!("{p:?}"), format!("{:?}", r.prime_strings()));
                            }
                        }
                        Err(e) => diff("spec", "a report".into(), e.to_string()),
                    }
                }
            }

            match use_oracle.then(|| Oracle::new(&alg, bounds.max_oracle_dim)) {
                Some(Ok(mut o)) => {
                    let ov = o.oracle_dsc();
                    oracle_agrees = Some(ov.answer == verdict.answer);
                    diff("oracle", verdict.answer.to_string(), ov.answer.to_string());
                }
                _ => notes.push("unverified by oracle".to_string()),
            }
        }
    }
    EntryOutcome { key: entry.key.clone(), pass: diffs.is_empty(), diffs, oracle_agrees, notes }
}

pub fn run(dir: &Path, selector: Option<&str>, bounds: &SearchBounds, use_oracle: bool) -> Result<Vec<EntryOutcome>> {
    let manifest = Manifest::load(dir)?;
    let selected = manifest.select(selector);
    if selected.is_empty() {
        return Err(Error::Corpus(format!("no corpus entry matches `{}`", selector.unwrap_or(""))));
    }
    Ok(selected.into_iter().map(|e| run_entry(dir, e, bounds, use_oracle)).collect())
}
