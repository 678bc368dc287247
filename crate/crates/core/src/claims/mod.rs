//! Machine-checkable claims about weakly and almost prime ideals, swept over a
//! finite corpus.
//!
//! Each claim has a quantifier shape that generates [`Instance`]s from a
//! [`Workbench`], and an evaluator returning whether the hypothesis and the
//! conclusion hold. A claim is falsified as soon as one instance satisfies
//! the hypothesis but not the conclusion; otherwise it is verified on the
//! corpus, which is evidence and not proof.

pub mod conditions;
pub mod factor;
pub mod golden;
pub mod registry;
pub mod workbench;

use std::cmp::Ordering;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::classify::{ClassifyConfig, ClassifyError};
use crate::io::corpus::CorpusEntry;
use crate::io::format::StructureFile;
use crate::subset::SubSet;

pub use factor::{factor_into, FactorError, FactorKind};
pub use registry::{registry, ClaimSpec};
pub use workbench::{Analyzed, Workbench};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ClaimError {
    #[error("unknown claim {0}")]
    UnknownClaim(String),
    #[error(transparent)]
    Classify(#[from] ClassifyError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ReplayError {
    #[error("unknown claim {0}")]
    UnknownClaim(String),
    #[error("embedded structure {index} is invalid: {message}")]
    Structure { index: usize, message: String },
    #[error("malformed instance: {0}")]
    Instance(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepConfig {
    pub classify: ClassifyConfig,
    /// Form direct products of corpus pairs for the product claims.
    pub product_pairs: bool,
    /// Largest source order for homomorphism enumeration.
    pub hom_source_cap: usize,
    /// Counterexamples kept per claim; `None` keeps all.
    pub counterexample_cap: Option<usize>,
    /// Factor length bound on each factor of a product (the product itself is
    /// searched up to twice this).
    pub factor_max_len: usize,
    /// Chains enumerated per structure.
    pub chain_cap: usize,
    /// Look for the unique maximal ideal among domain ideals only.
    pub maximal_in_domain: bool,
}

impl Default for SweepConfig {
    fn default() -> Self {
        SweepConfig {
            classify: ClassifyConfig::default(),
            product_pairs: false,
            hom_source_cap: crate::construct::DEFAULT_HOM_SOURCE_CAP,
            counterexample_cap: Some(5),
            factor_max_len: 3,
            chain_cap: 256,
            maximal_in_domain: false,
        }
    }
}

/// One point of a claim's quantifier domain. Indices refer to the
/// workbench's structures and homomorphisms; the meaning of `ideals` is
/// fixed per claim (see [`ClaimSpec::roles`]).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Instance {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub structure: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub pair: Option<(usize, usize)>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub hom: Option<usize>,
    #[serde(default)]
    pub ideals: Vec<SubSet>,
}

impl Instance {
    pub fn on(structure: usize, ideals: Vec<SubSet>) -> Self {
        Instance {
            structure: Some(structure),
            pair: None,
            hom: None,
            ideals,
        }
    }

    pub fn on_pair(a: usize, b: usize, ideals: Vec<SubSet>) -> Self {
        Instance {
            structure: None,
            pair: Some((a, b)),
            hom: None,
            ideals,
        }
    }

    pub fn on_hom(hom: usize, ideals: Vec<SubSet>) -> Self {
        Instance {
            structure: None,
            pair: None,
            hom: Some(hom),
            ideals,
        }
    }

    pub fn ideal(&self, k: usize) -> Result<SubSet, String> {
        self.ideals
            .get(k)
            .copied()
            .ok_or_else(|| format!("instance has no ideal at position {k}"))
    }

    pub fn structure(&self) -> Result<usize, String> {
        self.structure.ok_or_else(|| "instance names no structure".to_string())
    }

    pub fn pair(&self) -> Result<(usize, usize), String> {
        self.pair.ok_or_else(|| "instance names no product pair".to_string())
    }

    pub fn hom(&self) -> Result<usize, String> {
        self.hom.ok_or_else(|| "instance names no homomorphism".to_string())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub hypothesis: bool,
    pub conclusion: bool,
    /// Why the conclusion failed, when it did under the hypothesis.
    pub detail: Option<String>,
}

impl Outcome {
    pub fn vacuous() -> Self {
        Outcome {
            hypothesis: false,
            conclusion: true,
            detail: None,
        }
    }

    pub fn implies(hypothesis: bool, conclusion: bool, detail: impl FnOnce() -> String) -> Self {
        Outcome {
            hypothesis,
            conclusion,
            detail: (hypothesis && !conclusion).then(detail),
        }
    }

    pub fn is_counterexample(&self) -> bool {
        self.hypothesis && !self.conclusion
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    VerifiedOnCorpus,
    Falsified,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HomRecord {
    pub source: usize,
    pub target: usize,
    pub map: Vec<usize>,
}

/// A self-contained refutation: replaying it needs nothing else.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counterexample {
    pub claim: String,
    pub config: SweepConfig,
    pub structures: Vec<StructureFile>,
    #[serde(default)]
    pub homs: Vec<HomRecord>,
    pub instance: Instance,
    /// The instance's ideals with their roles, for reading only.
    #[serde(default)]
    pub labelled: Vec<(String, Vec<usize>)>,
    #[serde(default)]
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClaimResult {
    pub claim_id: String,
    pub anchor: String,
    pub statement: String,
    pub instances_checked: usize,
    /// Instances whose hypothesis held.
    pub nonvacuous: usize,
    pub status: Status,
    pub counterexamples_found: usize,
    pub counterexamples: Vec<Counterexample>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

/// Orders ids like `C-2.T2` before `C-2.T10` by comparing digit runs
/// numerically.
pub fn compare_ids(a: &str, b: &str) -> Ordering {
    fn chunks(s: &str) -> Vec<(bool, String)> {
        let mut out: Vec<(bool, String)> = Vec::new();
        for c in s.chars() {
            let d = c.is_ascii_digit();
            match out.last_mut() {
                Some((kind, buf)) if *kind == d => buf.push(c),
                _ => out.push((d, c.to_string())),
            }
        }
        out
    }
    let (ca, cb) = (chunks(a), chunks(b));
    for (x, y) in ca.iter().zip(&cb) {
        let ord = match (x, y) {
            ((true, p), (true, q)) => p.parse::<u64>().unwrap_or(0).cmp(&q.parse::<u64>().unwrap_or(0)),
            ((_, p), (_, q)) => p.cmp(q),
        };
        if ord != Ordering::Equal {
            return ord;
        }
    }
    ca.len().cmp(&cb.len())
}

fn serialize_counterexample(wb: &Workbench, spec: &ClaimSpec, inst: &Instance, detail: String) -> Counterexample {
    let mut used: Vec<usize> = Vec::new();
    let mut local = |k: usize| -> usize {
        match used.iter().position(|&u| u == k) {
            Some(p) => p,
            None => {
                used.push(k);
                used.len() - 1
            }
        }
    };
    let mut out = inst.clone();
    let mut homs = Vec::new();
    if let Some(s) = inst.structure {
        out.structure = Some(local(s));
    }
    if let Some((a, b)) = inst.pair {
        out.pair = Some((local(a), local(b)));
    }
    if let Some(h) = inst.hom {
        let e = &wb.homs()[h];
        homs.push(HomRecord {
            source: local(e.source),
            target: local(e.target),
            map: e.hom.map().to_vec(),
        });
        out.hom = Some(0);
    }
    let structures = used
        .iter()
        .map(|&k| {
            let a = &wb.structures()[k];
            StructureFile::from_graded(&a.name, a.gnr())
        })
        .collect();
    Counterexample {
        claim: spec.id.to_string(),
        config: wb.config,
        structures,
        homs,
        labelled: spec.label(&inst.ideals),
        instance: out,
        detail,
    }
}

/// Sweeps one claim over a prepared workbench.
pub fn run_claim(spec: &ClaimSpec, wb: &Workbench) -> ClaimResult {
    let instances = (spec.instances)(wb);
    let mut nonvacuous = 0;
    let mut found = 0;
    let mut counterexamples = Vec::new();
    let mut variant_checked = 0;
    let mut variant_failed: Option<(usize, String)> = None;
    let mut variant_failures = 0;
    for inst in &instances {
        let outcome = match (spec.evaluate)(wb, inst) {
            Ok(o) => o,
            Err(e) => {
                log::error!("{}: generated instance rejected: {e}", spec.id);
                continue;
            }
        };
        if outcome.hypothesis {
            nonvacuous += 1;
            if let Some((_, variant)) = &spec.variant {
                variant_checked += 1;
                if let Ok(Err(why)) = variant(wb, inst) {
                    variant_failures += 1;
                    if variant_failed.is_none() {
                        variant_failed = Some((variant_checked, why));
                    }
                }
            }
        }
        if outcome.is_counterexample() {
            found += 1;
            if wb.config.counterexample_cap.is_none_or(|cap| counterexamples.len() < cap) {
                let detail = outcome.detail.unwrap_or_default();
                counterexamples.push(serialize_counterexample(wb, spec, inst, detail));
            }
        }
    }
    let mut notes = Vec::new();
    if let Some((what, _)) = &spec.variant {
        let mut note = format!("{what}: failed on {variant_failures} of {variant_checked} hypothesis instances");
        if let Some((_, why)) = variant_failed {
            note.push_str(&format!(" (first: {why})"));
        }
        notes.push(note);
    }
    ClaimResult {
        claim_id: spec.id.to_string(),
        anchor: spec.anchor.to_string(),
        statement: spec.statement.to_string(),
        instances_checked: instances.len(),
        nonvacuous,
        status: if found > 0 { Status::Falsified } else { Status::VerifiedOnCorpus },
        counterexamples_found: found,
        counterexamples,
        notes,
    }
}

pub fn find_claim(id: &str) -> Option<&'static ClaimSpec> {
    registry().iter().find(|c| c.id == id)
}

/// Sweeps the selected claims (all when `ids` is `None`), ordered by id.
pub fn check_claims(ids: Option<&[String]>, corpus: &[CorpusEntry], config: SweepConfig) -> Result<Vec<ClaimResult>, ClaimError> {
    let mut specs: Vec<&ClaimSpec> = match ids {
        None => registry().iter().collect(),
        Some(ids) => ids
            .iter()
            .map(|id| find_claim(id).ok_or_else(|| ClaimError::UnknownClaim(id.clone())))
            .collect::<Result<_, _>>()?,
    };
    specs.sort_by(|a, b| compare_ids(a.id, b.id));
    specs.dedup_by(|a, b| a.id == b.id);
    let wb = Workbench::new(corpus, config)?;
    Ok(run_specs(&specs, &wb))
}

pub fn run_specs(specs: &[&ClaimSpec], wb: &Workbench) -> Vec<ClaimResult> {
    specs.par_iter().map(|spec| run_claim(spec, wb)).collect()
}

pub fn check_claim(id: &str, corpus: &[CorpusEntry], config: SweepConfig) -> Result<ClaimResult, ClaimError> {
    let mut v = check_claims(Some(&[id.to_string()]), corpus, config)?;
    Ok(v.remove(0))
}

pub fn check_all(corpus: &[CorpusEntry], config: SweepConfig) -> Result<Vec<ClaimResult>, ClaimError> {
    check_claims(None, corpus, config)
}

/// Re-evaluates a counterexample from its serialized form. `Ok(true)` means
/// the hypothesis still holds and the conclusion still fails.
pub fn replay(cx: &Counterexample) -> Result<bool, ReplayError> {
    let spec = find_claim(&cx.claim).ok_or_else(|| ReplayError::UnknownClaim(cx.claim.clone()))?;
    if cx.config.classify.max_order > crate::subset::MAX_ORDER || cx.config.factor_max_len > factor::MAX_FACTOR_LEN {
        return Err(ReplayError::Instance("configuration out of bounds".into()));
    }
    let mut corpus = Vec::with_capacity(cx.structures.len());
    for (index, file) in cx.structures.iter().enumerate() {
        let loaded = file.to_graded().map_err(|e| ReplayError::Structure {
            index,
            message: e.to_string(),
        })?;
        if loaded.renumbered {
            return Err(ReplayError::Structure {
                index,
                message: "additive zero is not element 0".into(),
            });
        }
        corpus.push(CorpusEntry::new(loaded.name, loaded.gnr));
    }
    let homs = cx.homs.iter().map(|h| (h.source, h.target, h.map.clone())).collect();
    let wb = Workbench::with_homs(&corpus, cx.config, homs).map_err(|e| ReplayError::Instance(e.to_string()))?;
    if let Some(h) = cx.instance.hom {
        if h >= wb.homs().len() {
            return Err(ReplayError::Instance(format!("homomorphism {h} is missing or invalid")));
        }
    }
    let outcome = (spec.evaluate)(&wb, &cx.instance).map_err(ReplayError::Instance)?;
    Ok(outcome.is_counterexample())
}
