//! The bundled default corpus.

use std::collections::HashMap;
use std::sync::Arc;

use serde::Serialize;

use super::builders::{self, BuildError, GradingMode};
use super::format::StructureFile;
use crate::construct::{direct_product, quotient};
use crate::grading::GradedNearRing;
use crate::ideal::enumerate_ideals;
use crate::subset::MAX_ORDER;

#[derive(Debug, Clone)]
pub struct CorpusEntry {
    pub name: String,
    /// Names of later constructions that produced identical tables.
    pub aliases: Vec<String>,
    pub gnr: Arc<GradedNearRing>,
}

impl CorpusEntry {
    pub fn new(name: impl Into<String>, gnr: GradedNearRing) -> Self {
        CorpusEntry {
            name: name.into(),
            aliases: Vec::new(),
            gnr: Arc::new(gnr),
        }
    }

    pub fn file(&self) -> StructureFile {
        StructureFile::from_graded(&self.name, &self.gnr)
    }

    pub fn hash(&self) -> String {
        self.file().content_hash()
    }
}

/// One manifest line per corpus entry.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ManifestEntry {
    pub name: String,
    pub order: usize,
    pub hash: String,
    pub aliases: Vec<String>,
}

/// Accumulates entries, dropping ones whose tables and grading repeat an
/// earlier entry (the later name becomes an alias).
#[derive(Debug, Default)]
pub struct CorpusBuilder {
    entries: Vec<CorpusEntry>,
    by_hash: HashMap<String, usize>,
}

impl CorpusBuilder {
    pub fn push(&mut self, name: impl Into<String>, gnr: GradedNearRing) {
        let entry = CorpusEntry::new(name, gnr);
        let hash = entry.hash();
        match self.by_hash.get(&hash) {
            Some(&k) => self.entries[k].aliases.push(entry.name),
            None => {
                self.by_hash.insert(hash, self.entries.len());
                self.entries.push(entry);
            }
        }
    }

    /// Entries sorted by name.
    pub fn finish(mut self) -> Vec<CorpusEntry> {
        self.entries.sort_by(|a, b| a.name.cmp(&b.name));
        self.entries
    }
}

fn cyclic_trivial(n: usize) -> Result<GradedNearRing, BuildError> {
    Ok(builders::cyclic(n, GradingMode::Trivial)?.remove(0))
}

/// Quotient names use the smallest nonzero element of the ideal, so
/// `z12_mod_4` is `Z_12 / {0,4,8}` and `z12_mod_12` is `Z_12 / {0}`.
fn push_quotients(b: &mut CorpusBuilder, n: usize) -> Result<(), BuildError> {
    let base = Arc::new(cyclic_trivial(n)?);
    let ideals = enumerate_ideals(&base, true, MAX_ORDER).expect("within bounds");
    for i in ideals {
        let d = i.bits.iter().find(|&x| x != 0).unwrap_or(n);
        let q = quotient(&base, i.bits).expect("graded ideal of a commutative ring");
        b.push(format!("z{n}_mod_{d}"), (*q.ring).clone());
    }
    Ok(())
}

pub fn default_corpus() -> Result<Vec<CorpusEntry>, BuildError> {
    let mut b = CorpusBuilder::default();
    for n in [1, 2, 4, 6, 8, 12, 16, 18] {
        b.push(format!("z{n}_trivial"), cyclic_trivial(n)?);
    }
    for n in [6, 12] {
        let graded = builders::cyclic(n, GradingMode::Enumerate)?;
        for (k, g) in graded.into_iter().filter(|g| !g.is_trivially_graded()).enumerate() {
            b.push(format!("z{n}_graded_{k}"), g);
        }
    }
    b.push("m_z2", builders::mapping_nearring(2)?);
    b.push("m_z3", builders::mapping_nearring(3)?);
    b.push("s3_const", builders::constant_symmetric()?);
    let product = |x: usize, y: usize| -> Result<GradedNearRing, BuildError> {
        Ok(direct_product(&cyclic_trivial(x)?, &cyclic_trivial(y)?, MAX_ORDER)?)
    };
    b.push("z4xz4", product(4, 4)?);
    b.push("z12xz2", product(12, 2)?);
    push_quotients(&mut b, 12)?;
    push_quotients(&mut b, 18)?;
    Ok(b.finish())
}

pub fn manifest(corpus: &[CorpusEntry]) -> Vec<ManifestEntry> {
    corpus
        .iter()
        .map(|e| ManifestEntry {
            name: e.name.clone(),
            order: e.gnr.order(),
            hash: e.hash(),
            aliases: e.aliases.clone(),
        })
        .collect()
}
