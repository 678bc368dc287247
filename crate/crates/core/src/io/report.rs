//! JSON-lines report records. Every record is a single line; the order is
//! header, structures by name, golden facts, claims by id.

use std::io::{self, Write};

use serde::Serialize;

use crate::claims::golden::GoldenFact;
use crate::claims::{ClaimResult, SweepConfig};
use crate::classify::{ClassifyError, Lattice};
use crate::io::corpus::CorpusEntry;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassificationRow {
    pub ideal: Vec<usize>,
    pub bits: u64,
    pub proper: bool,
    pub prime: bool,
    pub weakly_prime: bool,
    pub almost_prime: bool,
    pub square_cap: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "record", rename_all = "kebab-case")]
pub enum Record {
    Header {
        tool: String,
        version: String,
        config: SweepConfig,
    },
    Structure {
        name: String,
        aliases: Vec<String>,
        order: usize,
        monoid_order: usize,
        hash: String,
        ideal_count: usize,
        domain_count: usize,
        rows: Vec<ClassificationRow>,
    },
    Golden(GoldenFact),
    Claim(ClaimResult),
}

pub fn header(config: SweepConfig) -> Record {
    Record::Header {
        tool: "nrgrade".into(),
        version: env!("CARGO_PKG_VERSION").into(),
        config,
    }
}

pub fn classification_rows(lattice: &Lattice) -> Result<Vec<ClassificationRow>, ClassifyError> {
    lattice
        .classify_all()?
        .into_iter()
        .map(|c| {
            Ok(ClassificationRow {
                ideal: c.ideal.bits.to_vec(),
                bits: c.ideal.bits.bits(),
                proper: c.proper,
                prime: c.is_graded_prime,
                weakly_prime: c.is_graded_weakly_prime,
                almost_prime: c.is_graded_almost_prime,
                square_cap: lattice.square_cap(c.ideal.bits).to_vec(),
            })
        })
        .collect()
}

pub fn structure_record(entry: &CorpusEntry, lattice: &Lattice) -> Result<Record, ClassifyError> {
    Ok(Record::Structure {
        name: entry.name.clone(),
        aliases: entry.aliases.clone(),
        order: entry.gnr.order(),
        monoid_order: entry.gnr.monoid().order(),
        hash: entry.hash(),
        ideal_count: lattice.all_ideals().len(),
        domain_count: lattice.ideals().len(),
        rows: classification_rows(lattice)?,
    })
}

pub fn write_records<W: Write>(out: &mut W, records: &[Record]) -> io::Result<()> {
    for r in records {
        serde_json::to_writer(&mut *out, r)?;
        out.write_all(b"\n")?;
    }
    Ok(())
}

/// The full report for a sweep: one structure record per corpus entry, the
/// golden facts and the selected claims.
pub fn sweep_report(
    corpus: &[CorpusEntry],
    claim_ids: Option<&[String]>,
    config: SweepConfig,
) -> Result<Vec<Record>, crate::claims::ClaimError> {
    use rayon::prelude::*;
    let mut sorted: Vec<&CorpusEntry> = corpus.iter().collect();
    sorted.sort_by(|a, b| a.name.cmp(&b.name));
    let structures = sorted
        .par_iter()
        .map(|e| {
            let lattice = Lattice::new(e.gnr.clone(), config.classify)?;
            structure_record(e, &lattice)
        })
        .collect::<Result<Vec<_>, ClassifyError>>()?;
    let claims = crate::claims::check_claims(claim_ids, corpus, config)?;
    let mut records = vec![header(config)];
    records.extend(structures);
    records.extend(crate::claims::golden::golden_facts(config.classify).into_iter().map(Record::Golden));
    records.extend(claims.into_iter().map(Record::Claim));
    Ok(records)
}
