//! The JSON structure file.
//!
//! ```json
//! {
//!   "name": "z2_trivial",
//!   "order": 2,
//!   "add": [[0, 1], [1, 0]],
//!   "mul": [[0, 0], [0, 1]],
//!   "monoid": { "order": 2, "identity": 0, "table": [[0, 1], [1, 1]] },
//!   "grading": { "0": [0, 1], "1": [0] }
//! }
//! ```
//!
//! Grading keys are monoid element indices written as strings. Files written
//! here always have the additive zero at index 0; the loader renumbers files
//! that do not.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::Path;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};
use thiserror::Error;

use crate::algebra::{AlgebraError, FiniteMonoid, FiniteNearRing, GroupFailure};
use crate::grading::{GradedNearRing, GradingError};
use crate::subset::{SubSet, MAX_ORDER};

#[derive(Debug, Error)]
pub enum LoadError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse { line: usize, column: usize, message: String },
    #[error("schema error: {0}")]
    Schema(String),
    #[error("axiom error: {0}")]
    Algebra(#[from] AlgebraError),
    #[error("grading error: {0}")]
    Grading(#[from] GradingError),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MonoidFile {
    pub order: usize,
    pub identity: usize,
    pub table: Vec<Vec<usize>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct StructureFile {
    pub name: String,
    pub order: usize,
    pub add: Vec<Vec<usize>>,
    pub mul: Vec<Vec<usize>>,
    pub monoid: MonoidFile,
    pub grading: BTreeMap<String, Vec<usize>>,
}

/// A validated structure read from a file.
#[derive(Debug, Clone)]
pub struct Loaded {
    pub name: String,
    pub gnr: GradedNearRing,
    /// The file's zero was not element 0 and elements were swapped.
    pub renumbered: bool,
}

impl MonoidFile {
    pub fn from_monoid(m: &FiniteMonoid) -> Self {
        MonoidFile {
            order: m.order(),
            identity: m.identity(),
            table: m.table(),
        }
    }

    pub fn to_monoid(&self) -> Result<FiniteMonoid, LoadError> {
        if self.table.len() != self.order {
            return Err(LoadError::Schema(format!(
                "monoid order {} but table has {} rows",
                self.order,
                self.table.len()
            )));
        }
        Ok(FiniteMonoid::new(&self.table, self.identity)?)
    }
}

impl StructureFile {
    pub fn from_graded(name: &str, gnr: &GradedNearRing) -> Self {
        let grading = gnr
            .grading()
            .parts()
            .iter()
            .enumerate()
            .map(|(sigma, part)| (sigma.to_string(), part.to_vec()))
            .collect();
        StructureFile {
            name: name.to_string(),
            order: gnr.order(),
            add: gnr.ring().add_table(),
            mul: gnr.ring().mul_table(),
            monoid: MonoidFile::from_monoid(gnr.monoid()),
            grading,
        }
    }

    /// Validates the file contents, renumbering so the zero is element 0.
    pub fn to_graded(&self) -> Result<Loaded, LoadError> {
        let n = self.order;
        if n == 0 || n > MAX_ORDER {
            return Err(LoadError::Schema(format!("order {n} outside 1..={MAX_ORDER}")));
        }
        for (what, table) in [("add", &self.add), ("mul", &self.mul)] {
            if table.len() != n {
                return Err(LoadError::Schema(format!(
                    "{what} table has {} rows, order is {n}",
                    table.len()
                )));
            }
        }
        let monoid = self.monoid.to_monoid()?;
        let mut parts = vec![None; monoid.order()];
        for (key, elems) in &self.grading {
            let sigma: usize = key
                .parse()
                .map_err(|_| LoadError::Schema(format!("grading key {key:?} is not a monoid index")))?;
            if sigma >= monoid.order() {
                return Err(LoadError::Schema(format!("grading key {sigma} outside the monoid")));
            }
            if let Some(&x) = elems.iter().find(|&&x| x >= n) {
                return Err(LoadError::Schema(format!("grading part {sigma} lists element {x} >= order {n}")));
            }
            parts[sigma] = Some(elems.iter().copied().collect::<SubSet>());
        }
        let parts: Vec<SubSet> = parts
            .into_iter()
            .enumerate()
            .map(|(sigma, p)| p.ok_or_else(|| LoadError::Schema(format!("grading part {sigma} missing"))))
            .collect::<Result<_, _>>()?;

        // Shape and range errors take precedence; an identity failure at 0
        // only means the zero sits elsewhere.
        match FiniteNearRing::new(&self.add, &self.mul, 0) {
            Ok(_) | Err(AlgebraError::AddNotGroup(GroupFailure::Identity { .. })) => {}
            Err(e) => return Err(e.into()),
        }
        let zero = (0..n)
            .find(|&z| (0..n).all(|y| self.add[z][y] == y && self.add[y][z] == y))
            .ok_or(AlgebraError::AddNotGroup(GroupFailure::Identity { element: 0 }))?;
        let ring = FiniteNearRing::new(&self.add, &self.mul, zero)?;
        let gnr = GradedNearRing::new(ring, monoid, parts)?;
        if zero == 0 {
            return Ok(Loaded {
                name: self.name.clone(),
                gnr,
                renumbered: false,
            });
        }
        log::warn!("{}: additive zero is element {zero}; swapping it with 0", self.name);
        let mut perm: Vec<usize> = (0..n).collect();
        perm.swap(0, zero);
        Ok(Loaded {
            name: self.name.clone(),
            gnr: gnr.relabel(&perm),
            renumbered: true,
        })
    }

    /// Pretty JSON with one table row per line.
    pub fn to_json(&self) -> String {
        fn row(r: &[usize]) -> String {
            let items: Vec<String> = r.iter().map(|v| v.to_string()).collect();
            format!("[{}]", items.join(", "))
        }
        fn table(out: &mut String, indent: &str, t: &[Vec<usize>]) {
            out.push_str("[\n");
            for (k, r) in t.iter().enumerate() {
                let sep = if k + 1 < t.len() { "," } else { "" };
                let _ = writeln!(out, "{indent}  {}{sep}", row(r));
            }
            let _ = write!(out, "{indent}]");
        }
        let mut out = String::new();
        out.push_str("{\n");
        let _ = writeln!(out, "  \"name\": {},", serde_json::to_string(&self.name).expect("string"));
        let _ = writeln!(out, "  \"order\": {},", self.order);
        out.push_str("  \"add\": ");
        table(&mut out, "  ", &self.add);
        out.push_str(",\n  \"mul\": ");
        table(&mut out, "  ", &self.mul);
        out.push_str(",\n  \"monoid\": {\n");
        let _ = writeln!(out, "    \"order\": {},", self.monoid.order);
        let _ = writeln!(out, "    \"identity\": {},", self.monoid.identity);
        out.push_str("    \"table\": ");
        table(&mut out, "    ", &self.monoid.table);
        out.push_str("\n  },\n  \"grading\": {\n");
        let mut keys: Vec<(usize, &String)> = self
            .grading
            .keys()
            .map(|k| (k.parse().unwrap_or(usize::MAX), k))
            .collect();
        keys.sort();
        for (k, (_, key)) in keys.iter().enumerate() {
            let sep = if k + 1 < keys.len() { "," } else { "" };
            let _ = writeln!(out, "    {}: {}{sep}", serde_json::to_string(key).expect("string"), row(&self.grading[*key]));
        }
        out.push_str("  }\n}\n");
        out
    }

    /// Content hash (tables, monoid, grading; not the name), 16 hex digits.
    pub fn content_hash(&self) -> String {
        let canonical = serde_json::to_string(&(&self.order, &self.add, &self.mul, &self.monoid, &self.grading))
            .expect("serializable");
        let digest = Sha256::digest(canonical.as_bytes());
        digest.iter().take(8).map(|b| format!("{b:02x}")).collect()
    }
}

pub fn parse_structure(text: &str) -> Result<Loaded, LoadError> {
    let file: StructureFile = serde_json::from_str(text).map_err(|e| LoadError::Parse {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    file.to_graded()
}

pub fn load_structure(path: impl AsRef<Path>) -> Result<Loaded, LoadError> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path).map_err(|source| LoadError::Io {
        path: path.display().to_string(),
        source,
    })?;
    parse_structure(&text)
}

pub fn parse_monoid(text: &str) -> Result<FiniteMonoid, LoadError> {
    let file: MonoidFile = serde_json::from_str(text).map_err(|e| LoadError::Parse {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    file.to_monoid()
}

pub fn load_monoid(path: impl AsRef<Path>) -> Result<FiniteMonoid, LoadError> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path).map_err(|source| LoadError::Io {
        path: path.display().to_string(),
        source,
    })?;
    parse_monoid(&text)
}

pub fn save_structure(path: impl AsRef<Path>, name: &str, gnr: &GradedNearRing) -> std::io::Result<()> {
    std::fs::write(path, StructureFile::from_graded(name, gnr).to_json())
}
