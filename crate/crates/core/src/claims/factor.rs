//! Bounded search for factorizations into weakly or almost prime ideals.
//!
//! Products are folded from the left: `P1 P2 P3 = (P1 P2) P3`. The search is
//! breadth-first over sequences of domain ideals satisfying the predicate
//! (including `N` itself, which qualifies vacuously), extended in ascending
//! bitmask order, so the factorization returned for an ideal is a shortest
//! one and lexicographically first among those.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::classify::{Lattice, Predicate};
use crate::subset::SubSet;

pub const MAX_FACTOR_LEN: usize = 8;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum FactorKind {
    Weakly,
    Almost,
}

impl FactorKind {
    pub fn predicate(self) -> Predicate {
        match self {
            FactorKind::Weakly => Predicate::WeaklyPrime,
            FactorKind::Almost => Predicate::AlmostPrime,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FactorError {
    #[error("{0} is not in the ideal domain")]
    NotGradedIdeal(SubSet),
    #[error("factor length {len} exceeds the bound {bound}")]
    BoundExceeded { len: usize, bound: usize },
}

/// Every ideal reachable as a product of at most `max_len` factors, mapped to
/// its first factorization.
pub fn factorizations(
    lattice: &Lattice,
    kind: FactorKind,
    max_len: usize,
) -> Result<HashMap<SubSet, Vec<SubSet>>, FactorError> {
    if max_len > MAX_FACTOR_LEN {
        return Err(FactorError::BoundExceeded {
            len: max_len,
            bound: MAX_FACTOR_LEN,
        });
    }
    let primes: Vec<SubSet> = lattice
        .ideals()
        .iter()
        .copied()
        .filter(|&p| lattice.holds(kind.predicate(), p))
        .collect();
    let mut reach: HashMap<SubSet, Vec<SubSet>> = HashMap::new();
    let mut level: Vec<(SubSet, Vec<SubSet>)> = Vec::new();
    if max_len == 0 {
        return Ok(reach);
    }
    for &p in &primes {
        if let std::collections::hash_map::Entry::Vacant(e) = reach.entry(p) {
            e.insert(vec![p]);
            level.push((p, vec![p]));
        }
    }
    for _ in 1..max_len {
        let mut next = Vec::new();
        for (value, seq) in &level {
            for &p in &primes {
                let y = lattice.product(*value, p);
                if reach.contains_key(&y) {
                    continue;
                }
                let mut s = seq.clone();
                s.push(p);
                reach.insert(y, s.clone());
                next.push((y, s));
            }
        }
        if next.is_empty() {
            break;
        }
        level = next;
    }
    Ok(reach)
}

/// A first factorization of `target` of length at most `max_len`, if any.
pub fn factor_into(
    lattice: &Lattice,
    target: SubSet,
    kind: FactorKind,
    max_len: usize,
) -> Result<Option<Vec<SubSet>>, FactorError> {
    if !lattice.contains_ideal(target) {
        return Err(FactorError::NotGradedIdeal(target));
    }
    Ok(factorizations(lattice, kind, max_len)?.remove(&target))
}
