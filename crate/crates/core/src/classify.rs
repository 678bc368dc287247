//! Graded prime, graded weakly prime and graded almost prime ideals.
//!
//! For a graded ideal `P` and ideals `I, J` drawn from the quantifier domain
//! (graded ideals by default):
//!
//! * prime: `IJ ⊆ P` forces `I ⊆ P` or `J ⊆ P`;
//! * weakly prime: `{0} ≠ IJ ⊆ P` forces the same;
//! * almost prime: `IJ ⊆ P` and `IJ ⊄ P² ∩ N` force the same.
//!
//! `P = N` is accepted and is vacuously all three. A failed predicate carries
//! the lexicographically smallest refuting pair `(I, J)` by bitmask.

use std::collections::HashMap;
use std::sync::Arc;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::grading::GradedNearRing;
use crate::ideal::{self, enumerate_ideal_bits, IdealError, IdealSet, ProductMode};
use crate::subset::{SubSet, MAX_ORDER};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ClassifyError {
    #[error("{0} is not a graded ideal")]
    NotGradedIdeal(SubSet),
    #[error("{0} is not an ideal")]
    NotAnIdeal(SubSet),
    #[error("implication chain prime => weakly => almost broken at {0}")]
    ChainViolated(SubSet),
    #[error(transparent)]
    Ideal(#[from] IdealError),
}

/// Which ideals the primality quantifiers range over.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Domain {
    #[default]
    Graded,
    All,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ClassifyConfig {
    pub domain: Domain,
    pub product: ProductMode,
    pub max_order: usize,
}

impl Default for ClassifyConfig {
    fn default() -> Self {
        ClassifyConfig {
            domain: Domain::Graded,
            product: ProductMode::Subgroup,
            max_order: MAX_ORDER,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Predicate {
    Prime,
    WeaklyPrime,
    AlmostPrime,
}

/// Outcome of one predicate, with the refuting pair when it fails.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdict {
    pub holds: bool,
    pub witness: Option<(SubSet, SubSet)>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct Witnesses {
    pub prime: Option<(SubSet, SubSet)>,
    pub weakly_prime: Option<(SubSet, SubSet)>,
    pub almost_prime: Option<(SubSet, SubSet)>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Classification {
    pub ideal: IdealSet,
    pub proper: bool,
    pub is_graded_prime: bool,
    pub is_graded_weakly_prime: bool,
    pub is_graded_almost_prime: bool,
    pub witnesses: Witnesses,
}

/// The ideal lattice of one structure with every domain product precomputed.
#[derive(Debug)]
pub struct Lattice {
    gnr: Arc<GradedNearRing>,
    config: ClassifyConfig,
    all_ideals: Vec<SubSet>,
    domain: Vec<SubSet>,
    index: HashMap<SubSet, usize>,
    products: Vec<SubSet>,
}

impl Lattice {
    pub fn new(gnr: Arc<GradedNearRing>, config: ClassifyConfig) -> Result<Self, ClassifyError> {
        let all_ideals = enumerate_ideal_bits(gnr.ring(), config.max_order)?;
        let domain: Vec<SubSet> = match config.domain {
            Domain::All => all_ideals.clone(),
            Domain::Graded => all_ideals.iter().copied().filter(|&s| gnr.is_graded_subset(s)).collect(),
        };
        let index = domain.iter().enumerate().map(|(k, &s)| (s, k)).collect();
        let ring = gnr.ring();
        let mut products = Vec::with_capacity(domain.len() * domain.len());
        for &i in &domain {
            for &j in &domain {
                products.push(ideal::ideal_product(ring, i, j, config.product));
            }
        }
        Ok(Lattice {
            gnr,
            config,
            all_ideals,
            domain,
            index,
            products,
        })
    }

    pub fn with_defaults(gnr: Arc<GradedNearRing>) -> Result<Self, ClassifyError> {
        Lattice::new(gnr, ClassifyConfig::default())
    }

    pub fn gnr(&self) -> &GradedNearRing {
        &self.gnr
    }

    pub fn gnr_arc(&self) -> &Arc<GradedNearRing> {
        &self.gnr
    }

    pub fn config(&self) -> ClassifyConfig {
        self.config
    }

    /// Every ideal (graded or not), ascending.
    pub fn all_ideals(&self) -> &[SubSet] {
        &self.all_ideals
    }

    /// The quantifier domain, ascending.
    pub fn ideals(&self) -> &[SubSet] {
        &self.domain
    }

    pub fn contains_ideal(&self, s: SubSet) -> bool {
        self.index.contains_key(&s)
    }

    pub fn full(&self) -> SubSet {
        self.gnr.ring().elements()
    }

    pub fn zero(&self) -> SubSet {
        self.gnr.ring().zero_set()
    }

    /// `IJ`, from the table when both are in the domain.
    pub fn product(&self, i: SubSet, j: SubSet) -> SubSet {
        match (self.index.get(&i), self.index.get(&j)) {
            (Some(&a), Some(&b)) => self.products[a * self.domain.len() + b],
            _ => ideal::ideal_product(self.gnr.ring(), i, j, self.config.product),
        }
    }

    /// `P² ∩ N`.
    pub fn square_cap(&self, p: SubSet) -> SubSet {
        self.product(p, p).intersection(self.full())
    }

    fn require(&self, p: SubSet) -> Result<(), ClassifyError> {
        if self.contains_ideal(p) {
            return Ok(());
        }
        Err(match self.config.domain {
            Domain::Graded => ClassifyError::NotGradedIdeal(p),
            Domain::All => ClassifyError::NotAnIdeal(p),
        })
    }

    fn scan(&self, p: SubSet, premise: impl Fn(SubSet) -> bool) -> Verdict {
        let l = self.domain.len();
        for (a, &i) in self.domain.iter().enumerate() {
            if i.is_subset(p) {
                continue;
            }
            for (b, &j) in self.domain.iter().enumerate() {
                if j.is_subset(p) {
                    continue;
                }
                if premise(self.products[a * l + b]) {
                    return Verdict {
                        holds: false,
                        witness: Some((i, j)),
                    };
                }
            }
        }
        Verdict {
            holds: true,
            witness: None,
        }
    }

    pub fn is_graded_prime(&self, p: SubSet) -> Result<Verdict, ClassifyError> {
        self.require(p)?;
        Ok(self.scan(p, |ij| ij.is_subset(p)))
    }

    pub fn is_graded_weakly_prime(&self, p: SubSet) -> Result<Verdict, ClassifyError> {
        self.require(p)?;
        let zero = self.zero();
        Ok(self.scan(p, |ij| ij != zero && ij.is_subset(p)))
    }

    pub fn is_graded_almost_prime(&self, p: SubSet) -> Result<Verdict, ClassifyError> {
        self.require(p)?;
        let cap = self.square_cap(p);
        Ok(self.scan(p, |ij| ij.is_subset(p) && !ij.is_subset(cap)))
    }

    pub fn verdict(&self, predicate: Predicate, p: SubSet) -> Result<Verdict, ClassifyError> {
        match predicate {
            Predicate::Prime => self.is_graded_prime(p),
            Predicate::WeaklyPrime => self.is_graded_weakly_prime(p),
            Predicate::AlmostPrime => self.is_graded_almost_prime(p),
        }
    }

    /// Convenience for callers that already know `p` is in the domain.
    pub fn holds(&self, predicate: Predicate, p: SubSet) -> bool {
        self.verdict(predicate, p).map(|v| v.holds).unwrap_or(false)
    }

    /// Re-checks that `(i, j)` refutes `predicate` for `p`, from the raw
    /// products rather than the table.
    pub fn reverify_witness(&self, predicate: Predicate, p: SubSet, (i, j): (SubSet, SubSet)) -> bool {
        if !self.contains_ideal(i) || !self.contains_ideal(j) || i.is_subset(p) || j.is_subset(p) {
            return false;
        }
        let ij = ideal::ideal_product(self.gnr.ring(), i, j, self.config.product);
        match predicate {
            Predicate::Prime => ij.is_subset(p),
            Predicate::WeaklyPrime => ij != self.zero() && ij.is_subset(p),
            Predicate::AlmostPrime => {
                let cap = ideal::ideal_square_cap(self.gnr.ring(), p, self.config.product);
                ij.is_subset(p) && !ij.is_subset(cap)
            }
        }
    }

    pub fn classify(&self, p: SubSet) -> Result<Classification, ClassifyError> {
        let prime = self.is_graded_prime(p)?;
        let weakly = self.is_graded_weakly_prime(p)?;
        let almost = self.is_graded_almost_prime(p)?;
        if (prime.holds && !weakly.holds) || (weakly.holds && !almost.holds) {
            return Err(ClassifyError::ChainViolated(p));
        }
        Ok(Classification {
            ideal: IdealSet::analyze(&self.gnr, p),
            proper: p != self.full(),
            is_graded_prime: prime.holds,
            is_graded_weakly_prime: weakly.holds,
            is_graded_almost_prime: almost.holds,
            witnesses: Witnesses {
                prime: prime.witness,
                weakly_prime: weakly.witness,
                almost_prime: almost.witness,
            },
        })
    }

    /// One row per domain ideal, ascending; the row for `N` has `proper = false`.
    pub fn classify_all(&self) -> Result<Vec<Classification>, ClassifyError> {
        self.domain.iter().map(|&p| self.classify(p)).collect()
    }
}

pub fn is_graded_prime(gnr: &GradedNearRing, p: SubSet) -> Result<Verdict, ClassifyError> {
    Lattice::with_defaults(Arc::new(gnr.clone()))?.is_graded_prime(p)
}

pub fn is_graded_weakly_prime(gnr: &GradedNearRing, p: SubSet) -> Result<Verdict, ClassifyError> {
    Lattice::with_defaults(Arc::new(gnr.clone()))?.is_graded_weakly_prime(p)
}

pub fn is_graded_almost_prime(gnr: &GradedNearRing, p: SubSet) -> Result<Verdict, ClassifyError> {
    Lattice::with_defaults(Arc::new(gnr.clone()))?.is_graded_almost_prime(p)
}

pub fn classify_all(gnr: &GradedNearRing, config: ClassifyConfig) -> Result<Vec<Classification>, ClassifyError> {
    Lattice::new(Arc::new(gnr.clone()), config)?.classify_all()
}
