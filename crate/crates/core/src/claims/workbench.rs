//! Cached analysis shared by every claim in a sweep.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use rayon::prelude::*;

use super::factor::{factorizations, FactorKind};
use super::SweepConfig;
use crate::classify::{ClassifyConfig, ClassifyError, Lattice, Predicate};
use crate::construct::{direct_product, enumerate_surjective_homs, quotient, GradedHom};
use crate::grading::GradedNearRing;
use crate::ideal::{left_multiple, residual};
use crate::io::corpus::CorpusEntry;
use crate::subset::SubSet;

/// One structure with its lattice and per-ideal verdicts.
#[derive(Debug)]
pub struct Analyzed {
    pub name: String,
    pub lattice: Lattice,
    /// `flags[k]` = (prime, weakly, almost) for the k-th domain ideal.
    flags: Vec<[bool; 3]>,
    index: HashMap<SubSet, usize>,
    principal: OnceLock<Vec<SubSet>>,
    sums: OnceLock<Vec<SubSet>>,
    distinct_sums: OnceLock<Vec<SubSet>>,
    maximal: OnceLock<[Vec<SubSet>; 2]>,
    quotients: Mutex<HashMap<SubSet, Arc<Result<QuotientEntry, String>>>>,
    factors: Mutex<HashMap<(FactorKind, usize), Arc<FactorTable>>>,
}

type FactorTable = HashMap<SubSet, Vec<SubSet>>;

#[derive(Debug)]
pub struct QuotientEntry {
    pub analyzed: Arc<Analyzed>,
    pub projection: GradedHom,
}

fn slot(p: Predicate) -> usize {
    match p {
        Predicate::Prime => 0,
        Predicate::WeaklyPrime => 1,
        Predicate::AlmostPrime => 2,
    }
}

impl Analyzed {
    pub fn new(name: impl Into<String>, gnr: Arc<GradedNearRing>, config: ClassifyConfig) -> Result<Self, ClassifyError> {
        let lattice = Lattice::new(gnr, config)?;
        let flags = lattice
            .ideals()
            .iter()
            .map(|&p| {
                [Predicate::Prime, Predicate::WeaklyPrime, Predicate::AlmostPrime].map(|q| lattice.holds(q, p))
            })
            .collect();
        let index = lattice.ideals().iter().enumerate().map(|(k, &s)| (s, k)).collect();
        Ok(Analyzed {
            name: name.into(),
            lattice,
            flags,
            index,
            principal: OnceLock::new(),
            sums: OnceLock::new(),
            distinct_sums: OnceLock::new(),
            maximal: OnceLock::new(),
            quotients: Mutex::new(HashMap::new()),
            factors: Mutex::new(HashMap::new()),
        })
    }

    pub fn gnr(&self) -> &Arc<GradedNearRing> {
        self.lattice.gnr_arc()
    }

    pub fn order(&self) -> usize {
        self.lattice.gnr().order()
    }

    /// Domain ideals, ascending by bitmask.
    pub fn ideals(&self) -> &[SubSet] {
        self.lattice.ideals()
    }

    pub fn is_member(&self, s: SubSet) -> bool {
        self.index.contains_key(&s)
    }

    /// Rejects subsets outside the quantifier domain.
    pub fn member(&self, s: SubSet) -> Result<SubSet, String> {
        if self.is_member(s) {
            Ok(s)
        } else {
            Err(format!("{s} is not in the ideal domain of {}", self.name))
        }
    }

    /// Verdict for a domain ideal; false outside the domain.
    pub fn holds(&self, p: Predicate, s: SubSet) -> bool {
        self.index.get(&s).map(|&k| self.flags[k][slot(p)]).unwrap_or(false)
    }

    pub fn satisfying(&self, p: Predicate) -> Vec<SubSet> {
        self.ideals().iter().copied().filter(|&s| self.holds(p, s)).collect()
    }

    pub fn product(&self, i: SubSet, j: SubSet) -> SubSet {
        self.lattice.product(i, j)
    }

    pub fn square_cap(&self, p: SubSet) -> SubSet {
        self.lattice.square_cap(p)
    }

    pub fn zero(&self) -> SubSet {
        self.lattice.zero()
    }

    pub fn full(&self) -> SubSet {
        self.lattice.full()
    }

    pub fn residual(&self, a: SubSet, b: SubSet) -> SubSet {
        residual(self.lattice.gnr().ring(), a, b)
    }

    pub fn left_multiple(&self, x: usize, s: SubSet) -> SubSet {
        left_multiple(self.lattice.gnr().ring(), x, s)
    }

    /// `⟨x⟩`, the smallest ideal containing `x`, for every element.
    pub fn principal(&self) -> &[SubSet] {
        self.principal
            .get_or_init(|| crate::ideal::principal_ideals(self.lattice.gnr().ring()))
    }

    /// `⟨x⟩ + ⟨y⟩` at index `x * n + y`.
    pub fn sums(&self) -> &[SubSet] {
        self.sums.get_or_init(|| {
            let ring = self.lattice.gnr().ring();
            let pr = self.principal();
            let n = ring.order();
            let mut out = Vec::with_capacity(n * n);
            for x in 0..n {
                for y in 0..n {
                    out.push(ring.subgroup_closure(pr[x].union(pr[y])));
                }
            }
            out
        })
    }

    pub fn sum(&self, x: usize, y: usize) -> SubSet {
        self.sums()[x * self.order() + y]
    }

    /// Every distinct `⟨y⟩ + ⟨z⟩`, ascending.
    pub fn distinct_sums(&self) -> &[SubSet] {
        self.distinct_sums.get_or_init(|| {
            let mut v = self.sums().to_vec();
            v.sort();
            v.dedup();
            v
        })
    }

    /// Maximal proper ideals, from the full lattice (`[0]`) or the domain (`[1]`).
    pub fn maximal_ideals(&self, domain_only: bool) -> &[SubSet] {
        let both = self.maximal.get_or_init(|| {
            let full = self.full();
            let pick = |pool: &[SubSet]| -> Vec<SubSet> {
                let proper: Vec<SubSet> = pool.iter().copied().filter(|&s| s != full).collect();
                proper
                    .iter()
                    .copied()
                    .filter(|&m| !proper.iter().any(|&o| o != m && m.is_subset(o)))
                    .collect()
            };
            [pick(self.lattice.all_ideals()), pick(self.ideals())]
        });
        &both[domain_only as usize]
    }

    /// `N/I` with its own analysis, cached.
    pub fn quotient(&self, by: SubSet) -> Arc<Result<QuotientEntry, String>> {
        let mut cache = self.quotients.lock().expect("quotient cache");
        cache
            .entry(by)
            .or_insert_with(|| {
                Arc::new(
                    quotient(self.gnr(), by)
                        .map_err(|e| e.to_string())
                        .and_then(|q| {
                            let analyzed = Analyzed::new(format!("{}/{by}", self.name), q.ring, self.lattice.config())
                                .map_err(|e| e.to_string())?;
                            Ok(QuotientEntry {
                                analyzed: Arc::new(analyzed),
                                projection: q.projection,
                            })
                        }),
                )
            })
            .clone()
    }

    /// Shortest lexicographically-first factorization of every reachable ideal.
    pub fn factorizations(&self, kind: FactorKind, max_len: usize) -> Arc<HashMap<SubSet, Vec<SubSet>>> {
        let mut cache = self.factors.lock().expect("factor cache");
        cache
            .entry((kind, max_len))
            .or_insert_with(|| Arc::new(factorizations(&self.lattice, kind, max_len).unwrap_or_default()))
            .clone()
    }
}

#[derive(Debug)]
pub struct HomEntry {
    pub source: usize,
    pub target: usize,
    pub hom: GradedHom,
}

/// The structures a sweep draws instances from.
#[derive(Debug)]
pub struct Workbench {
    pub config: SweepConfig,
    structures: Vec<Arc<Analyzed>>,
    products: OnceLock<HashMap<(usize, usize), Arc<Analyzed>>>,
    homs: OnceLock<Vec<HomEntry>>,
    given_homs: Option<Vec<(usize, usize, Vec<usize>)>>,
}

impl Workbench {
    pub fn new(corpus: &[CorpusEntry], config: SweepConfig) -> Result<Self, ClassifyError> {
        let structures = corpus
            .par_iter()
            .map(|e| Analyzed::new(e.name.clone(), e.gnr.clone(), config.classify).map(Arc::new))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Workbench {
            config,
            structures,
            products: OnceLock::new(),
            homs: OnceLock::new(),
            given_homs: None,
        })
    }

    /// A workbench whose homomorphisms are exactly `homs` (source, target, map).
    pub fn with_homs(
        corpus: &[CorpusEntry],
        config: SweepConfig,
        homs: Vec<(usize, usize, Vec<usize>)>,
    ) -> Result<Self, ClassifyError> {
        let mut wb = Workbench::new(corpus, config)?;
        wb.given_homs = Some(homs);
        Ok(wb)
    }

    pub fn structures(&self) -> &[Arc<Analyzed>] {
        &self.structures
    }

    pub fn structure(&self, k: usize) -> Result<&Arc<Analyzed>, String> {
        self.structures
            .get(k)
            .ok_or_else(|| format!("structure index {k} out of range"))
    }

    /// Ordered pairs sharing a monoid whose product fits the order bound.
    pub fn product_pairs(&self) -> Vec<(usize, usize)> {
        let bound = self.config.classify.max_order;
        let s = &self.structures;
        let mut out = Vec::new();
        for a in 0..s.len() {
            for b in 0..s.len() {
                if s[a].gnr().monoid() == s[b].gnr().monoid() && s[a].order() * s[b].order() <= bound {
                    out.push((a, b));
                }
            }
        }
        out
    }

    fn products(&self) -> &HashMap<(usize, usize), Arc<Analyzed>> {
        self.products.get_or_init(|| {
            let pairs = self.product_pairs();
            pairs
                .par_iter()
                .filter_map(|&(a, b)| {
                    let (x, y) = (&self.structures[a], &self.structures[b]);
                    let g = direct_product(x.gnr(), y.gnr(), self.config.classify.max_order).ok()?;
                    let name = format!("{}×{}", x.name, y.name);
                    let an = Analyzed::new(name, Arc::new(g), self.config.classify).ok()?;
                    Some(((a, b), Arc::new(an)))
                })
                .collect()
        })
    }

    pub fn product(&self, a: usize, b: usize) -> Result<&Arc<Analyzed>, String> {
        self.products()
            .get(&(a, b))
            .ok_or_else(|| format!("no product for structures ({a}, {b})"))
    }

    pub fn homs(&self) -> &[HomEntry] {
        self.homs.get_or_init(|| match &self.given_homs {
            Some(given) => given
                .iter()
                .filter_map(|(a, b, map)| {
                    let (x, y) = (self.structures.get(*a)?, self.structures.get(*b)?);
                    let hom = GradedHom::new(x.gnr().clone(), y.gnr().clone(), map.clone()).ok()?;
                    hom.is_surjective().then_some(HomEntry {
                        source: *a,
                        target: *b,
                        hom,
                    })
                })
                .collect(),
            None => {
                let s = &self.structures;
                let cap = self.config.hom_source_cap;
                let pairs: Vec<(usize, usize)> = (0..s.len())
                    .flat_map(|a| (0..s.len()).map(move |b| (a, b)))
                    .filter(|&(a, b)| s[a].order() <= cap && s[a].gnr().monoid() == s[b].gnr().monoid())
                    .collect();
                let found: Vec<Vec<HomEntry>> = pairs
                    .par_iter()
                    .map(|&(a, b)| {
                        enumerate_surjective_homs(s[a].gnr(), s[b].gnr(), cap)
                            .unwrap_or_default()
                            .into_iter()
                            .map(|hom| HomEntry {
                                source: a,
                                target: b,
                                hom,
                            })
                            .collect()
                    })
                    .collect();
                found.into_iter().flatten().collect()
            }
        })
    }

    pub fn hom(&self, k: usize) -> Result<&HomEntry, String> {
        self.homs().get(k).ok_or_else(|| format!("homomorphism index {k} out of range"))
    }
}
