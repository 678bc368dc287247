mod common;

use std::sync::{Arc, OnceLock};

use common::*;
use nrgrade::claims::SweepConfig;
use nrgrade::io::corpus::CorpusEntry;
use nrgrade::io::report::sweep_report;
use nrgrade::io::{default_corpus, GradingMode};
use nrgrade::{GradedNearRing, SubSet};
use proptest::prelude::*;

fn structures() -> &'static [(String, GradedNearRing)] {
    static S: OnceLock<Vec<(String, GradedNearRing)>> = OnceLock::new();
    S.get_or_init(small_structures)
}

fn oracle_ideals() -> &'static [Vec<u64>] {
    static S: OnceLock<Vec<Vec<u64>>> = OnceLock::new();
    S.get_or_init(|| structures().iter().map(|(_, g)| Tables::of(g.ring()).all_ideals()).collect())
}

fn pick(k: usize) -> (usize, &'static GradedNearRing) {
    let k = k % structures().len();
    (k, &structures()[k].1)
}

fn subset(g: &GradedNearRing, bits: u64) -> SubSet {
    SubSet::from_bits(bits).intersection(SubSet::full(g.order()))
}

fn ideal_of(k: usize, r: usize) -> SubSet {
    let ideals = &oracle_ideals()[k];
    SubSet::from_bits(ideals[r % ideals.len()])
}

fn ok(c: Check) -> Result<(), TestCaseError> {
    c.map_err(TestCaseError::fail)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn closure_is_idempotent(k in any::<usize>(), s in any::<u64>()) {
        let (_, g) = pick(k);
        ok(closure_idempotent(g.ring(), subset(g, s)))?;
    }

    #[test]
    fn closure_is_monotone(k in any::<usize>(), a in any::<u64>(), b in any::<u64>()) {
        let (_, g) = pick(k);
        ok(closure_monotone(g.ring(), subset(g, a), subset(g, b)))?;
    }

    #[test]
    fn closure_is_minimal(k in any::<usize>(), s in any::<u64>()) {
        let (k, g) = pick(k);
        ok(closure_minimal(g.ring(), &oracle_ideals()[k], subset(g, s)))?;
    }

    #[test]
    fn product_is_monotone(k in any::<usize>(), r in proptest::array::uniform4(any::<usize>())) {
        let (k, g) = pick(k);
        let [a, b, c, d] = r.map(|x| ideal_of(k, x));
        ok(product_monotone(g.ring(), a, b, c, d))?;
    }

    #[test]
    fn generator_and_test_agree(k in any::<usize>(), s in any::<u64>(), r in any::<usize>(), ideal in any::<bool>()) {
        let (k, g) = pick(k);
        let s = if ideal { ideal_of(k, r) } else { subset(g, s | 1) };
        ok(generator_test_equivalence(g, s))?;
    }

    #[test]
    fn residual_galois_connection(k in any::<usize>(), s in any::<u64>(), r in any::<usize>(), c in any::<u64>()) {
        let (k, g) = pick(k);
        ok(galois(g.ring(), subset(g, s), ideal_of(k, r), subset(g, c)))?;
    }

    #[test]
    fn quotient_obeys_order_law(k in any::<usize>(), r in any::<usize>()) {
        let (k, g) = pick(k);
        let arc = Arc::new(g.clone());
        let graded: Vec<SubSet> = oracle_ideals()[k]
            .iter()
            .map(|&b| SubSet::from_bits(b))
            .filter(|&s| is_graded_subset(g, s.bits()))
            .collect();
        ok(quotient_order_law(&arc, graded[r % graded.len()]))?;
    }

    #[test]
    fn relabeling_preserves_classification(k in any::<usize>(), keys in proptest::collection::vec(any::<u32>(), 1..16)) {
        let (_, g) = pick(k);
        ok(relabel_invariance(g, &perm_from_keys(g.order(), &keys)))?;
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn classification_chain_and_zero_vacuity(n in 1usize..=24, mode in any::<bool>(), r in any::<usize>()) {
        let mode = if mode { GradingMode::Enumerate } else { GradingMode::Trivial };
        let gs = nrgrade::io::builders::cyclic(n, mode).unwrap();
        let g = &gs[r % gs.len()];
        let l = lattice(g);
        ok(implication_chain(&l))?;
        ok(zero_vacuity(&l))?;
    }
}

fn small_corpus() -> Vec<CorpusEntry> {
    default_corpus().unwrap().into_iter().filter(|e| e.gnr.order() <= 12).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(8))]

    #[test]
    fn evidence_is_monotone(pick in proptest::collection::vec(any::<bool>(), 1..12)) {
        ok(evidence_monotone(&small_corpus(), &pick, SweepConfig::default()))?;
    }
}

#[test]
fn exhaustive_closure_and_galois_small_cases() {
    for (k, (name, g)) in structures().iter().enumerate().filter(|(_, (_, g))| g.order() <= 6) {
        let ring = g.ring();
        let full = SubSet::full(g.order()).bits();
        for s in 0..=full {
            let s = SubSet::from_bits(s);
            closure_idempotent(ring, s).unwrap_or_else(|e| panic!("{name}: {e}"));
            closure_minimal(ring, &oracle_ideals()[k], s).unwrap_or_else(|e| panic!("{name}: {e}"));
            generator_test_equivalence(g, s).unwrap_or_else(|e| panic!("{name}: {e}"));
            for &b in &oracle_ideals()[k] {
                for c in &oracle_ideals()[k] {
                    galois(ring, s, SubSet::from_bits(b), SubSet::from_bits(*c)).unwrap_or_else(|e| panic!("{name}: {e}"));
                }
            }
        }
    }
}

#[test]
fn exhaustive_ideal_properties_small_cases() {
    for (k, (name, g)) in structures().iter().enumerate() {
        let ideals: Vec<SubSet> = oracle_ideals()[k].iter().map(|&b| SubSet::from_bits(b)).collect();
        for &a in &ideals {
            for &b in &ideals {
                closure_monotone(g.ring(), a, b).unwrap_or_else(|e| panic!("{name}: {e}"));
                for &c in &ideals {
                    product_monotone(g.ring(), a, b, c, a).unwrap_or_else(|e| panic!("{name}: {e}"));
                }
            }
        }
        let l = lattice(g);
        implication_chain(&l).unwrap_or_else(|e| panic!("{name}: {e}"));
        zero_vacuity(&l).unwrap_or_else(|e| panic!("{name}: {e}"));
        let arc = Arc::new(g.clone());
        for &i in l.ideals() {
            quotient_order_law(&arc, i).unwrap_or_else(|e| panic!("{name}: {e}"));
        }
        let n = g.order();
        let reversed: Vec<usize> = (0..n).map(|x| if x == 0 { 0 } else { n - x }).collect();
        relabel_invariance(g, &reversed).unwrap_or_else(|e| panic!("{name}: {e}"));
    }
}

#[test]
fn reports_are_deterministic() {
    let corpus = small_corpus();
    let render = || {
        let records = sweep_report(&corpus, None, SweepConfig::default()).unwrap();
        let mut out = Vec::new();
        nrgrade::io::report::write_records(&mut out, &records).unwrap();
        out
    };
    assert_eq!(render(), render());
}
