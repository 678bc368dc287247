mod common;

use common::{is_graded_subset, set, PredicateOracle, Tables};
use nrgrade::ideal::enumerate_ideals;
use nrgrade::io::default_corpus;
use nrgrade::Predicate;

#[test]
fn enumeration_matches_all_subsets_oracle() {
    let corpus = default_corpus().unwrap();
    let mut checked = 0;
    for entry in corpus.iter().filter(|e| e.gnr.order() <= 12) {
        let t = Tables::of(entry.gnr.ring());
        let oracle = t.all_ideals();
        let ours: Vec<u64> = enumerate_ideals(&entry.gnr, false, 64)
            .unwrap()
            .into_iter()
            .map(|i| i.bits.bits())
            .collect();
        let mut ours_sorted = ours.clone();
        ours_sorted.sort_unstable();
        assert_eq!(ours_sorted, oracle, "{}", entry.name);
        assert_eq!(ours.len(), oracle.len(), "{}", entry.name);

        let graded: Vec<u64> = enumerate_ideals(&entry.gnr, true, 64)
            .unwrap()
            .into_iter()
            .map(|i| i.bits.bits())
            .collect();
        let oracle_graded: Vec<u64> = oracle.iter().copied().filter(|&s| is_graded_subset(&entry.gnr, s)).collect();
        let mut g = graded.clone();
        g.sort_unstable();
        assert_eq!(g, oracle_graded, "{}", entry.name);
        checked += 1;
    }
    assert!(checked >= 12, "only {checked} structures of order ≤ 12");
}

#[test]
fn classification_matches_predicate_oracle() {
    for entry in default_corpus().unwrap().iter().filter(|e| e.gnr.order() <= 12) {
        let oracle = PredicateOracle::new(&entry.gnr);
        let l = common::lattice(&entry.gnr);
        let ours: Vec<u64> = l.ideals().iter().map(|s| s.bits()).collect();
        assert_eq!(ours, oracle.graded, "{}", entry.name);
        for &p in &oracle.graded {
            let s = nrgrade::SubSet::from_bits(p);
            assert_eq!(l.holds(Predicate::Prime, s), oracle.prime(p), "{} prime {s}", entry.name);
            assert_eq!(l.holds(Predicate::WeaklyPrime, s), oracle.weakly(p), "{} weakly {s}", entry.name);
            assert_eq!(l.holds(Predicate::AlmostPrime, s), oracle.almost(p), "{} almost {s}", entry.name);
        }
    }
}

#[test]
fn z12_ideals_are_the_divisor_subgroups() {
    let g = nrgrade::io::builders::cyclic(12, nrgrade::io::GradingMode::Trivial).unwrap().remove(0);
    let t = Tables::of(g.ring());
    let expected: Vec<u64> = [1, 2, 3, 4, 6, 12]
        .iter()
        .map(|&d| set(&(0..12).filter(|x| x % d == 0).collect::<Vec<_>>()).bits())
        .collect();
    let mut expected = expected;
    expected.sort_unstable();
    assert_eq!(t.all_ideals(), expected);
}

#[test]
fn mapping_nearring_of_order_27_ideal_count() {
    let g = nrgrade::io::builders::mapping_nearring(3).unwrap();
    let ours = enumerate_ideals(&g, false, 64).unwrap();
    let t = Tables::of(g.ring());
    // 2^26 subsets is too many; test every normal subgroup instead, which
    // contains every ideal.
    let normals = g.ring().normal_subgroups();
    let oracle: Vec<u64> = normals.iter().map(|s| s.bits()).filter(|&s| t.is_ideal(s)).collect();
    let mut ours: Vec<u64> = ours.into_iter().map(|i| i.bits.bits()).collect();
    ours.sort_unstable();
    let mut oracle = oracle;
    oracle.sort_unstable();
    assert_eq!(ours, oracle);
}
