mod common;

use std::sync::Arc;

use common::{set, PredicateOracle, Tables};
use nrgrade::claims::{
    check_all, check_claim, check_claims, factor_into, registry, replay, ClaimError, Counterexample, FactorKind,
    Status, SweepConfig,
};
use nrgrade::io::builders::cyclic;
use nrgrade::io::corpus::CorpusEntry;
use nrgrade::io::{default_corpus, GradingMode};
use nrgrade::{FiniteMonoid, FiniteNearRing, GradedNearRing, Lattice, SubSet};

fn z(n: usize) -> GradedNearRing {
    cyclic(n, GradingMode::Trivial).unwrap().remove(0)
}

fn only(name: &str, g: GradedNearRing) -> Vec<CorpusEntry> {
    vec![CorpusEntry::new(name, g)]
}

#[test]
fn empty_corpus_gives_vacuous_rows() {
    let rows = check_all(&[], SweepConfig::default()).unwrap();
    assert_eq!(rows.len(), 40);
    for r in rows {
        assert_eq!(r.instances_checked, 0, "{}", r.claim_id);
        assert_eq!(r.status, Status::VerifiedOnCorpus);
    }
}

#[test]
fn z12_smoke_run_has_forty_rows() {
    let rows = check_all(&only("z12", z(12)), SweepConfig::default()).unwrap();
    assert_eq!(rows.len(), 40);
    let ids: Vec<&str> = rows.iter().map(|r| r.claim_id.as_str()).collect();
    let mut sorted = ids.clone();
    sorted.sort_by(|a, b| nrgrade::claims::compare_ids(a, b));
    assert_eq!(ids, sorted);
    assert_eq!(registry().len(), 40);
}

#[test]
fn weakly_not_prime_zero_in_z12() {
    let r = check_claim("C-2.T1", &only("z12", z(12)), SweepConfig::default()).unwrap();
    assert_eq!(r.status, Status::VerifiedOnCorpus);
    assert!(r.nonvacuous >= 1);
    let o = PredicateOracle::new(&z(12));
    assert!(o.weakly(1) && !o.prime(1));
    assert_eq!(o.t.product(1, 1), 1);
}

#[test]
fn unknown_claim_is_an_error() {
    let err = check_claim("C-9.X1", &[], SweepConfig::default()).unwrap_err();
    assert_eq!(err, ClaimError::UnknownClaim("C-9.X1".into()));
}

#[test]
fn every_counterexample_replays() {
    let corpus = default_corpus().unwrap();
    let config = SweepConfig {
        product_pairs: true,
        ..SweepConfig::default()
    };
    let rows = check_all(&corpus, config).unwrap();
    let mut replayed = 0;
    for r in &rows {
        assert_eq!(r.status == Status::Falsified, r.counterexamples_found > 0);
        if r.status == Status::Falsified {
            assert!(!r.counterexamples.is_empty(), "{}", r.claim_id);
        }
        for cx in &r.counterexamples {
            let json = serde_json::to_string(cx).unwrap();
            let back: Counterexample = serde_json::from_str(&json).unwrap();
            assert_eq!(replay(&back), Ok(true), "{}", r.claim_id);
            replayed += 1;
        }
    }
    assert!(replayed > 0);
}

#[test]
fn tampered_counterexample_does_not_replay() {
    let corpus = default_corpus().unwrap();
    let r = check_claim("C-2.P5", &corpus, SweepConfig::default()).unwrap();
    let mut cx = r.counterexamples[0].clone();
    let s = cx.instance.structure.unwrap();
    let full = SubSet::full(cx.structures[s].order);
    for k in 0..cx.instance.ideals.len() {
        cx.instance.ideals[k] = full;
    }
    assert_eq!(replay(&cx), Ok(false));
    cx.claim = "C-0.none".into();
    assert!(replay(&cx).is_err());
}

#[test]
fn union_of_incomparable_weakly_primes_fails_in_z12() {
    let r = check_claim("C-2.P5", &only("z12", z(12)), SweepConfig::default()).unwrap();
    assert_eq!(r.status, Status::Falsified);
    let t = Tables::of(z(12).ring());
    let union = set(&[0, 2, 3, 4, 6, 8, 9, 10]).bits();
    assert!(!t.is_ideal(union));
}

/// `{0}` is weakly prime in Z_12 but `{0} × Z_2` is not weakly prime in
/// Z_12 × Z_2, checked with tables built by hand.
#[test]
fn product_with_nonzero_square_breaks_weakly_primality() {
    let (a, b) = (12, 2);
    let n = a * b;
    let idx = |x: usize, y: usize| x * b + y;
    let mut add = vec![vec![0; n]; n];
    let mut mul = vec![vec![0; n]; n];
    for x1 in 0..a {
        for y1 in 0..b {
            for x2 in 0..a {
                for y2 in 0..b {
                    add[idx(x1, y1)][idx(x2, y2)] = idx((x1 + x2) % a, (y1 + y2) % b);
                    mul[idx(x1, y1)][idx(x2, y2)] = idx(x1 * x2 % a, y1 * y2 % b);
                }
            }
        }
    }
    let ring = FiniteNearRing::new(&add, &mul, 0).unwrap();
    let g = GradedNearRing::trivial(ring, FiniteMonoid::two_element_idempotent()).unwrap();
    let t = Tables::of(g.ring());
    let mask = |f: &dyn Fn(usize, usize) -> bool| -> u64 {
        (0..a).flat_map(|x| (0..b).map(move |y| (x, y))).filter(|&(x, y)| f(x, y)).map(|(x, y)| 1u64 << idx(x, y)).sum()
    };
    let p = mask(&|x, _| x == 0);
    let i = mask(&|x, _| x % 2 == 0);
    let j = mask(&|x, _| x % 6 == 0);
    assert!(t.is_ideal(p) && t.is_ideal(i) && t.is_ideal(j));
    assert!(PredicateOracle::new(&z(12)).weakly(1));
    let ij = t.product(i, j);
    assert_eq!(ij, p);
    assert!(ij != 1 && i & !p != 0 && j & !p != 0);

    let r = check_claims(
        Some(&["C-2.T7".into(), "C-3.T17".into()]),
        &[CorpusEntry::new("z12", z(12)), CorpusEntry::new("z2", z(2))],
        SweepConfig {
            product_pairs: true,
            ..SweepConfig::default()
        },
    )
    .unwrap();
    assert_eq!(r[0].status, Status::Falsified);
    assert_eq!(r[1].status, Status::VerifiedOnCorpus);
}

#[test]
fn z12_factorization_of_zero_six() {
    let l = Lattice::with_defaults(Arc::new(z(12))).unwrap();
    let target = set(&[0, 6]);
    let f = factor_into(&l, target, FactorKind::Weakly, 3).unwrap().unwrap();
    assert_eq!(f.len(), 2);
    let o = PredicateOracle::new(&z(12));
    for s in &f {
        assert!(o.weakly(s.bits()));
    }
    assert_eq!(o.t.product(f[0].bits(), f[1].bits()), target.bits());
}

/// Independent search over sequences of at most three weakly primes of Z_8.
#[test]
fn z8_zero_factorization_matches_exhaustive_scan() {
    let g = z(8);
    let o = PredicateOracle::new(&g);
    let primes: Vec<u64> = o.graded.iter().copied().filter(|&p| o.weakly(p)).collect();
    let mut reachable: Vec<(u64, usize)> = primes.iter().map(|&p| (p, 1)).collect();
    let mut frontier: Vec<u64> = primes.clone();
    for len in 2..=3 {
        let mut next = Vec::new();
        for &f in &frontier {
            for &p in &primes {
                let q = o.t.product(f, p);
                next.push(q);
                if !reachable.iter().any(|&(s, _)| s == q) {
                    reachable.push((q, len));
                }
            }
        }
        frontier = next;
    }
    let expected = reachable.iter().find(|&&(s, _)| s == 1).map(|&(_, l)| l);
    let l = Lattice::with_defaults(Arc::new(g)).unwrap();
    let found = factor_into(&l, l.zero(), FactorKind::Weakly, 3).unwrap().map(|f| f.len());
    assert_eq!(found, expected);
}

#[test]
fn whole_ring_is_a_single_factor() {
    let l = Lattice::with_defaults(Arc::new(z(6))).unwrap();
    let f = factor_into(&l, l.full(), FactorKind::Almost, 2).unwrap().unwrap();
    assert_eq!(f, vec![l.full()]);
}
