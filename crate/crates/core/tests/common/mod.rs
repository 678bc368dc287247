//! Independent oracles and shared property checks for the integration tests.
//!
//! Nothing here calls the crate's ideal, product or classification routines;
//! everything is recomputed from the raw tables.

#![allow(dead_code)]

use std::collections::BTreeSet;
use std::sync::Arc;

use nrgrade::claims::{check_claims, SweepConfig};
use nrgrade::construct::quotient;
use nrgrade::ideal::{enumerate_ideals, ideal_closure_bits, ideal_product, raw_products, residual};
use nrgrade::io::builders::{constant_symmetric, cyclic, mapping_nearring, GradingMode};
use nrgrade::io::corpus::CorpusEntry;
use nrgrade::{ClassifyConfig, FiniteNearRing, GradedNearRing, Lattice, Predicate, ProductMode, SubSet};

pub type Check = Result<(), String>;

pub fn set(xs: &[usize]) -> SubSet {
    xs.iter().copied().collect()
}

/// Raw tables, read once through the public accessors.
pub struct Tables {
    pub n: usize,
    pub add: Vec<Vec<usize>>,
    pub mul: Vec<Vec<usize>>,
    pub neg: Vec<usize>,
}

impl Tables {
    pub fn of(ring: &FiniteNearRing) -> Self {
        let add = ring.add_table();
        let mul = ring.mul_table();
        let n = add.len();
        let neg = (0..n).map(|a| (0..n).find(|&b| add[a][b] == 0).unwrap()).collect();
        Tables { n, add, mul, neg }
    }

    fn sub(&self, a: usize, b: usize) -> usize {
        self.add[a][self.neg[b]]
    }

    pub fn members(&self, s: u64) -> Vec<usize> {
        (0..self.n).filter(|&x| s >> x & 1 == 1).collect()
    }

    /// Ideal axioms checked literally for a subset given as a bitmask.
    pub fn is_ideal(&self, s: u64) -> bool {
        if s & 1 == 0 {
            return false;
        }
        let m = self.members(s);
        let has = |x: usize| s >> x & 1 == 1;
        for &a in &m {
            for &b in &m {
                if !has(self.sub(a, b)) {
                    return false;
                }
            }
        }
        for n in 0..self.n {
            for &i in &m {
                if !has(self.sub(self.add[n][i], n)) || !has(self.mul[i][n]) {
                    return false;
                }
                for k in 0..self.n {
                    let d = self.sub(self.mul[n][self.add[k][i]], self.mul[n][k]);
                    if !has(d) {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Every ideal, by testing all subsets that contain 0.
    pub fn all_ideals(&self) -> Vec<u64> {
        assert!(self.n <= 16, "exhaustive oracle is for small orders");
        (0u64..1 << self.n).filter(|&s| s & 1 == 1 && self.is_ideal(s)).collect()
    }

    /// Subgroup generated by `s`, by repeated addition until stable.
    pub fn subgroup(&self, s: u64) -> u64 {
        let mut cur = s | 1;
        loop {
            let mut next = cur;
            for a in self.members(cur) {
                next |= 1 << self.neg[a];
                for b in self.members(cur) {
                    next |= 1 << self.add[a][b];
                }
            }
            if next == cur {
                return cur;
            }
            cur = next;
        }
    }

    pub fn product(&self, i: u64, j: u64) -> u64 {
        let mut raw = 0u64;
        for a in self.members(i) {
            for b in self.members(j) {
                raw |= 1 << self.mul[a][b];
            }
        }
        self.subgroup(raw)
    }
}

/// Graded-subset test by brute-force decomposition: the components of `x` are
/// the unique tuple from the parts summing to `x` in ascending index order.
pub fn is_graded_subset(gnr: &GradedNearRing, s: u64) -> bool {
    let t = Tables::of(gnr.ring());
    let parts: Vec<Vec<usize>> = gnr.grading().parts().iter().map(|p| p.to_vec()).collect();
    let mut decomposition = vec![None::<Vec<usize>>; t.n];
    let mut tuple = vec![0usize; parts.len()];
    fn walk(t: &Tables, parts: &[Vec<usize>], k: usize, acc: usize, tuple: &mut Vec<usize>, out: &mut Vec<Option<Vec<usize>>>) {
        if k == parts.len() {
            assert!(out[acc].is_none(), "decomposition not unique");
            out[acc] = Some(tuple.clone());
            return;
        }
        for &c in &parts[k] {
            tuple[k] = c;
            walk(t, parts, k + 1, t.add[acc][c], tuple, out);
        }
    }
    walk(&t, &parts, 0, 0, &mut tuple, &mut decomposition);
    t.members(s)
        .into_iter()
        .all(|x| decomposition[x].as_ref().unwrap().iter().all(|&c| s >> c & 1 == 1))
}

/// The three predicates over graded ideals, from first principles.
pub struct PredicateOracle {
    pub t: Tables,
    pub graded: Vec<u64>,
    pub n_mask: u64,
}

impl PredicateOracle {
    pub fn new(gnr: &GradedNearRing) -> Self {
        let t = Tables::of(gnr.ring());
        let graded = t.all_ideals().into_iter().filter(|&s| is_graded_subset(gnr, s)).collect();
        let n_mask = if t.n == 64 { u64::MAX } else { (1u64 << t.n) - 1 };
        PredicateOracle { t, graded, n_mask }
    }

    fn holds(&self, p: u64, bad: impl Fn(u64) -> bool) -> bool {
        for &i in &self.graded {
            for &j in &self.graded {
                if i & !p != 0 && j & !p != 0 {
                    let ij = self.t.product(i, j);
                    if ij & !p == 0 && bad(ij) {
                        return false;
                    }
                }
            }
        }
        true
    }

    pub fn prime(&self, p: u64) -> bool {
        self.holds(p, |_| true)
    }

    pub fn weakly(&self, p: u64) -> bool {
        self.holds(p, |ij| ij != 1)
    }

    pub fn almost(&self, p: u64) -> bool {
        let cap = self.t.product(p, p) & self.n_mask;
        self.holds(p, |ij| ij & !cap != 0)
    }
}

/// Small structures for exhaustive property cases.
pub fn small_structures() -> Vec<(String, GradedNearRing)> {
    let mut out = Vec::new();
    for n in 1..=12 {
        for (k, g) in cyclic(n, GradingMode::Enumerate).unwrap().into_iter().enumerate() {
            out.push((format!("z{n}_{k}"), g));
        }
    }
    out.push(("m_z2".into(), mapping_nearring(2).unwrap()));
    out.push(("s3_const".into(), constant_symmetric().unwrap()));
    out
}

pub fn lattice(g: &GradedNearRing) -> Lattice {
    Lattice::new(Arc::new(g.clone()), ClassifyConfig::default()).unwrap()
}

pub fn closure_idempotent(ring: &FiniteNearRing, s: SubSet) -> Check {
    let c = ideal_closure_bits(ring, s);
    let cc = ideal_closure_bits(ring, c);
    if c == cc && s.is_subset(c) {
        Ok(())
    } else {
        Err(format!("cl({s}) = {c}, cl(cl) = {cc}"))
    }
}

pub fn closure_monotone(ring: &FiniteNearRing, a: SubSet, b: SubSet) -> Check {
    let ab = a.union(b);
    let (ca, cab) = (ideal_closure_bits(ring, a), ideal_closure_bits(ring, ab));
    if ca.is_subset(cab) {
        Ok(())
    } else {
        Err(format!("cl({a}) = {ca} not in cl({ab}) = {cab}"))
    }
}

/// The closure is an ideal and lies in every oracle ideal containing `s`.
pub fn closure_minimal(ring: &FiniteNearRing, oracle_ideals: &[u64], s: SubSet) -> Check {
    let c = ideal_closure_bits(ring, s);
    if !oracle_ideals.contains(&c.bits()) {
        return Err(format!("cl({s}) = {c} is not an ideal"));
    }
    match oracle_ideals.iter().find(|&&i| s.bits() & !i == 0 && c.bits() & !i != 0) {
        Some(i) => Err(format!("cl({s}) = {c} exceeds ideal {}", SubSet::from_bits(*i))),
        None => Ok(()),
    }
}

pub fn product_monotone(ring: &FiniteNearRing, i: SubSet, i2: SubSet, j: SubSet, j2: SubSet) -> Check {
    let (big_i, big_j) = (i.union(i2), j.union(j2));
    for mode in [ProductMode::Subgroup, ProductMode::Ideal] {
        let small = ideal_product(ring, i, j, mode);
        let big = ideal_product(ring, big_i, big_j, mode);
        if !small.is_subset(big) {
            return Err(format!("{mode:?}: {i}{j} = {small} not in {big_i}{big_j} = {big}"));
        }
    }
    Ok(())
}

/// A subset is an ideal exactly when it equals its closure, and the
/// enumeration lists exactly those subsets.
pub fn generator_test_equivalence(gnr: &GradedNearRing, s: SubSet) -> Check {
    let ring = gnr.ring();
    let listed: BTreeSet<SubSet> = enumerate_ideals(gnr, false, 64).unwrap().into_iter().map(|i| i.bits).collect();
    let fixed = ideal_closure_bits(ring, s) == s;
    let test = nrgrade::ideal::is_ideal(ring, s);
    if fixed == test && test == listed.contains(&s) {
        Ok(())
    } else {
        Err(format!("{s}: closure-fixed {fixed}, is_ideal {test}, listed {}", listed.contains(&s)))
    }
}

pub fn implication_chain(l: &Lattice) -> Check {
    for &p in l.ideals() {
        let (pr, w, a) = (
            l.holds(Predicate::Prime, p),
            l.holds(Predicate::WeaklyPrime, p),
            l.holds(Predicate::AlmostPrime, p),
        );
        if (pr && !w) || (w && !a) {
            return Err(format!("{p}: prime {pr}, weakly {w}, almost {a}"));
        }
    }
    Ok(())
}

pub fn zero_vacuity(l: &Lattice) -> Check {
    let z = l.zero();
    if l.holds(Predicate::WeaklyPrime, z) && l.holds(Predicate::AlmostPrime, z) {
        Ok(())
    } else {
        Err("{0} is not weakly and almost prime".into())
    }
}

/// `S ⊆ (C : B)` iff every `s·b` with `s ∈ S`, `b ∈ B` lies in `C`.
pub fn galois(ring: &FiniteNearRing, s: SubSet, b: SubSet, c: SubSet) -> Check {
    let left = s.is_subset(residual(ring, c, b));
    let right = raw_products(ring, s, b).is_subset(c);
    if left == right {
        Ok(())
    } else {
        Err(format!("S = {s}, B = {b}, C = {c}: S ⊆ (C:B) {left}, SB ⊆ C {right}"))
    }
}

/// `|N/I|·|I| = |N|`, and the ideals of `N/I` correspond to the ideals of `N`
/// containing `I`, with `π` and `π⁻¹` mutually inverse on them.
pub fn quotient_order_law(gnr: &Arc<GradedNearRing>, i: SubSet) -> Check {
    let q = quotient(gnr, i).map_err(|e| e.to_string())?;
    if q.ring.order() * i.len() != gnr.order() {
        return Err(format!("|N/I| = {}, |I| = {}, |N| = {}", q.ring.order(), i.len(), gnr.order()));
    }
    let above: Vec<SubSet> = enumerate_ideals(gnr, false, 64)
        .unwrap()
        .into_iter()
        .map(|x| x.bits)
        .filter(|x| i.is_subset(*x))
        .collect();
    let below: Vec<SubSet> = enumerate_ideals(&q.ring, false, 64).unwrap().into_iter().map(|x| x.bits).collect();
    if above.len() != below.len() {
        return Err(format!("{} ideals above I, {} in N/I", above.len(), below.len()));
    }
    for &j in &above {
        let img = q.projection.image(j);
        if !below.contains(&img) || q.projection.preimage(img) != j {
            return Err(format!("correspondence fails at {j}"));
        }
    }
    Ok(())
}

/// Renaming elements (keeping 0 fixed) maps classifications onto each other.
pub fn relabel_invariance(gnr: &GradedNearRing, perm: &[usize]) -> Check {
    let a = lattice(gnr);
    let moved = gnr.relabel(perm);
    let b = lattice(&moved);
    let mapped: BTreeSet<SubSet> = a.ideals().iter().map(|&s| FiniteNearRing::relabel_set(s, perm)).collect();
    let theirs: BTreeSet<SubSet> = b.ideals().iter().copied().collect();
    if mapped != theirs {
        return Err("graded ideal lattices differ".into());
    }
    for &p in a.ideals() {
        let q = FiniteNearRing::relabel_set(p, perm);
        for pred in [Predicate::Prime, Predicate::WeaklyPrime, Predicate::AlmostPrime] {
            if a.holds(pred, p) != b.holds(pred, q) {
                return Err(format!("{pred:?} differs at {p} ↦ {q}"));
            }
        }
    }
    Ok(())
}

/// Permutation of `0..n` fixing 0, from a shuffle key.
pub fn perm_from_keys(n: usize, keys: &[u32]) -> Vec<usize> {
    let mut rest: Vec<usize> = (1..n).collect();
    rest.sort_by_key(|&x| (keys[x % keys.len()].wrapping_mul(x as u32 + 1), x));
    let mut perm = vec![0; n];
    for (k, &x) in rest.iter().enumerate() {
        perm[x] = k + 1;
    }
    perm
}

/// Claims falsified on a sub-corpus stay falsified on the whole corpus.
pub fn evidence_monotone(corpus: &[CorpusEntry], pick: &[bool], config: SweepConfig) -> Check {
    let sub: Vec<CorpusEntry> = corpus
        .iter()
        .zip(pick.iter().cycle())
        .filter(|(_, &p)| p)
        .map(|(c, _)| c.clone())
        .collect();
    let small = check_claims(None, &sub, config).map_err(|e| e.to_string())?;
    let large = check_claims(None, corpus, config).map_err(|e| e.to_string())?;
    for (s, l) in small.iter().zip(&large) {
        assert_eq!(s.claim_id, l.claim_id);
        if s.counterexamples_found > 0 && l.counterexamples_found == 0 {
            return Err(format!("{} falsified on the sub-corpus only", s.claim_id));
        }
    }
    Ok(())
}
