//! Fixed facts about small cyclic structures, re-derived on every sweep.

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::classify::{ClassifyConfig, Lattice, Predicate};
use crate::construct::{quotient, GradedHom};
use crate::io::builders::{cyclic, GradingMode};
use crate::subset::SubSet;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GoldenFact {
    pub fact: String,
    pub statement: String,
    pub holds: bool,
    pub detail: String,
}

fn set(xs: &[usize]) -> SubSet {
    xs.iter().copied().collect()
}

fn z(n: usize, config: ClassifyConfig) -> Lattice {
    let g = cyclic(n, GradingMode::Trivial).expect("small cyclic").remove(0);
    Lattice::new(Arc::new(g), config).expect("within bounds")
}

fn fact(fact: &str, statement: &str, holds: bool, detail: String) -> GoldenFact {
    GoldenFact {
        fact: fact.into(),
        statement: statement.into(),
        holds,
        detail,
    }
}

pub fn golden_facts(config: ClassifyConfig) -> Vec<GoldenFact> {
    let mut out = Vec::new();
    let z12 = z(12, config);
    let w = |l: &Lattice, s: SubSet| l.holds(Predicate::WeaklyPrime, s);
    let a = |l: &Lattice, s: SubSet| l.holds(Predicate::AlmostPrime, s);

    let weakly: Vec<SubSet> = vec![set(&[0]), set(&[0, 2, 4, 6, 8, 10]), set(&[0, 3, 6, 9])];
    let verdicts: Vec<bool> = weakly.iter().map(|&s| w(&z12, s)).collect();
    out.push(fact(
        "z12-weakly-primes",
        "in Z_12, {0}, 2Z_12 and 3Z_12 are graded weakly prime",
        verdicts.iter().all(|&b| b),
        format!("{verdicts:?}"),
    ));

    let p4 = set(&[0, 4, 8]);
    let p5 = set(&[0, 6]);
    let (a4, w4, a5, w5) = (a(&z12, p4), w(&z12, p4), a(&z12, p5), w(&z12, p5));
    out.push(fact(
        "z12-almost-not-weakly",
        "in Z_12, {0,4,8} is almost but not weakly prime; {0,6} is neither",
        a4 && !w4 && !a5 && !w5,
        format!("{{0,4,8}}: almost {a4}, weakly {w4}; {{0,6}}: almost {a5}, weakly {w5}"),
    ));

    let prime0 = z12.holds(Predicate::Prime, z12.zero());
    out.push(fact(
        "z12-zero-not-prime",
        "in Z_12, {0} is weakly prime but not prime",
        !prime0 && w(&z12, z12.zero()),
        format!("prime {prime0}"),
    ));

    let sq = z12.square_cap(p5);
    out.push(fact(
        "z12-square-zero-not-weakly",
        "in Z_12, {0,6} has P² ∩ N = {0} and is not weakly prime",
        sq == z12.zero() && !w5,
        format!("P² ∩ N = {sq}"),
    ));

    let (z8, z4) = (z(8, config), z(4, config));
    let hom = GradedHom::new(z8.gnr_arc().clone(), z4.gnr_arc().clone(), (0..8).map(|x| x % 4).collect());
    let (holds, detail) = match hom {
        Ok(h) => {
            let pre = h.preimage(z4.zero());
            let ok = w(&z4, z4.zero()) && pre == set(&[0, 4]) && !w(&z8, pre);
            (ok, format!("φ⁻¹({{0}}) = {pre}"))
        }
        Err(e) => (false, e.to_string()),
    };
    out.push(fact(
        "z8-preimage-not-weakly",
        "for x ↦ x mod 4 from Z_8 onto Z_4, {0} is weakly prime in Z_4 but its preimage {0,4} is not in Z_8",
        holds,
        detail,
    ));

    let z18 = z(18, config);
    let i = set(&[0, 9]);
    let (holds, detail) = match quotient(z18.gnr_arc(), i) {
        Ok(q) => {
            let ql = Lattice::new(q.ring.clone(), config).expect("within bounds");
            let img = q.projection.image(i);
            let ok = img == ql.zero() && w(&ql, img) && !w(&z18, i);
            (ok, format!("|N/I| = {}, π(I) = {img}", q.ring.order()))
        }
        Err(e) => (false, e.to_string()),
    };
    out.push(fact(
        "z18-quotient-weakly",
        "in Z_18 with I = {0,9}, π(I) is weakly prime in N/I while I is not weakly prime",
        holds,
        detail,
    ));

    let z16 = z(16, config);
    let m = set(&[0, 2, 4, 6, 8, 10, 12, 14]);
    let full = z16.full();
    let proper: Vec<SubSet> = z16.all_ideals().iter().copied().filter(|&s| s != full).collect();
    let maximal: Vec<SubSet> = proper
        .iter()
        .copied()
        .filter(|&x| !proper.iter().any(|&o| o != x && x.is_subset(o)))
        .collect();
    let mm = z16.product(m, m);
    let cap = z16.square_cap(m);
    out.push(fact(
        "z16-unique-maximal",
        "in Z_16, 2Z_16 is the unique maximal ideal and MM = M² ∩ N = {0,4,8,12}",
        maximal == vec![m] && mm == cap && mm == set(&[0, 4, 8, 12]),
        format!("maximal {maximal:?}, MM = {mm}, M² ∩ N = {cap}"),
    ));
    out
}
