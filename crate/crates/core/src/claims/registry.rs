//! Every registered claim: quantifier shape, hypothesis and conclusion.
//!
//! Conventions: `W`, `A` and `Pr` abbreviate weakly prime, almost prime and
//! prime over the quantifier domain; `T(P)` is `P² ∩ N`; products are ideal
//! products. Equivalence theorems are split into one biconditional row per
//! condition `(1) ⇔ (k)`.

use super::conditions::{self, Cond};
use super::factor::FactorKind;
use super::workbench::{Analyzed, Workbench};
use super::{Instance, Outcome};
use crate::classify::Predicate;
use crate::construct::{product_set, project};
use crate::subset::SubSet;

pub type Generate = fn(&Workbench) -> Vec<Instance>;
pub type Evaluate = fn(&Workbench, &Instance) -> Result<Outcome, String>;
pub type Variant = fn(&Workbench, &Instance) -> Result<Cond, String>;

pub struct ClaimSpec {
    pub id: &'static str,
    pub anchor: &'static str,
    pub statement: &'static str,
    /// What one instance ranges over.
    pub shape: &'static str,
    /// Meaning of each position of `Instance::ideals`; empty for chains.
    pub roles: &'static [&'static str],
    pub instances: Generate,
    pub evaluate: Evaluate,
    /// A secondary reading tallied over hypothesis instances and reported as
    /// a note.
    pub variant: Option<(&'static str, Variant)>,
}

impl std::fmt::Debug for ClaimSpec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("ClaimSpec").field("id", &self.id).finish()
    }
}

impl ClaimSpec {
    pub fn label(&self, ideals: &[SubSet]) -> Vec<(String, Vec<usize>)> {
        ideals
            .iter()
            .enumerate()
            .map(|(k, s)| {
                let role = self.roles.get(k).map(|r| r.to_string()).unwrap_or_else(|| format!("chain[{k}]"));
                (role, s.to_vec())
            })
            .collect()
    }
}

const W: Predicate = Predicate::WeaklyPrime;
const A: Predicate = Predicate::AlmostPrime;
const PR: Predicate = Predicate::Prime;

fn kind(almost: bool) -> FactorKind {
    if almost {
        FactorKind::Almost
    } else {
        FactorKind::Weakly
    }
}

// ---- instance generators ----

fn each_structure(wb: &Workbench) -> impl Iterator<Item = (usize, &Analyzed)> {
    wb.structures().iter().enumerate().map(|(s, a)| (s, a.as_ref()))
}

fn gen_ideal(wb: &Workbench) -> Vec<Instance> {
    let mut out = Vec::new();
    for (s, a) in each_structure(wb) {
        for &p in a.ideals() {
            out.push(Instance::on(s, vec![p]));
        }
    }
    out
}

fn gen_ideal_pair(wb: &Workbench) -> Vec<Instance> {
    let mut out = Vec::new();
    for (s, a) in each_structure(wb) {
        for &p in a.ideals() {
            for &i in a.ideals() {
                out.push(Instance::on(s, vec![p, i]));
            }
        }
    }
    out
}

fn gen_ideal_triple(wb: &Workbench) -> Vec<Instance> {
    let mut out = Vec::new();
    for (s, a) in each_structure(wb) {
        for &p in a.ideals() {
            for &i in a.ideals() {
                for &j in a.ideals() {
                    out.push(Instance::on(s, vec![p, i, j]));
                }
            }
        }
    }
    out
}

/// `(I, P)` with `I ⊆ P`.
fn gen_nested(wb: &Workbench) -> Vec<Instance> {
    let mut out = Vec::new();
    for (s, a) in each_structure(wb) {
        for &i in a.ideals() {
            for &p in a.ideals() {
                if i.is_subset(p) {
                    out.push(Instance::on(s, vec![i, p]));
                }
            }
        }
    }
    out
}

/// `(P, Ī, J̄)` with `P` satisfying the predicate and `Ī, J̄` ideals of `N/P`.
fn gen_lift<const ALMOST: bool>(wb: &Workbench) -> Vec<Instance> {
    let pred = kind(ALMOST).predicate();
    let mut out = Vec::new();
    for (s, a) in each_structure(wb) {
        for p in a.satisfying(pred) {
            let q = a.quotient(p);
            let Ok(q) = q.as_ref() else { continue };
            for &i in q.analyzed.ideals() {
                for &j in q.analyzed.ideals() {
                    out.push(Instance::on(s, vec![p, i, j]));
                }
            }
        }
    }
    out
}

fn gen_chain<const ALMOST: bool>(wb: &Workbench) -> Vec<Instance> {
    let pred = kind(ALMOST).predicate();
    let cap = wb.config.chain_cap;
    let mut out = Vec::new();
    for (s, a) in each_structure(wb) {
        let mut members = a.satisfying(pred);
        members.sort_by_key(|m| (m.len(), m.bits()));
        let mut produced = 0;
        let mut stack: Vec<Vec<SubSet>> = members.iter().rev().map(|&m| vec![m]).collect();
        while let Some(chain) = stack.pop() {
            if produced >= cap {
                break;
            }
            let top = *chain.last().expect("nonempty");
            for &m in members.iter().rev() {
                if top.is_subset(m) && top != m {
                    let mut next = chain.clone();
                    next.push(m);
                    stack.push(next);
                }
            }
            out.push(Instance::on(s, chain));
            produced += 1;
        }
    }
    out
}

/// `(P, I)` with `P` an intersection of ideals satisfying the predicate.
fn gen_intersection<const ALMOST: bool>(wb: &Workbench) -> Vec<Instance> {
    let pred = kind(ALMOST).predicate();
    let mut out = Vec::new();
    for (s, a) in each_structure(wb) {
        for &p in a.ideals() {
            if hull(a, pred, p) != p {
                continue;
            }
            for &i in a.ideals() {
                out.push(Instance::on(s, vec![p, i]));
            }
        }
    }
    out
}

fn gen_hom_source(wb: &Workbench) -> Vec<Instance> {
    let mut out = Vec::new();
    for (h, e) in wb.homs().iter().enumerate() {
        for &p in wb.structures()[e.source].ideals() {
            out.push(Instance::on_hom(h, vec![p]));
        }
    }
    out
}

fn gen_hom_target_pair(wb: &Workbench) -> Vec<Instance> {
    let mut out = Vec::new();
    for (h, e) in wb.homs().iter().enumerate() {
        let b = &wb.structures()[e.target];
        for &i in b.ideals() {
            for &j in b.ideals() {
                out.push(Instance::on_hom(h, vec![i, j]));
            }
        }
    }
    out
}

fn gen_hom_target_triple(wb: &Workbench) -> Vec<Instance> {
    let mut out = Vec::new();
    for (h, e) in wb.homs().iter().enumerate() {
        let b = &wb.structures()[e.target];
        for &p in b.ideals() {
            for &i in b.ideals() {
                for &j in b.ideals() {
                    out.push(Instance::on_hom(h, vec![p, i, j]));
                }
            }
        }
    }
    out
}

fn product_pairs(wb: &Workbench) -> Vec<(usize, usize)> {
    if !wb.config.product_pairs {
        return Vec::new();
    }
    wb.product_pairs().into_iter().filter(|&(a, b)| wb.product(a, b).is_ok()).collect()
}

fn gen_product(wb: &Workbench) -> Vec<Instance> {
    product_pairs(wb).into_iter().map(|(a, b)| Instance::on_pair(a, b, vec![])).collect()
}

fn gen_product_left(wb: &Workbench) -> Vec<Instance> {
    let mut out = Vec::new();
    for (a, b) in product_pairs(wb) {
        for &p in wb.structures()[a].ideals() {
            out.push(Instance::on_pair(a, b, vec![p]));
        }
    }
    out
}

fn gen_product_ideal(wb: &Workbench) -> Vec<Instance> {
    let mut out = Vec::new();
    for (a, b) in product_pairs(wb) {
        let ab = wb.product(a, b).expect("filtered");
        for &k in ab.ideals() {
            out.push(Instance::on_pair(a, b, vec![k]));
        }
    }
    out
}

// ---- shared helpers ----

/// Intersection of all ideals satisfying `pred` that contain `p` (`N` always
/// qualifies, so the family is never empty).
fn hull(a: &Analyzed, pred: Predicate, p: SubSet) -> SubSet {
    a.ideals()
        .iter()
        .copied()
        .filter(|&w| p.is_subset(w) && a.holds(pred, w))
        .fold(a.full(), |acc, w| acc.intersection(w))
}

fn on_structure<'a>(wb: &'a Workbench, inst: &Instance) -> Result<&'a Analyzed, String> {
    Ok(wb.structure(inst.structure()?)?.as_ref())
}

fn ideal(a: &Analyzed, inst: &Instance, k: usize) -> Result<SubSet, String> {
    a.member(inst.ideal(k)?)
}

fn biconditional(left: bool, right: bool, detail: impl FnOnce() -> String) -> Outcome {
    Outcome {
        hypothesis: left || right,
        conclusion: left == right,
        detail: (left != right).then(detail),
    }
}

// ---- single-structure claims ----

fn weakly_not_prime_square_zero(wb: &Workbench, inst: &Instance) -> Result<Outcome, String> {
    let a = on_structure(wb, inst)?;
    let p = ideal(a, inst, 0)?;
    let sq = a.square_cap(p);
    Ok(Outcome::implies(a.holds(W, p) && !a.holds(PR, p), sq == a.zero(), || {
        format!("P² ∩ N = {sq}")
    }))
}

fn square_nonzero_prime_iff_weakly(wb: &Workbench, inst: &Instance) -> Result<Outcome, String> {
    let a = on_structure(wb, inst)?;
    let p = ideal(a, inst, 0)?;
    let (pr, w) = (a.holds(PR, p), a.holds(W, p));
    Ok(Outcome::implies(a.square_cap(p) != a.zero(), pr == w, || {
        format!("prime = {pr}, weakly prime = {w}")
    }))
}

fn weakly_annihilator_prime(wb: &Workbench, inst: &Instance) -> Result<Outcome, String> {
    let a = on_structure(wb, inst)?;
    let p = ideal(a, inst, 0)?;
    let res = a.residual(a.zero(), p);
    Ok(Outcome::implies(a.holds(W, p) && res.is_subset(p), a.holds(PR, p), || {
        format!("({{0}}:P) = {res}, P not prime")
    }))
}

fn zero_product_pair(wb: &Workbench, inst: &Instance) -> Result<(bool, SubSet, SubSet), String> {
    let a = on_structure(wb, inst)?;
    let (p, i, j) = (ideal(a, inst, 0)?, ideal(a, inst, 1)?, ideal(a, inst, 2)?);
    let hyp = a.holds(W, p) && a.product(i, j) == a.zero() && !i.is_subset(p) && !j.is_subset(p);
    Ok((hyp, a.product(i, p), a.product(p, j)))
}

fn zero_product_sides_equal(wb: &Workbench, inst: &Instance) -> Result<Outcome, String> {
    let (hyp, ip, pj) = zero_product_pair(wb, inst)?;
    Ok(Outcome::implies(hyp, ip == pj, || format!("IP = {ip}, PJ = {pj}")))
}

fn zero_product_sides_zero(wb: &Workbench, inst: &Instance) -> Result<Cond, String> {
    let (_, ip, pj) = zero_product_pair(wb, inst)?;
    let zero = on_structure(wb, inst)?.zero();
    Ok(if ip == zero && pj == zero {
        Ok(())
    } else {
        Err(format!("IP = {ip}, PJ = {pj}"))
    })
}

fn union_is_one_side(wb: &Workbench, inst: &Instance) -> Result<Outcome, String> {
    let a = on_structure(wb, inst)?;
    let (p, i, j) = (ideal(a, inst, 0)?, ideal(a, inst, 1)?, ideal(a, inst, 2)?);
    Ok(Outcome::implies(p == i.union(j), p == i || p == j, || {
        "P = I ∪ J with P ≠ I and P ≠ J".to_string()
    }))
}

fn elementwise_cond(a: &Analyzed, k: FactorKind, p: SubSet, c: usize) -> Cond {
    match c {
        1 => conditions::elementwise(a, k, p),
        2 => conditions::residual_union(a, k, p),
        3 => conditions::residual_either(a, k, p),
        _ => conditions::predicate(a, k, p),
    }
}

fn idealwise_cond(a: &Analyzed, k: FactorKind, p: SubSet, c: usize) -> Cond {
    match c {
        1 => conditions::predicate(a, k, p),
        2 => conditions::strict_overideals(a, k, p),
        _ => conditions::outside_ideals(a, k, p),
    }
}

fn equivalence(cond: fn(&Analyzed, FactorKind, SubSet, usize) -> Cond, almost: bool, c: usize, wb: &Workbench, inst: &Instance) -> Result<Outcome, String> {
    let a = on_structure(wb, inst)?;
    let p = ideal(a, inst, 0)?;
    let k = kind(almost);
    let first = cond(a, k, p, 1);
    let other = cond(a, k, p, c);
    Ok(biconditional(first.is_ok(), other.is_ok(), || match (first, other) {
        (Err(e), _) => format!("(1) fails ({e}) but ({c}) holds"),
        (_, Err(e)) => format!("(1) holds but ({c}) fails ({e})"),
        _ => unreachable!("sides differ"),
    }))
}

fn elementwise_eq<const ALMOST: bool, const C: usize>(wb: &Workbench, inst: &Instance) -> Result<Outcome, String> {
    equivalence(elementwise_cond, ALMOST, C, wb, inst)
}

fn idealwise_eq<const ALMOST: bool, const C: usize>(wb: &Workbench, inst: &Instance) -> Result<Outcome, String> {
    equivalence(idealwise_cond, ALMOST, C, wb, inst)
}

fn chain_intersection<const ALMOST: bool>(wb: &Workbench, inst: &Instance) -> Result<Outcome, String> {
    let a = on_structure(wb, inst)?;
    let pred = kind(ALMOST).predicate();
    if inst.ideals.is_empty() {
        return Err("empty chain".into());
    }
    let chain: Vec<SubSet> = inst.ideals.iter().map(|&s| a.member(s)).collect::<Result<_, _>>()?;
    let nested = chain.windows(2).all(|w| w[0].is_subset(w[1]) && w[0] != w[1]);
    let hyp = nested && chain.iter().all(|&m| a.holds(pred, m));
    let meet = chain.iter().fold(a.full(), |acc, &m| acc.intersection(m));
    Ok(Outcome::implies(hyp, a.holds(pred, meet), || format!("intersection {meet} fails the predicate")))
}

fn intersection_square<const ALMOST: bool>(wb: &Workbench, inst: &Instance) -> Result<Outcome, String> {
    let a = on_structure(wb, inst)?;
    let (p, i) = (ideal(a, inst, 0)?, ideal(a, inst, 1)?);
    let pred = kind(ALMOST).predicate();
    let sq = a.product(i, i);
    let floor_ok = if ALMOST { !sq.is_subset(a.square_cap(p)) } else { sq != a.zero() };
    let hyp = hull(a, pred, p) == p && floor_ok && sq.is_subset(p);
    Ok(Outcome::implies(hyp, i.is_subset(p), || format!("I² = {sq} ⊆ P but I ⊄ P")))
}

fn square_zero_forces<const ALMOST: bool>(wb: &Workbench, inst: &Instance) -> Result<Outcome, String> {
    let a = on_structure(wb, inst)?;
    let (p, i) = (ideal(a, inst, 0)?, ideal(a, inst, 1)?);
    let sq = a.product(i, i);
    if ALMOST {
        let cap = a.square_cap(p);
        Ok(Outcome::implies(a.holds(A, p) && sq.is_subset(p), sq.is_subset(cap), || {
            format!("I² = {sq}, P² ∩ N = {cap}")
        }))
    } else {
        let hyp = a.holds(W, p) && a.product(p, p) == a.zero() && sq.is_subset(p);
        Ok(Outcome::implies(hyp, sq == a.zero(), || format!("I² = {sq}")))
    }
}

fn union_weakly(wb: &Workbench, inst: &Instance) -> Result<Outcome, String> {
    let a = on_structure(wb, inst)?;
    let (p, i) = (ideal(a, inst, 0)?, ideal(a, inst, 1)?);
    let u = p.union(i);
    let is_ideal = a.is_member(u);
    Ok(Outcome::implies(a.holds(W, p) && a.holds(W, i), is_ideal && a.holds(W, u), || {
        if is_ideal {
            format!("P ∪ I = {u} is not weakly prime")
        } else {
            format!("P ∪ I = {u} is not a graded ideal")
        }
    }))
}

fn weakly_implies_almost(wb: &Workbench, inst: &Instance) -> Result<Outcome, String> {
    let a = on_structure(wb, inst)?;
    let p = ideal(a, inst, 0)?;
    Ok(Outcome::implies(a.holds(W, p), a.holds(A, p), || "weakly prime but not almost prime".into()))
}

fn almost_residual_prime(wb: &Workbench, inst: &Instance) -> Result<Outcome, String> {
    let a = on_structure(wb, inst)?;
    let p = ideal(a, inst, 0)?;
    let res = a.residual(a.square_cap(p), p);
    Ok(Outcome::implies(a.holds(A, p) && res.is_subset(p), a.holds(PR, p), || {
        format!("((P² ∩ N):P) = {res}, P not prime")
    }))
}

fn quotient_image<const ALMOST: bool>(wb: &Workbench, inst: &Instance) -> Result<Outcome, String> {
    let a = on_structure(wb, inst)?;
    let (i, p) = (ideal(a, inst, 0)?, ideal(a, inst, 1)?);
    let pred = kind(ALMOST).predicate();
    let hyp = i.is_subset(p) && a.holds(pred, p);
    if !hyp {
        return Ok(Outcome::vacuous());
    }
    let q = a.quotient(i);
    Ok(match q.as_ref() {
        Err(e) => Outcome::implies(true, false, || format!("N/I not constructible: {e}")),
        Ok(q) => {
            let img = q.projection.image(p);
            Outcome::implies(true, q.analyzed.holds(pred, img), || format!("π(P) = {img} fails in N/I"))
        }
    })
}

fn lifted_dichotomy<const ALMOST: bool>(wb: &Workbench, inst: &Instance) -> Result<Outcome, String> {
    let a = on_structure(wb, inst)?;
    let p = ideal(a, inst, 0)?;
    let q = a.quotient(p);
    let q = q.as_ref().as_ref().map_err(|e| format!("N/P not constructible: {e}"))?;
    let qa = &q.analyzed;
    let (ib, jb) = (qa.member(inst.ideal(1)?)?, qa.member(inst.ideal(2)?)?);
    let pred = kind(ALMOST).predicate();
    let hyp = a.holds(pred, p) && qa.product(ib, jb) == qa.zero() && jb != qa.zero();
    let i = q.projection.preimage(ib);
    let j = q.projection.preimage(jb);
    let pj = a.product(p, j);
    let bound = if ALMOST { a.square_cap(p) } else { a.zero() };
    Ok(Outcome::implies(hyp, i.is_subset(p) || pj.is_subset(bound), || {
        format!("I = {i} ⊄ P and PJ = {pj} with J = {j}")
    }))
}

fn unique_maximal(wb: &Workbench, inst: &Instance) -> Result<Outcome, String> {
    let a = on_structure(wb, inst)?;
    let p = ideal(a, inst, 0)?;
    let maxs = a.maximal_ideals(wb.config.maximal_in_domain);
    let [m] = maxs else {
        return Ok(Outcome::vacuous());
    };
    let m2 = a.square_cap(*m);
    let hyp = a.product(*m, *m) == m2 && m2.is_subset(p);
    let p2 = a.square_cap(p);
    let almost = a.holds(A, p);
    Ok(Outcome::implies(hyp, almost == (m2 == p2), || {
        format!("M = {m}, M² ∩ N = {m2}, P² ∩ N = {p2}, almost prime = {almost}")
    }))
}

// ---- homomorphism claims ----

fn hom_preimage_nonzero(wb: &Workbench, inst: &Instance) -> Result<Outcome, String> {
    let e = wb.hom(inst.hom()?)?;
    let (src, tgt) = (wb.structure(e.source)?, wb.structure(e.target)?);
    let (i, j) = (ideal(tgt, inst, 0)?, ideal(tgt, inst, 1)?);
    let (pi, pj) = (e.hom.preimage(i), e.hom.preimage(j));
    let prod = src.product(pi, pj);
    Ok(Outcome::implies(tgt.product(i, j) != tgt.zero(), prod != src.zero(), || {
        format!("φ⁻¹(I) φ⁻¹(J) = {prod}")
    }))
}

fn hom_preimage_not_inside(wb: &Workbench, inst: &Instance) -> Result<Outcome, String> {
    let e = wb.hom(inst.hom()?)?;
    let (src, tgt) = (wb.structure(e.source)?, wb.structure(e.target)?);
    let (p, i, j) = (ideal(tgt, inst, 0)?, ideal(tgt, inst, 1)?, ideal(tgt, inst, 2)?);
    let prod = src.product(e.hom.preimage(i), e.hom.preimage(j));
    let pp = e.hom.preimage(p);
    Ok(Outcome::implies(!tgt.product(i, j).is_subset(p), !prod.is_subset(pp), || {
        format!("φ⁻¹(I) φ⁻¹(J) = {prod} ⊆ φ⁻¹(P) = {pp}")
    }))
}

fn hom_image<const ALMOST: bool>(wb: &Workbench, inst: &Instance) -> Result<Outcome, String> {
    let e = wb.hom(inst.hom()?)?;
    let (src, tgt) = (wb.structure(e.source)?, wb.structure(e.target)?);
    let p = ideal(src, inst, 0)?;
    let pred = kind(ALMOST).predicate();
    let hyp = src.holds(pred, p) && e.hom.kernel().is_subset(p);
    let img = e.hom.image(p);
    Ok(Outcome::implies(hyp, tgt.holds(pred, img), || {
        if tgt.is_member(img) {
            format!("φ(P) = {img} fails in the target")
        } else {
            format!("φ(P) = {img} is not a graded ideal of the target")
        }
    }))
}

// ---- product claims ----

fn product_lift<const ALMOST: bool>(wb: &Workbench, inst: &Instance) -> Result<Outcome, String> {
    let (ia, ib) = inst.pair()?;
    let (a, b, ab) = (wb.structure(ia)?, wb.structure(ib)?, wb.product(ia, ib)?);
    let p = ideal(a, inst, 0)?;
    let pm = product_set(p, b.full(), b.order());
    let pred = kind(ALMOST).predicate();
    let (left, right) = (a.holds(pred, p), ab.holds(pred, pm));
    Ok(biconditional(left, right, || format!("in the factor: {left}, P × M = {pm} in the product: {right}")))
}

fn product_catalog<const PRIME_SECOND: bool>(wb: &Workbench, inst: &Instance) -> Result<Outcome, String> {
    let (ia, ib) = inst.pair()?;
    let (a, b, ab) = (wb.structure(ia)?, wb.structure(ib)?, wb.product(ia, ib)?);
    let k = ideal(ab, inst, 0)?;
    let nb = b.order();
    let (l, r) = project(k, nb);
    let second = if PRIME_SECOND { PR } else { W };
    let left_form = product_set(l, b.full(), nb) == k && a.holds(W, l);
    let right_form = product_set(a.full(), r, nb) == k && b.holds(second, r);
    let weakly = ab.holds(W, k);
    Ok(biconditional(weakly, left_form || right_form, || {
        if weakly {
            format!("weakly prime but neither I × M nor N × J (projections {l}, {r})")
        } else {
            format!("of the listed form (projections {l}, {r}) but not weakly prime")
        }
    }))
}

fn product_zero_weakly(wb: &Workbench, inst: &Instance) -> Result<Outcome, String> {
    let (ia, ib) = inst.pair()?;
    wb.structure(ia)?;
    wb.structure(ib)?;
    let ab = wb.product(ia, ib)?;
    Ok(Outcome::implies(true, ab.holds(W, ab.zero()), || "{0} × {0} is not weakly prime".into()))
}

fn product_factorization<const ALMOST: bool>(wb: &Workbench, inst: &Instance) -> Result<Outcome, String> {
    let (ia, ib) = inst.pair()?;
    let (a, b, ab) = (wb.structure(ia)?, wb.structure(ib)?, wb.product(ia, ib)?);
    let k = ideal(ab, inst, 0)?;
    let len = wb.config.factor_max_len;
    let fk = kind(ALMOST);
    let covers = |x: &Analyzed| {
        let f = x.factorizations(fk, len);
        x.ideals().iter().all(|s| f.contains_key(s))
    };
    let hyp = covers(a) && covers(b);
    let ok = hyp && ab.factorizations(fk, 2 * len).contains_key(&k);
    Ok(Outcome::implies(hyp, ok, || format!("{k} has no factorization of length ≤ {}", 2 * len)))
}

pub fn registry() -> &'static [ClaimSpec] {
    &REGISTRY
}

macro_rules! claim {
    ($id:expr, $anchor:expr, $statement:expr, $shape:expr, $roles:expr, $gen:expr, $eval:expr) => {
        ClaimSpec {
            id: $id,
            anchor: $anchor,
            statement: $statement,
            shape: $shape,
            roles: $roles,
            instances: $gen,
            evaluate: $eval,
            variant: None,
        }
    };
}

const P: &[&str] = &["P"];
const PI: &[&str] = &["P", "I"];
const PIJ: &[&str] = &["P", "I", "J"];

static REGISTRY: [ClaimSpec; 40] = [
    claim!("C-2.T1", "Theorem 1", "W(P) ∧ ¬Pr(P) ⇒ T(P) = {0}", "structure, P", P, gen_ideal, weakly_not_prime_square_zero),
    claim!("C-2.C1", "Corollary 1", "T(P) ≠ {0} ⇒ (Pr(P) ⇔ W(P))", "structure, P", P, gen_ideal, square_nonzero_prime_iff_weakly),
    claim!("C-2.P1", "Proposition 1", "W(P) ∧ ({0}:P) ⊆ P ⇒ Pr(P)", "structure, P", P, gen_ideal, weakly_annihilator_prime),
    ClaimSpec {
        id: "C-2.T2",
        anchor: "Theorem 2",
        statement: "W(P) ∧ IJ = {0} ∧ I ⊄ P ∧ J ⊄ P ⇒ IP = PJ",
        shape: "structure, P, I, J",
        roles: PIJ,
        instances: gen_ideal_triple,
        evaluate: zero_product_sides_equal,
        variant: Some(("IP = PJ = {0}", zero_product_sides_zero)),
    },
    claim!("C-2.L1", "Lemma 1", "P = I ∪ J ⇒ P = I ∨ P = J", "structure, P, I, J", PIJ, gen_ideal_triple, union_is_one_side),
    claim!("C-2.P2.1-2", "Proposition 2", "element condition (1) ⇔ (P:⟨x⟩+⟨y⟩) = P ∪ (0:⟨x⟩+⟨y⟩)", "structure, P", P, gen_ideal, elementwise_eq::<false, 2>),
    claim!("C-2.P2.1-3", "Proposition 2", "element condition (1) ⇔ (P:⟨x⟩+⟨y⟩) ∈ {P, (0:⟨x⟩+⟨y⟩)}", "structure, P", P, gen_ideal, elementwise_eq::<false, 3>),
    claim!("C-2.P2.1-4", "Proposition 2", "element condition (1) ⇔ W(P)", "structure, P", P, gen_ideal, elementwise_eq::<false, 4>),
    claim!("C-2.T3.1-2", "Theorem 3", "W(P) ⇔ (P ⊊ I, J ⇒ IJ = {0} ∨ IJ ⊄ P)", "structure, P", P, gen_ideal, idealwise_eq::<false, 2>),
    claim!("C-2.T3.1-3", "Theorem 3", "W(P) ⇔ (I, J ⊄ P ⇒ IJ = {0} ∨ IJ ⊄ P)", "structure, P", P, gen_ideal, idealwise_eq::<false, 3>),
    claim!("C-2.P3", "Proposition 3", "intersection of a chain of weakly primes is weakly prime", "structure, chain", &[], gen_chain::<false>, chain_intersection::<false>),
    claim!("C-2.P4", "Proposition 4", "P an intersection of weakly primes ∧ {0} ≠ I² ⊆ P ⇒ I ⊆ P", "structure, P, I", PI, gen_intersection::<false>, intersection_square::<false>),
    claim!("C-2.L2", "Lemma 2", "φ surjective, I, J ideals of the target: IJ ≠ {0} ⇒ φ⁻¹(I) φ⁻¹(J) ≠ {0}", "homomorphism, I, J", &["I", "J"], gen_hom_target_pair, hom_preimage_nonzero),
    claim!("C-2.T4", "Theorem 4", "W(P) ∧ ker φ ⊆ P ⇒ W(φ(P))", "homomorphism, P", P, gen_hom_source, hom_image::<false>),
    claim!("C-2.T5", "Theorem 5", "I ⊆ P ∧ W(P) ⇒ W(π(P)) in N/I", "structure, I, P", &["I", "P"], gen_nested, quotient_image::<false>),
    claim!("C-2.L3", "Lemma 3", "W(P) ∧ ĪJ̄ = {0} ∧ J̄ ≠ {0} in N/P ⇒ I ⊆ P ∨ PJ = {0}", "structure, P, Ī, J̄", &["P", "I/P", "J/P"], gen_lift::<false>, lifted_dichotomy::<false>),
    claim!("C-2.T6", "Theorem 6", "W(P) ∧ P² = {0} ∧ I² ⊆ P ⇒ I² = {0}", "structure, P, I", PI, gen_ideal_pair, square_zero_forces::<false>),
    claim!("C-2.T7", "Theorem 7", "W(P) ⇔ W(P × M)", "pair, P", P, gen_product_left, product_lift::<false>),
    claim!("C-2.C2", "Corollary 2", "factors factor into weakly primes ⇒ every ideal of N × M does", "pair, K", &["K"], gen_product_ideal, product_factorization::<false>),
    claim!("C-2.T8", "Theorem 8", "W(K) ⇔ K = I × M with W(I) or K = N × J with Pr(J)", "pair, K", &["K"], gen_product_ideal, product_catalog::<true>),
    claim!("C-2.T8.weakly", "Theorem 8", "W(K) ⇔ K = I × M with W(I) or K = N × J with W(J)", "pair, K", &["K"], gen_product_ideal, product_catalog::<false>),
    claim!("C-2.T9", "Theorem 9", "W({0} × {0}) in N × M", "pair", &[], gen_product, product_zero_weakly),
    claim!("C-2.P5", "Proposition 5", "W(P) ∧ W(I) ⇒ P ∪ I is a graded ideal ∧ W(P ∪ I)", "structure, P, I", PI, gen_ideal_pair, union_weakly),
    claim!("C-3.T10", "Theorem 10", "W(P) ⇒ A(P)", "structure, P", P, gen_ideal, weakly_implies_almost),
    claim!("C-3.P6", "Proposition 6", "A(P) ∧ (T(P):P) ⊆ P ⇒ Pr(P)", "structure, P", P, gen_ideal, almost_residual_prime),
    claim!("C-3.T11.1-2", "Theorem 11", "element condition (1) ⇔ (P:⟨x⟩+⟨y⟩) = P ∪ (T(P):⟨x⟩+⟨y⟩)", "structure, P", P, gen_ideal, elementwise_eq::<true, 2>),
    claim!("C-3.T11.1-3", "Theorem 11", "element condition (1) ⇔ (P:⟨x⟩+⟨y⟩) ∈ {P, (T(P):⟨x⟩+⟨y⟩)}", "structure, P", P, gen_ideal, elementwise_eq::<true, 3>),
    claim!("C-3.T11.1-4", "Theorem 11", "element condition (1) ⇔ A(P)", "structure, P", P, gen_ideal, elementwise_eq::<true, 4>),
    claim!("C-3.T12.1-2", "Theorem 12", "A(P) ⇔ (P ⊊ I, J ⇒ IJ ⊆ T(P) ∨ IJ ⊄ P)", "structure, P", P, gen_ideal, idealwise_eq::<true, 2>),
    claim!("C-3.T12.1-3", "Theorem 12", "A(P) ⇔ (I, J ⊄ P ⇒ IJ ⊆ T(P) ∨ IJ ⊄ P)", "structure, P", P, gen_ideal, idealwise_eq::<true, 3>),
    claim!("C-3.P7", "Proposition 7", "intersection of a chain of almost primes is almost prime", "structure, chain", &[], gen_chain::<true>, chain_intersection::<true>),
    claim!("C-3.P8", "Proposition 8", "P an intersection of almost primes ∧ I² ⊆ P ∧ I² ⊄ T(P) ⇒ I ⊆ P", "structure, P, I", PI, gen_intersection::<true>, intersection_square::<true>),
    claim!("C-3.L4", "Lemma 4", "φ surjective, P, I, J ideals of the target: IJ ⊄ P ⇒ φ⁻¹(I) φ⁻¹(J) ⊄ φ⁻¹(P)", "homomorphism, P, I, J", PIJ, gen_hom_target_triple, hom_preimage_not_inside),
    claim!("C-3.T13", "Theorem 13", "A(P) ∧ ker φ ⊆ P ⇒ A(φ(P))", "homomorphism, P", P, gen_hom_source, hom_image::<true>),
    claim!("C-3.T14", "Theorem 14", "I ⊆ P ∧ A(P) ⇒ A(π(P)) in N/I", "structure, I, P", &["I", "P"], gen_nested, quotient_image::<true>),
    claim!("C-3.L5", "Lemma 5", "A(P) ∧ ĪJ̄ = {0} ∧ J̄ ≠ {0} in N/P ⇒ I ⊆ P ∨ PJ ⊆ T(P)", "structure, P, Ī, J̄", &["P", "I/P", "J/P"], gen_lift::<true>, lifted_dichotomy::<true>),
    claim!("C-3.T15", "Theorem 15", "A(P) ∧ I² ⊆ P ⇒ I² ⊆ T(P)", "structure, P, I", PI, gen_ideal_pair, square_zero_forces::<true>),
    claim!("C-3.T16", "Theorem 16", "unique maximal M with MM = T(M), T(M) ⊆ P ⇒ (A(P) ⇔ T(M) = T(P))", "structure, P", P, gen_ideal, unique_maximal),
    claim!("C-3.T17", "Theorem 17", "A(P) ⇔ A(P × M)", "pair, P", P, gen_product_left, product_lift::<true>),
    claim!("C-3.C3", "Corollary 3", "factors factor into almost primes ⇒ every ideal of N × M does", "pair, K", &["K"], gen_product_ideal, product_factorization::<true>),
];
