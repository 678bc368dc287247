//! Ideals of a graded near-ring: closure, arithmetic and enumeration.
//!
//! An ideal is a normal additive subgroup `I` with `n(m+i) - nm ∈ I` and
//! `i·n ∈ I` for all `n, m ∈ N`, `i ∈ I` (the two-sided ideal of a right
//! near-ring). The product `IJ` is the additive subgroup generated by the
//! elementwise products `i·j`; [`ProductMode::Ideal`] closes it to an ideal
//! instead.

use std::collections::HashSet;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::algebra::{join_closure, FiniteNearRing};
use crate::grading::GradedNearRing;
use crate::subset::SubSet;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IdealError {
    #[error("{0} is not an ideal")]
    NotAnIdealInput(SubSet),
    #[error("ideal sum routes disagree for {i} + {j}: ideal closure {closure}, subgroup join {join}")]
    SumRoutesDiverge {
        i: SubSet,
        j: SubSet,
        closure: SubSet,
        join: SubSet,
    },
    #[error("order {order} exceeds the configured bound {bound}")]
    BoundExceeded { order: usize, bound: usize },
}

/// How `IJ` is formed from the elementwise products.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ProductMode {
    /// Additive subgroup generated by `{i·j}`.
    #[default]
    Subgroup,
    /// Ideal generated by `{i·j}`.
    Ideal,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct IdealFlags {
    pub is_subgroup: bool,
    pub is_normal: bool,
    pub is_ideal: bool,
    pub is_graded: bool,
}

/// A subset together with its computed structural flags.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct IdealSet {
    pub bits: SubSet,
    pub flags: IdealFlags,
}

impl IdealSet {
    pub fn analyze(gnr: &GradedNearRing, bits: SubSet) -> Self {
        let ring = gnr.ring();
        let is_subgroup = ring.is_subgroup(bits);
        let is_normal = is_subgroup && ring.conjugation_closed(bits);
        let is_ideal = is_normal && absorbs(ring, bits);
        IdealSet {
            bits,
            flags: IdealFlags {
                is_subgroup,
                is_normal,
                is_ideal,
                is_graded: gnr.is_graded_subset(bits),
            },
        }
    }

    pub fn is_graded_ideal(&self) -> bool {
        self.flags.is_ideal && self.flags.is_graded
    }
}

/// Checks the two multiplicative ideal conditions on a normal subgroup.
fn absorbs(ring: &FiniteNearRing, s: SubSet) -> bool {
    let n = ring.order();
    for i in s {
        for x in 0..n {
            if !s.contains(ring.mul(i, x)) {
                return false;
            }
        }
        for x in 0..n {
            for m in 0..n {
                let d = ring.sub(ring.mul(x, ring.add(m, i)), ring.mul(x, m));
                if !s.contains(d) {
                    return false;
                }
            }
        }
    }
    true
}

pub fn is_ideal(ring: &FiniteNearRing, s: SubSet) -> bool {
    ring.is_subgroup(s) && ring.conjugation_closed(s) && absorbs(ring, s)
}

pub fn is_graded_ideal(gnr: &GradedNearRing, s: SubSet) -> bool {
    is_ideal(gnr.ring(), s) && gnr.is_graded_subset(s)
}

/// Smallest ideal containing `s`, by worklist fixpoint.
pub fn ideal_closure_bits(ring: &FiniteNearRing, s: SubSet) -> SubSet {
    let n = ring.order();
    let mut set = s.union(ring.zero_set());
    let mut queue = set.to_vec();
    let push = |set: &mut SubSet, queue: &mut Vec<usize>, z: usize| {
        if set.insert(z) {
            queue.push(z);
        }
    };
    while let Some(x) = queue.pop() {
        push(&mut set, &mut queue, ring.neg(x));
        for y in set {
            push(&mut set, &mut queue, ring.add(x, y));
            push(&mut set, &mut queue, ring.add(y, x));
        }
        for m in 0..n {
            push(&mut set, &mut queue, ring.conjugate(m, x));
            push(&mut set, &mut queue, ring.mul(x, m));
        }
        for a in 0..n {
            for m in 0..n {
                let d = ring.sub(ring.mul(a, ring.add(m, x)), ring.mul(a, m));
                push(&mut set, &mut queue, d);
            }
        }
    }
    set
}

pub fn ideal_closure(gnr: &GradedNearRing, s: SubSet) -> IdealSet {
    IdealSet::analyze(gnr, ideal_closure_bits(gnr.ring(), s))
}

/// `⟨x⟩` for every element `x`, indexed by element.
pub fn principal_ideals(ring: &FiniteNearRing) -> Vec<SubSet> {
    (0..ring.order())
        .map(|x| ideal_closure_bits(ring, SubSet::singleton(x)))
        .collect()
}

/// `I + J`, computed both as the ideal generated by `I ∪ J` and as the
/// subgroup generated by `I ∪ J`; the two must agree for ideals.
pub fn ideal_sum(gnr: &GradedNearRing, i: SubSet, j: SubSet) -> Result<IdealSet, IdealError> {
    let ring = gnr.ring();
    for s in [i, j] {
        if !is_ideal(ring, s) {
            return Err(IdealError::NotAnIdealInput(s));
        }
    }
    let closure = ideal_closure_bits(ring, i.union(j));
    let join = ring.subgroup_closure(i.union(j));
    if closure != join {
        return Err(IdealError::SumRoutesDiverge { i, j, closure, join });
    }
    Ok(IdealSet::analyze(gnr, closure))
}

/// The set `{i·j : i ∈ I, j ∈ J}` of raw products.
pub fn raw_products(ring: &FiniteNearRing, i: SubSet, j: SubSet) -> SubSet {
    let mut out = SubSet::EMPTY;
    for a in i {
        for b in j {
            out.insert(ring.mul(a, b));
        }
    }
    out
}

/// `IJ` under the given product mode.
pub fn ideal_product(ring: &FiniteNearRing, i: SubSet, j: SubSet, mode: ProductMode) -> SubSet {
    let raw = raw_products(ring, i, j);
    match mode {
        ProductMode::Subgroup => ring.subgroup_closure(raw),
        ProductMode::Ideal => ideal_closure_bits(ring, raw),
    }
}

/// `P² ∩ N`. The intersection never removes anything; it is kept so the value
/// matches the notation it stands for.
pub fn ideal_square_cap(ring: &FiniteNearRing, p: SubSet, mode: ProductMode) -> SubSet {
    ideal_product(ring, p, p, mode).intersection(ring.elements())
}

/// `x·S = {x·s : s ∈ S}`.
pub fn left_multiple(ring: &FiniteNearRing, x: usize, s: SubSet) -> SubSet {
    s.iter().map(|y| ring.mul(x, y)).collect()
}

/// `(A : B) = {n : n·b ∈ A for all b ∈ B}`, computed literally.
pub fn residual(ring: &FiniteNearRing, a: SubSet, b: SubSet) -> SubSet {
    (0..ring.order())
        .filter(|&n| left_multiple(ring, n, b).is_subset(a))
        .collect()
}

/// All ideals, or all graded ideals, ascending by bitmask.
///
/// Every ideal is the sum of the principal ideals of its members, so closing
/// `{⟨x⟩} ∪ {{0}}` under sums reaches all of them. Sums of ideals are taken
/// as subgroup joins, which coincide with the ideal sum (see [`ideal_sum`]).
pub fn enumerate_ideals(gnr: &GradedNearRing, graded_only: bool, max_order: usize) -> Result<Vec<IdealSet>, IdealError> {
    let all = enumerate_ideal_bits(gnr.ring(), max_order)?;
    Ok(all
        .into_iter()
        .map(|s| IdealSet::analyze(gnr, s))
        .filter(|s| !graded_only || s.flags.is_graded)
        .collect())
}

pub(crate) fn enumerate_ideal_bits(ring: &FiniteNearRing, max_order: usize) -> Result<Vec<SubSet>, IdealError> {
    if ring.order() > max_order {
        return Err(IdealError::BoundExceeded {
            order: ring.order(),
            bound: max_order,
        });
    }
    let mut seeds: Vec<SubSet> = principal_ideals(ring);
    seeds.push(ring.zero_set());
    let mut seen = HashSet::new();
    seeds.retain(|s| seen.insert(*s));
    seeds.sort();
    Ok(join_closure(seeds, |a, b| ring.subgroup_closure(a.union(b))))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::FiniteMonoid;

    fn cyclic(n: usize) -> GradedNearRing {
        let add: Vec<Vec<usize>> = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
        let mul: Vec<Vec<usize>> = (0..n).map(|a| (0..n).map(|b| (a * b) % n).collect()).collect();
        let ring = FiniteNearRing::new(&add, &mul, 0).unwrap();
        GradedNearRing::trivial(ring, FiniteMonoid::two_element_idempotent()).unwrap()
    }

    fn set(xs: &[usize]) -> SubSet {
        xs.iter().copied().collect()
    }

    fn multiples(n: usize, d: usize) -> SubSet {
        (0..n).step_by(d).collect()
    }

    #[test]
    fn principal_ideal_of_four_in_z12() {
        let g = cyclic(12);
        let i = ideal_closure(&g, set(&[4]));
        assert_eq!(i.bits, set(&[0, 4, 8]));
        assert!(i.is_graded_ideal());
        assert_eq!(ideal_closure(&g, set(&[0])).bits, set(&[0]));
    }

    #[test]
    fn sums() {
        let g = cyclic(12);
        let s = ideal_sum(&g, set(&[0, 6]), set(&[0, 4, 8])).unwrap();
        assert_eq!(s.bits, multiples(12, 2));
        let i = multiples(12, 3);
        assert_eq!(ideal_sum(&g, i, set(&[0])).unwrap().bits, i);
        let g18 = cyclic(18);
        let s = ideal_sum(&g18, set(&[0, 9]), set(&[0, 6, 12])).unwrap();
        assert_eq!(s.bits, multiples(18, 3));
        assert_eq!(
            ideal_sum(&g, set(&[0, 5]), set(&[0])),
            Err(IdealError::NotAnIdealInput(set(&[0, 5])))
        );
    }

    #[test]
    fn products() {
        let r = cyclic(12);
        let r = r.ring();
        let p = ideal_product(r, multiples(12, 2), multiples(12, 3), ProductMode::Subgroup);
        assert_eq!(p, set(&[0, 6]));
        assert_eq!(
            ideal_product(r, set(&[0]), multiples(12, 3), ProductMode::Subgroup),
            set(&[0])
        );
        let g18 = cyclic(18);
        let p = ideal_product(g18.ring(), multiples(18, 3), multiples(18, 3), ProductMode::Subgroup);
        assert_eq!(p, set(&[0, 9]));
    }

    #[test]
    fn square_caps() {
        let g = cyclic(12);
        let r = g.ring();
        assert_eq!(ideal_square_cap(r, set(&[0, 4, 8]), ProductMode::Subgroup), set(&[0, 4, 8]));
        assert_eq!(ideal_square_cap(r, set(&[0, 6]), ProductMode::Subgroup), set(&[0]));
        let g16 = cyclic(16);
        assert_eq!(
            ideal_square_cap(g16.ring(), multiples(16, 2), ProductMode::Subgroup),
            multiples(16, 4)
        );
    }

    #[test]
    fn residuals() {
        let g = cyclic(12);
        let r = g.ring();
        assert_eq!(residual(r, set(&[0]), SubSet::full(12)), set(&[0]));
        assert_eq!(residual(r, set(&[0, 6]), set(&[0])), SubSet::full(12));
        assert_eq!(residual(r, set(&[0, 6]), set(&[0, 4, 8])), set(&[0, 3, 6, 9]));
    }

    #[test]
    fn z12_ideals() {
        let ideals: Vec<SubSet> = enumerate_ideals(&cyclic(12), true, 64)
            .unwrap()
            .into_iter()
            .map(|i| i.bits)
            .collect();
        let mut expected = vec![
            set(&[0]),
            set(&[0, 6]),
            set(&[0, 4, 8]),
            multiples(12, 3),
            multiples(12, 2),
            SubSet::full(12),
        ];
        expected.sort();
        assert_eq!(ideals, expected);
    }

    #[test]
    fn z8_and_zero_ring_ideals() {
        let bits = |g: &GradedNearRing| -> Vec<SubSet> {
            enumerate_ideals(g, false, 64).unwrap().into_iter().map(|i| i.bits).collect()
        };
        assert_eq!(
            bits(&cyclic(8)),
            vec![set(&[0]), set(&[0, 4]), multiples(8, 2), SubSet::full(8)]
        );
        assert_eq!(bits(&cyclic(1)), vec![set(&[0])]);
    }

    #[test]
    fn bound_is_enforced() {
        assert_eq!(
            enumerate_ideals(&cyclic(12), false, 10),
            Err(IdealError::BoundExceeded { order: 12, bound: 10 })
        );
    }
}
