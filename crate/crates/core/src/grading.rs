//! Gradings of a near-ring by a finite monoid.
//!
//! A grading assigns to each monoid element `σ` a normal additive subgroup
//! `N_σ` such that every element is uniquely a sum of components and
//! `N_σ N_τ ⊆ N_{στ}`. Components are summed in ascending monoid-index order;
//! with non-abelian addition that order matters, so it is fixed here.

use thiserror::Error;

use crate::algebra::{FiniteMonoid, FiniteNearRing};
use crate::subset::SubSet;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GradingError {
    #[error("expected one part per monoid element ({expected}), got {got}")]
    PartCount { expected: usize, got: usize },
    #[error("part {0} is not a normal additive subgroup")]
    NotNormalSubgroup(usize),
    #[error("not an internal direct sum: element {element} has {decompositions} decompositions")]
    NotDirectSum { element: usize, decompositions: usize },
    #[error("N_{sigma} N_{tau} is not contained in N_(sigma tau): {a} * {b}")]
    NotMultiplicative {
        sigma: usize,
        tau: usize,
        a: usize,
        b: usize,
    },
    #[error("order {order} exceeds the configured bound {bound}")]
    BoundExceeded { order: usize, bound: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Grading {
    monoid: FiniteMonoid,
    parts: Vec<SubSet>,
}

impl Grading {
    pub fn monoid(&self) -> &FiniteMonoid {
        &self.monoid
    }

    pub fn parts(&self) -> &[SubSet] {
        &self.parts
    }

    pub fn part(&self, sigma: usize) -> SubSet {
        self.parts[sigma]
    }
}

/// A near-ring together with a validated grading and its decomposition table.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GradedNearRing {
    ring: FiniteNearRing,
    grading: Grading,
    /// `components[x * k + σ]` is the degree-σ component of `x`.
    components: Vec<u8>,
}

impl GradedNearRing {
    /// Validates `parts` as a grading of `ring` by `monoid`.
    ///
    /// Checks run in order: normality of each part, unique decomposition (by
    /// enumerating component tuples), multiplicativity.
    pub fn new(ring: FiniteNearRing, monoid: FiniteMonoid, parts: Vec<SubSet>) -> Result<Self, GradingError> {
        let k = monoid.order();
        if parts.len() != k {
            return Err(GradingError::PartCount {
                expected: k,
                got: parts.len(),
            });
        }
        for (sigma, &part) in parts.iter().enumerate() {
            if !matches!(ring.is_normal_subgroup(part), Ok(true)) {
                return Err(GradingError::NotNormalSubgroup(sigma));
            }
        }
        let components = decompose(&ring, &parts)?;
        for sigma in 0..k {
            for tau in 0..k {
                let target = parts[monoid.op(sigma, tau)];
                for a in parts[sigma] {
                    for b in parts[tau] {
                        if !target.contains(ring.mul(a, b)) {
                            return Err(GradingError::NotMultiplicative { sigma, tau, a, b });
                        }
                    }
                }
            }
        }
        Ok(GradedNearRing {
            ring,
            grading: Grading { monoid, parts },
            components,
        })
    }

    /// Trivial grading over `monoid`: everything in degree `identity`.
    pub fn trivial(ring: FiniteNearRing, monoid: FiniteMonoid) -> Result<Self, GradingError> {
        let mut parts = vec![ring.zero_set(); monoid.order()];
        parts[monoid.identity()] = ring.elements();
        GradedNearRing::new(ring, monoid, parts)
    }

    #[inline]
    pub fn ring(&self) -> &FiniteNearRing {
        &self.ring
    }

    #[inline]
    pub fn grading(&self) -> &Grading {
        &self.grading
    }

    #[inline]
    pub fn monoid(&self) -> &FiniteMonoid {
        &self.grading.monoid
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.ring.order()
    }

    /// Degree-`sigma` component of `x`.
    #[inline]
    pub fn homogeneous_component(&self, x: usize, sigma: usize) -> usize {
        let k = self.grading.parts.len();
        self.components[x * k + sigma] as usize
    }

    pub fn components_of(&self, x: usize) -> Vec<usize> {
        let k = self.grading.parts.len();
        self.components[x * k..(x + 1) * k].iter().map(|&c| c as usize).collect()
    }

    /// True if every homogeneous component of every member of `s` lies in `s`.
    pub fn is_graded_subset(&self, s: SubSet) -> bool {
        let k = self.grading.parts.len();
        s.iter()
            .all(|x| (0..k).all(|sigma| s.contains(self.homogeneous_component(x, sigma))))
    }

    /// True if the grading puts everything in the identity degree.
    pub fn is_trivially_graded(&self) -> bool {
        self.grading.parts[self.monoid().identity()] == self.ring.elements()
    }

    /// Same structure with elements renamed by `perm`.
    pub fn relabel(&self, perm: &[usize]) -> GradedNearRing {
        let ring = self.ring.relabel(perm);
        let parts = self
            .grading
            .parts
            .iter()
            .map(|&p| FiniteNearRing::relabel_set(p, perm))
            .collect();
        GradedNearRing::new(ring, self.grading.monoid.clone(), parts)
            .expect("relabeling preserves a valid grading")
    }
}

/// Enumerates every component tuple, failing on the first element hit twice
/// or, after a full pass, on the smallest element never hit.
fn decompose(ring: &FiniteNearRing, parts: &[SubSet]) -> Result<Vec<u8>, GradingError> {
    let n = ring.order();
    let k = parts.len();
    let members: Vec<Vec<usize>> = parts.iter().map(|p| p.to_vec()).collect();
    let mut table = vec![0u8; n * k];
    let mut seen = SubSet::EMPTY;
    let mut tuple = vec![0usize; k];

    fn walk(
        ring: &FiniteNearRing,
        members: &[Vec<usize>],
        depth: usize,
        partial: usize,
        tuple: &mut [usize],
        seen: &mut SubSet,
        table: &mut [u8],
    ) -> Result<(), GradingError> {
        let k = members.len();
        if depth == k {
            if !seen.insert(partial) {
                return Err(GradingError::NotDirectSum {
                    element: partial,
                    decompositions: 2,
                });
            }
            for (sigma, &c) in tuple.iter().enumerate() {
                table[partial * k + sigma] = c as u8;
            }
            return Ok(());
        }
        for &x in &members[depth] {
            tuple[depth] = x;
            walk(ring, members, depth + 1, ring.add(partial, x), tuple, seen, table)?;
        }
        Ok(())
    }

    walk(ring, &members, 0, ring.zero(), &mut tuple, &mut seen, &mut table)?;
    if let Some(element) = ring.elements().difference(seen).min() {
        return Err(GradingError::NotDirectSum {
            element,
            decompositions: 0,
        });
    }
    Ok(table)
}

/// Every valid grading of `ring` by `monoid`, in lexicographic order of the
/// assigned subgroups (by monoid index, then subgroup bitmask).
pub fn enumerate_gradings(
    ring: &FiniteNearRing,
    monoid: &FiniteMonoid,
    max_order: usize,
) -> Result<Vec<GradedNearRing>, GradingError> {
    if ring.order() > max_order {
        return Err(GradingError::BoundExceeded {
            order: ring.order(),
            bound: max_order,
        });
    }
    let normals = ring.normal_subgroups();
    let mut found = Vec::new();
    let mut assignment = Vec::with_capacity(monoid.order());

    fn assign(
        ring: &FiniteNearRing,
        monoid: &FiniteMonoid,
        normals: &[SubSet],
        size: usize,
        assignment: &mut Vec<SubSet>,
        found: &mut Vec<GradedNearRing>,
    ) {
        if assignment.len() == monoid.order() {
            if size == ring.order() {
                if let Ok(g) = GradedNearRing::new(ring.clone(), monoid.clone(), assignment.clone()) {
                    found.push(g);
                }
            }
            return;
        }
        for &s in normals {
            let next = size * s.len();
            if next > ring.order() || !ring.order().is_multiple_of(next) {
                continue;
            }
            assignment.push(s);
            assign(ring, monoid, normals, next, assignment, found);
            assignment.pop();
        }
    }

    assign(ring, monoid, &normals, 1, &mut assignment, &mut found);
    Ok(found)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cyclic(n: usize) -> FiniteNearRing {
        let add: Vec<Vec<usize>> = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
        let mul: Vec<Vec<usize>> = (0..n).map(|a| (0..n).map(|b| (a * b) % n).collect()).collect();
        FiniteNearRing::new(&add, &mul, 0).unwrap()
    }

    fn set(xs: &[usize]) -> SubSet {
        xs.iter().copied().collect()
    }

    #[test]
    fn example_one_grading() {
        let g = GradedNearRing::new(
            cyclic(12),
            FiniteMonoid::two_element_idempotent(),
            vec![SubSet::full(12), set(&[0])],
        )
        .unwrap();
        assert_eq!(g.homogeneous_component(7, 0), 7);
        assert_eq!(g.homogeneous_component(7, 1), 0);
        assert!(g.is_trivially_graded());
    }

    #[test]
    fn trivial_monoid_grading() {
        let g = GradedNearRing::trivial(cyclic(12), FiniteMonoid::trivial()).unwrap();
        assert_eq!(g.components_of(5), vec![5]);
    }

    #[test]
    fn non_direct_sum_reports_smallest_uncovered_element() {
        // {0,6} + {0,4,8} = {0,2,4,6,8,10}; 1 is the smallest element missed.
        let err = GradedNearRing::new(
            cyclic(12),
            FiniteMonoid::two_element_idempotent(),
            vec![set(&[0, 6]), set(&[0, 4, 8])],
        )
        .unwrap_err();
        assert_eq!(
            err,
            GradingError::NotDirectSum {
                element: 1,
                decompositions: 0
            }
        );
    }

    #[test]
    fn overlapping_parts_report_collision() {
        let err = GradedNearRing::new(
            cyclic(4),
            FiniteMonoid::two_element_idempotent(),
            vec![SubSet::full(4), set(&[0, 2])],
        )
        .unwrap_err();
        assert!(matches!(err, GradingError::NotDirectSum { decompositions: 2, .. }));
    }

    #[test]
    fn z6_split_grading() {
        let g = GradedNearRing::new(
            cyclic(6),
            FiniteMonoid::two_element_idempotent(),
            vec![set(&[0, 2, 4]), set(&[0, 3])],
        )
        .unwrap();
        assert_eq!(g.homogeneous_component(5, 1), 3);
        assert_eq!(g.homogeneous_component(5, 0), 2);
        assert!(g.is_graded_subset(set(&[0, 3])));
        assert!(g.is_graded_subset(SubSet::full(6)));
        assert!(!g.is_graded_subset(set(&[0, 1, 5])));
    }

    #[test]
    fn z6_split_fails_over_the_group_z2() {
        // 3*3 = 3 must land in the identity degree {0,2,4}.
        let err = GradedNearRing::new(cyclic(6), FiniteMonoid::cyclic_group(2), vec![set(&[0, 2, 4]), set(&[0, 3])])
            .unwrap_err();
        assert_eq!(
            err,
            GradingError::NotMultiplicative {
                sigma: 1,
                tau: 1,
                a: 3,
                b: 3
            }
        );
    }

    #[test]
    fn part_count_mismatch() {
        let err = GradedNearRing::new(cyclic(2), FiniteMonoid::trivial(), vec![]).unwrap_err();
        assert_eq!(err, GradingError::PartCount { expected: 1, got: 0 });
    }

    #[test]
    fn enumeration_bound() {
        let err = enumerate_gradings(&cyclic(12), &FiniteMonoid::trivial(), 8).unwrap_err();
        assert_eq!(err, GradingError::BoundExceeded { order: 12, bound: 8 });
    }

    #[test]
    fn trivial_monoid_has_one_grading() {
        let gs = enumerate_gradings(&cyclic(12), &FiniteMonoid::trivial(), 64).unwrap();
        assert_eq!(gs.len(), 1);
    }
}
