//! Finite monoids and finite (right) near-rings given by Cayley tables.
//!
//! Elements are the indices `0..order`. Validation runs its checks in a fixed
//! order so the reported witness is deterministic:
//!
//! * monoid: shape, identity, associativity;
//! * near-ring: shape, additive group (identity, associativity, inverses),
//!   multiplicative associativity, right distributivity `(a+b)y = ay+by`.
//!
//! Left distributivity is never assumed.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::subset::{SubSet, MAX_ORDER};

/// Which group axiom the additive table violated.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum GroupFailure {
    /// `zero + x != x` or `x + zero != x`.
    Identity { element: usize },
    /// `(a+b)+c != a+(b+c)`.
    Associativity { a: usize, b: usize, c: usize },
    /// No two-sided inverse exists for the element.
    Inverse { element: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("structure has no elements")]
    Empty,
    #[error("order {0} exceeds the supported maximum of {MAX_ORDER}")]
    OrderTooLarge(usize),
    #[error("table row {row} has {len} entries, expected {order}")]
    NotSquare { row: usize, len: usize, order: usize },
    #[error("table entry {value} at ({row}, {col}) is out of range for order {order}")]
    EntryOutOfRange {
        row: usize,
        col: usize,
        value: usize,
        order: usize,
    },
    #[error("addition table has order {add}, multiplication table has order {mul}")]
    OrderMismatch { add: usize, mul: usize },
    #[error("element {0} is out of range")]
    ElementOutOfRange(usize),
    #[error("operation is not associative: ({0}*{1})*{2} != {0}*({1}*{2})")]
    NotAssociative(usize, usize, usize),
    #[error("{identity} is not a two-sided identity (fails on {element})")]
    BadIdentity { identity: usize, element: usize },
    #[error("addition is not a group: {0:?}")]
    AddNotGroup(GroupFailure),
    #[error("multiplication is not associative: ({0}{1}){2} != {0}({1}{2})")]
    MulNotAssociative(usize, usize, usize),
    #[error("right distributivity fails: ({0}+{1}){2} != {0}{2}+{1}{2}")]
    NotRightDistributive(usize, usize, usize),
    #[error("{0} is not an additive subgroup")]
    NotASubgroup(SubSet),
}

fn check_table(table: &[Vec<usize>]) -> Result<usize, AlgebraError> {
    let order = table.len();
    if order == 0 {
        return Err(AlgebraError::Empty);
    }
    if order > MAX_ORDER {
        return Err(AlgebraError::OrderTooLarge(order));
    }
    for (row, entries) in table.iter().enumerate() {
        if entries.len() != order {
            return Err(AlgebraError::NotSquare {
                row,
                len: entries.len(),
                order,
            });
        }
        for (col, &value) in entries.iter().enumerate() {
            if value >= order {
                return Err(AlgebraError::EntryOutOfRange {
                    row,
                    col,
                    value,
                    order,
                });
            }
        }
    }
    Ok(order)
}

fn flatten(table: &[Vec<usize>]) -> Vec<u8> {
    table.iter().flatten().map(|&v| v as u8).collect()
}

fn unflatten(order: usize, flat: &[u8]) -> Vec<Vec<usize>> {
    flat.chunks(order)
        .map(|row| row.iter().map(|&v| v as usize).collect())
        .collect()
}

fn first_associativity_failure(order: usize, op: impl Fn(usize, usize) -> usize) -> Option<(usize, usize, usize)> {
    for a in 0..order {
        for b in 0..order {
            let ab = op(a, b);
            for c in 0..order {
                if op(ab, c) != op(a, op(b, c)) {
                    return Some((a, b, c));
                }
            }
        }
    }
    None
}

/// A finite monoid, used as the grading index set.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FiniteMonoid {
    order: usize,
    table: Vec<u8>,
    identity: usize,
}

impl FiniteMonoid {
    /// Validates a monoid table. Checks the identity before associativity.
    pub fn new(table: &[Vec<usize>], identity: usize) -> Result<Self, AlgebraError> {
        let order = check_table(table)?;
        if identity >= order {
            return Err(AlgebraError::ElementOutOfRange(identity));
        }
        let m = FiniteMonoid {
            order,
            table: flatten(table),
            identity,
        };
        if let Some(element) = (0..order).find(|&x| m.op(identity, x) != x || m.op(x, identity) != x) {
            return Err(AlgebraError::BadIdentity { identity, element });
        }
        if let Some((a, b, c)) = first_associativity_failure(order, |x, y| m.op(x, y)) {
            return Err(AlgebraError::NotAssociative(a, b, c));
        }
        Ok(m)
    }

    /// The one-element monoid.
    pub fn trivial() -> Self {
        FiniteMonoid {
            order: 1,
            table: vec![0],
            identity: 0,
        }
    }

    /// `{0, 1}` with `1+1 = 1`: the two-element idempotent monoid used by
    /// every worked example over `Z_n`.
    pub fn two_element_idempotent() -> Self {
        FiniteMonoid {
            order: 2,
            table: vec![0, 1, 1, 1],
            identity: 0,
        }
    }

    /// The cyclic group `Z_n` viewed as a monoid.
    pub fn cyclic_group(n: usize) -> Self {
        assert!((1..=MAX_ORDER).contains(&n));
        let table = (0..n)
            .flat_map(|a| (0..n).map(move |b| ((a + b) % n) as u8))
            .collect();
        FiniteMonoid {
            order: n,
            table,
            identity: 0,
        }
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn identity(&self) -> usize {
        self.identity
    }

    #[inline]
    pub fn op(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order + b] as usize
    }

    pub fn table(&self) -> Vec<Vec<usize>> {
        unflatten(self.order, &self.table)
    }
}

/// A finite right near-ring: `(N,+)` a group, `(N,·)` a semigroup and
/// `(a+b)y = ay + by`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FiniteNearRing {
    order: usize,
    add: Vec<u8>,
    mul: Vec<u8>,
    neg: Vec<u8>,
    zero: usize,
}

impl FiniteNearRing {
    pub fn new(add: &[Vec<usize>], mul: &[Vec<usize>], zero: usize) -> Result<Self, AlgebraError> {
        let order = check_table(add)?;
        let mul_order = check_table(mul)?;
        if order != mul_order {
            return Err(AlgebraError::OrderMismatch { add: order, mul: mul_order });
        }
        if zero >= order {
            return Err(AlgebraError::ElementOutOfRange(zero));
        }
        Self::from_flat(order, flatten(add), flatten(mul), zero)
    }

    /// Validates tables already in flat row-major form. Entries must be in range.
    pub(crate) fn from_flat(order: usize, add: Vec<u8>, mul: Vec<u8>, zero: usize) -> Result<Self, AlgebraError> {
        debug_assert_eq!(add.len(), order * order);
        debug_assert_eq!(mul.len(), order * order);
        let a = |x: usize, y: usize| add[x * order + y] as usize;

        if let Some(element) = (0..order).find(|&x| a(zero, x) != x || a(x, zero) != x) {
            return Err(AlgebraError::AddNotGroup(GroupFailure::Identity { element }));
        }
        if let Some((x, y, z)) = first_associativity_failure(order, a) {
            return Err(AlgebraError::AddNotGroup(GroupFailure::Associativity { a: x, b: y, c: z }));
        }
        let mut neg = Vec::with_capacity(order);
        for x in 0..order {
            match (0..order).find(|&y| a(x, y) == zero && a(y, x) == zero) {
                Some(y) => neg.push(y as u8),
                None => return Err(AlgebraError::AddNotGroup(GroupFailure::Inverse { element: x })),
            }
        }

        let m = |x: usize, y: usize| mul[x * order + y] as usize;
        if let Some((x, y, z)) = first_associativity_failure(order, m) {
            return Err(AlgebraError::MulNotAssociative(x, y, z));
        }
        for x in 0..order {
            for y in 0..order {
                let s = a(x, y);
                for z in 0..order {
                    if m(s, z) != a(m(x, z), m(y, z)) {
                        return Err(AlgebraError::NotRightDistributive(x, y, z));
                    }
                }
            }
        }
        Ok(FiniteNearRing {
            order,
            add,
            mul,
            neg,
            zero,
        })
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn zero(&self) -> usize {
        self.zero
    }

    #[inline]
    pub fn add(&self, a: usize, b: usize) -> usize {
        self.add[a * self.order + b] as usize
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.order + b] as usize
    }

    #[inline]
    pub fn neg(&self, a: usize) -> usize {
        self.neg[a] as usize
    }

    /// `a - b`, i.e. `a + (-b)`.
    #[inline]
    pub fn sub(&self, a: usize, b: usize) -> usize {
        self.add(a, self.neg(b))
    }

    /// `n + s - n`.
    #[inline]
    pub fn conjugate(&self, n: usize, s: usize) -> usize {
        self.sub(self.add(n, s), n)
    }

    pub fn add_table(&self) -> Vec<Vec<usize>> {
        unflatten(self.order, &self.add)
    }

    pub fn mul_table(&self) -> Vec<Vec<usize>> {
        unflatten(self.order, &self.mul)
    }

    pub fn elements(&self) -> SubSet {
        SubSet::full(self.order)
    }

    pub fn zero_set(&self) -> SubSet {
        SubSet::singleton(self.zero)
    }

    pub fn is_add_commutative(&self) -> bool {
        (0..self.order).all(|a| (0..self.order).all(|b| self.add(a, b) == self.add(b, a)))
    }

    /// First triple with `a(b+c) != ab + ac`, if any.
    pub fn left_distributivity_failure(&self) -> Option<(usize, usize, usize)> {
        for a in 0..self.order {
            for b in 0..self.order {
                for c in 0..self.order {
                    if self.mul(a, self.add(b, c)) != self.add(self.mul(a, b), self.mul(a, c)) {
                        return Some((a, b, c));
                    }
                }
            }
        }
        None
    }

    /// Smallest additive subgroup containing `s`.
    pub fn subgroup_closure(&self, s: SubSet) -> SubSet {
        let mut set = s.union(self.zero_set());
        let mut queue: Vec<usize> = set.to_vec();
        while let Some(x) = queue.pop() {
            let nx = self.neg(x);
            if set.insert(nx) {
                queue.push(nx);
            }
            for y in set {
                for z in [self.add(x, y), self.add(y, x)] {
                    if set.insert(z) {
                        queue.push(z);
                    }
                }
            }
        }
        set
    }

    pub fn is_subgroup(&self, s: SubSet) -> bool {
        if !s.contains(self.zero) || !s.is_subset(self.elements()) {
            return false;
        }
        s.iter()
            .all(|x| s.contains(self.neg(x)) && s.iter().all(|y| s.contains(self.add(x, y))))
    }

    /// Conjugation test `n + s - n ∈ S`. Errors if `s` is not a subgroup.
    pub fn is_normal_subgroup(&self, s: SubSet) -> Result<bool, AlgebraError> {
        if !self.is_subgroup(s) {
            return Err(AlgebraError::NotASubgroup(s));
        }
        Ok(self.conjugation_closed(s))
    }

    pub(crate) fn conjugation_closed(&self, s: SubSet) -> bool {
        (0..self.order).all(|n| s.iter().all(|x| s.contains(self.conjugate(n, x))))
    }

    /// Every additive subgroup, ascending by bitmask. Each subgroup is a join
    /// of cyclic subgroups, so joining to a fixpoint is complete.
    pub fn subgroups(&self) -> Vec<SubSet> {
        let cyclic: Vec<SubSet> = {
            let mut v: Vec<SubSet> = (0..self.order)
                .map(|x| self.subgroup_closure(SubSet::singleton(x)))
                .collect();
            v.sort();
            v.dedup();
            v
        };
        join_closure(cyclic, |a, b| self.subgroup_closure(a.union(b)))
    }

    pub fn normal_subgroups(&self) -> Vec<SubSet> {
        self.subgroups()
            .into_iter()
            .filter(|&s| self.conjugation_closed(s))
            .collect()
    }

    /// The same structure with element `x` renamed to `perm[x]`.
    pub fn relabel(&self, perm: &[usize]) -> FiniteNearRing {
        let n = self.order;
        assert_eq!(perm.len(), n);
        let mut add = vec![0u8; n * n];
        let mut mul = vec![0u8; n * n];
        let mut neg = vec![0u8; n];
        for a in 0..n {
            neg[perm[a]] = perm[self.neg(a)] as u8;
            for b in 0..n {
                add[perm[a] * n + perm[b]] = perm[self.add(a, b)] as u8;
                mul[perm[a] * n + perm[b]] = perm[self.mul(a, b)] as u8;
            }
        }
        FiniteNearRing {
            order: n,
            add,
            mul,
            neg,
            zero: perm[self.zero],
        }
    }

    /// Applies `perm` to each member of `s`.
    pub fn relabel_set(s: SubSet, perm: &[usize]) -> SubSet {
        s.iter().map(|x| perm[x]).collect()
    }
}

/// Closes `seeds` under a binary join, returning the result ascending.
pub(crate) fn join_closure(seeds: Vec<SubSet>, join: impl Fn(SubSet, SubSet) -> SubSet) -> Vec<SubSet> {
    let mut known: std::collections::HashSet<SubSet> = seeds.iter().copied().collect();
    let mut all = seeds.clone();
    let mut frontier = seeds;
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for &a in &frontier {
            // `all` grows while we iterate; joins with later members happen when
            // those members reach the frontier.
            for i in 0..all.len() {
                let j = join(a, all[i]);
                if known.insert(j) {
                    all.push(j);
                    next.push(j);
                }
            }
        }
        frontier = next;
    }
    all.sort();
    all
}
