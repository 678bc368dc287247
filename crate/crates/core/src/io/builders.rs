//! Small concrete near-rings used by the default corpus and the tests.

use thiserror::Error;

use crate::algebra::{AlgebraError, FiniteMonoid, FiniteNearRing};
use crate::construct::ConstructError;
use crate::grading::{enumerate_gradings, GradedNearRing, GradingError};
use crate::subset::MAX_ORDER;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BuildError {
    #[error("order {order} exceeds the bound {bound}")]
    BoundExceeded { order: usize, bound: usize },
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Grading(#[from] GradingError),
    #[error(transparent)]
    Construct(#[from] ConstructError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GradingMode {
    /// Everything in the identity degree.
    Trivial,
    /// Every valid grading.
    Enumerate,
}

/// The ring `Z_n` as a (left- and right-distributive) near-ring.
pub fn cyclic_ring(n: usize) -> Result<FiniteNearRing, BuildError> {
    if n == 0 || n > MAX_ORDER {
        return Err(BuildError::BoundExceeded { order: n, bound: MAX_ORDER });
    }
    let add: Vec<Vec<usize>> = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
    let mul: Vec<Vec<usize>> = (0..n).map(|a| (0..n).map(|b| (a * b) % n).collect()).collect();
    Ok(FiniteNearRing::new(&add, &mul, 0)?)
}

/// `Z_n` graded by the monoid `{0, 1}` with `1 + 1 = 1`.
pub fn cyclic(n: usize, mode: GradingMode) -> Result<Vec<GradedNearRing>, BuildError> {
    let ring = cyclic_ring(n)?;
    let monoid = FiniteMonoid::two_element_idempotent();
    match mode {
        GradingMode::Trivial => Ok(vec![GradedNearRing::trivial(ring, monoid)?]),
        GradingMode::Enumerate => Ok(enumerate_gradings(&ring, &monoid, MAX_ORDER)?),
    }
}

/// All maps `Z_k → Z_k` under pointwise addition and composition, graded
/// by the one-element monoid. Constant maps make `f·0 ≠ 0`, which rules out
/// the trivial grading over `{0, 1}`. The map `f` has index `Σ f(i) k^i`.
pub fn mapping_nearring(k: usize) -> Result<GradedNearRing, BuildError> {
    if !(1..=3).contains(&k) {
        return Err(BuildError::BoundExceeded { order: k.pow(k as u32), bound: 27 });
    }
    let n = k.pow(k as u32);
    let decode = |f: usize| -> Vec<usize> { (0..k).map(|i| (f / k.pow(i as u32)) % k).collect() };
    let encode = |v: &[usize]| -> usize { v.iter().enumerate().map(|(i, &x)| x * k.pow(i as u32)).sum() };
    let maps: Vec<Vec<usize>> = (0..n).map(decode).collect();
    let mut add = vec![vec![0; n]; n];
    let mut mul = vec![vec![0; n]; n];
    for f in 0..n {
        for g in 0..n {
            let sum: Vec<usize> = (0..k).map(|i| (maps[f][i] + maps[g][i]) % k).collect();
            let comp: Vec<usize> = (0..k).map(|i| maps[f][maps[g][i]]).collect();
            add[f][g] = encode(&sum);
            mul[f][g] = encode(&comp);
        }
    }
    let ring = FiniteNearRing::new(&add, &mul, 0)?;
    Ok(GradedNearRing::trivial(ring, FiniteMonoid::trivial())?)
}

/// The symmetric group on three letters with `a·b = a`, graded by the
/// one-element monoid. Permutations are listed lexicographically, so the
/// identity is element 0.
pub fn constant_symmetric() -> Result<GradedNearRing, BuildError> {
    let perms: [[usize; 3]; 6] = [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];
    let index = |p: [usize; 3]| perms.iter().position(|&q| q == p).expect("a permutation");
    let add: Vec<Vec<usize>> = perms
        .iter()
        .map(|s| perms.iter().map(|t| index([s[t[0]], s[t[1]], s[t[2]]])).collect())
        .collect();
    let mul: Vec<Vec<usize>> = (0..6).map(|a| vec![a; 6]).collect();
    let ring = FiniteNearRing::new(&add, &mul, 0)?;
    Ok(GradedNearRing::trivial(ring, FiniteMonoid::trivial())?)
}
