//! The element-wise and ideal-wise characterizations of weakly and almost
//! prime ideals. Each condition returns `Err` with a refuting witness.
//!
//! Both families share a shape: with `T = {0}` (weakly) or `T = P² ∩ N`
//! (almost), "not contained in `T`" plays the role of "nonzero".

use super::factor::FactorKind;
use super::workbench::Analyzed;
use crate::subset::SubSet;

pub type Cond = Result<(), String>;

fn floor(a: &Analyzed, kind: FactorKind, p: SubSet) -> SubSet {
    match kind {
        FactorKind::Weakly => a.zero(),
        FactorKind::Almost => a.square_cap(p),
    }
}

/// For all `x` and `K = ⟨y⟩ + ⟨z⟩`: `xK ⊆ P` and `xK ⊄ T` force `x ∈ P` or
/// `y, z ∈ P` (equivalently `K ⊆ P`).
pub fn elementwise(a: &Analyzed, kind: FactorKind, p: SubSet) -> Cond {
    let t = floor(a, kind, p);
    for x in 0..a.order() {
        if p.contains(x) {
            continue;
        }
        for &k in a.distinct_sums() {
            if k.is_subset(p) {
                continue;
            }
            let xk = a.left_multiple(x, k);
            if xk.is_subset(p) && !xk.is_subset(t) {
                return Err(format!("x = {x}, <y>+<z> = {k}: xK = {xk}"));
            }
        }
    }
    Ok(())
}

/// For `x ∉ P` and all `y`: `(P : ⟨x⟩+⟨y⟩) = P ∪ (T : ⟨x⟩+⟨y⟩)`.
pub fn residual_union(a: &Analyzed, kind: FactorKind, p: SubSet) -> Cond {
    let t = floor(a, kind, p);
    for x in (0..a.order()).filter(|&x| !p.contains(x)) {
        for y in 0..a.order() {
            let k = a.sum(x, y);
            let lhs = a.residual(p, k);
            let rhs = p.union(a.residual(t, k));
            if lhs != rhs {
                return Err(format!("x = {x}, y = {y}: (P:K) = {lhs}, P ∪ (T:K) = {rhs}"));
            }
        }
    }
    Ok(())
}

/// For `x ∉ P` and all `y`: `(P : ⟨x⟩+⟨y⟩)` is `P` or `(T : ⟨x⟩+⟨y⟩)`.
pub fn residual_either(a: &Analyzed, kind: FactorKind, p: SubSet) -> Cond {
    let t = floor(a, kind, p);
    for x in (0..a.order()).filter(|&x| !p.contains(x)) {
        for y in 0..a.order() {
            let k = a.sum(x, y);
            let lhs = a.residual(p, k);
            let tk = a.residual(t, k);
            if lhs != p && lhs != tk {
                return Err(format!("x = {x}, y = {y}: (P:K) = {lhs}, (T:K) = {tk}"));
            }
        }
    }
    Ok(())
}

pub fn predicate(a: &Analyzed, kind: FactorKind, p: SubSet) -> Cond {
    if a.holds(kind.predicate(), p) {
        Ok(())
    } else {
        let v = a.lattice.verdict(kind.predicate(), p).ok().and_then(|v| v.witness);
        Err(match v {
            Some((i, j)) => format!("refuted by I = {i}, J = {j}"),
            None => "predicate fails".to_string(),
        })
    }
}

/// Over domain ideals `I, J` selected by `select`: `IJ ⊆ T` or `IJ ⊄ P`.
fn pairwise(a: &Analyzed, kind: FactorKind, p: SubSet, select: impl Fn(SubSet) -> bool) -> Cond {
    let t = floor(a, kind, p);
    let chosen: Vec<SubSet> = a.ideals().iter().copied().filter(|&s| select(s)).collect();
    for &i in &chosen {
        for &j in &chosen {
            let ij = a.product(i, j);
            if !ij.is_subset(t) && ij.is_subset(p) {
                return Err(format!("I = {i}, J = {j}: IJ = {ij}"));
            }
        }
    }
    Ok(())
}

/// Over ideals strictly containing `P`.
pub fn strict_overideals(a: &Analyzed, kind: FactorKind, p: SubSet) -> Cond {
    pairwise(a, kind, p, |s| p.is_subset(s) && s != p)
}

/// Over ideals not contained in `P`.
pub fn outside_ideals(a: &Analyzed, kind: FactorKind, p: SubSet) -> Cond {
    pairwise(a, kind, p, |s| !s.is_subset(p))
}
