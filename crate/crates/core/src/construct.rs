//! Direct products, quotients and graded homomorphisms.

use std::sync::Arc;

use thiserror::Error;

use crate::algebra::{AlgebraError, FiniteNearRing};
use crate::grading::{GradedNearRing, GradingError};
use crate::ideal::{self, ideal_closure_bits, IdealSet};
use crate::subset::{SubSet, MAX_ORDER};

/// Default cap on the source order for homomorphism search.
pub const DEFAULT_HOM_SOURCE_CAP: usize = 16;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConstructError {
    #[error("structures are graded by different monoids")]
    MonoidMismatch,
    #[error("order {order} exceeds the configured bound {bound}")]
    BoundExceeded { order: usize, bound: usize },
    #[error("{0} is not a graded ideal")]
    NotGradedIdeal(SubSet),
    #[error("{0} is not an ideal")]
    NotAnIdeal(SubSet),
    #[error("induced grading on the quotient is invalid: {0}")]
    InducedGradingInvalid(GradingError),
    #[error("coset operations are not well defined at ({0}, {1})")]
    NotWellDefined(usize, usize),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Grading(#[from] GradingError),
    #[error("map has {got} entries, source has order {expected}")]
    MapLength { expected: usize, got: usize },
    #[error("map sends {element} to {image}, outside the target")]
    MapOutOfRange { element: usize, image: usize },
    #[error("map is not additive at ({0}, {1})")]
    NotAdditive(usize, usize),
    #[error("map is not multiplicative at ({0}, {1})")]
    NotMultiplicative(usize, usize),
    #[error("map sends {element} in degree {sigma} outside the target's degree {sigma}")]
    NotGraded { sigma: usize, element: usize },
    #[error("homomorphism is not surjective")]
    NotSurjective,
    #[error("image {0} of an ideal containing the kernel is not an ideal")]
    ImageNotIdeal(SubSet),
    #[error("preimage {0} is not an ideal containing the kernel")]
    PreimageNotIdeal(SubSet),
}

/// A graded near-ring homomorphism between two structures over the same monoid.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedHom {
    source: Arc<GradedNearRing>,
    target: Arc<GradedNearRing>,
    map: Vec<usize>,
    surjective: bool,
}

impl GradedHom {
    pub fn new(source: Arc<GradedNearRing>, target: Arc<GradedNearRing>, map: Vec<usize>) -> Result<Self, ConstructError> {
        if source.monoid() != target.monoid() {
            return Err(ConstructError::MonoidMismatch);
        }
        if map.len() != source.order() {
            return Err(ConstructError::MapLength {
                expected: source.order(),
                got: map.len(),
            });
        }
        if let Some((element, &image)) = map.iter().enumerate().find(|(_, &y)| y >= target.order()) {
            return Err(ConstructError::MapOutOfRange { element, image });
        }
        check_hom(&source, &target, &map)?;
        let surjective = map.iter().copied().collect::<SubSet>() == target.ring().elements();
        Ok(GradedHom {
            source,
            target,
            map,
            surjective,
        })
    }

    pub fn source(&self) -> &Arc<GradedNearRing> {
        &self.source
    }

    pub fn target(&self) -> &Arc<GradedNearRing> {
        &self.target
    }

    pub fn map(&self) -> &[usize] {
        &self.map
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.map[x]
    }

    pub fn is_surjective(&self) -> bool {
        self.surjective
    }

    pub fn kernel(&self) -> SubSet {
        self.preimage(self.target.ring().zero_set())
    }

    pub fn image(&self, s: SubSet) -> SubSet {
        s.iter().map(|x| self.map[x]).collect()
    }

    pub fn preimage(&self, s: SubSet) -> SubSet {
        (0..self.map.len()).filter(|&x| s.contains(self.map[x])).collect()
    }
}

fn check_hom(source: &GradedNearRing, target: &GradedNearRing, map: &[usize]) -> Result<(), ConstructError> {
    let (s, t) = (source.ring(), target.ring());
    let n = s.order();
    for a in 0..n {
        for b in 0..n {
            if map[s.add(a, b)] != t.add(map[a], map[b]) {
                return Err(ConstructError::NotAdditive(a, b));
            }
        }
    }
    for a in 0..n {
        for b in 0..n {
            if map[s.mul(a, b)] != t.mul(map[a], map[b]) {
                return Err(ConstructError::NotMultiplicative(a, b));
            }
        }
    }
    for (sigma, &part) in source.grading().parts().iter().enumerate() {
        let target_part = target.grading().part(sigma);
        if let Some(element) = part.iter().find(|&x| !target_part.contains(map[x])) {
            return Err(ConstructError::NotGraded { sigma, element });
        }
    }
    Ok(())
}

/// Embeds `(x, y)` as `x * |B| + y`.
#[inline]
pub fn pair_index(x: usize, y: usize, right_order: usize) -> usize {
    x * right_order + y
}

/// `I × J` inside `A × B`.
pub fn product_set(i: SubSet, j: SubSet, right_order: usize) -> SubSet {
    let mut out = SubSet::EMPTY;
    for x in i {
        for y in j {
            out.insert(pair_index(x, y, right_order));
        }
    }
    out
}

/// Projections of a subset of `A × B` onto each factor.
pub fn project(s: SubSet, right_order: usize) -> (SubSet, SubSet) {
    let left = s.iter().map(|k| k / right_order).collect();
    let right = s.iter().map(|k| k % right_order).collect();
    (left, right)
}

/// `A × B` with componentwise tables and `parts[σ] = A_σ × B_σ`.
pub fn direct_product(a: &GradedNearRing, b: &GradedNearRing, max_order: usize) -> Result<GradedNearRing, ConstructError> {
    if a.monoid() != b.monoid() {
        return Err(ConstructError::MonoidMismatch);
    }
    let (na, nb) = (a.order(), b.order());
    let order = na * nb;
    let bound = max_order.min(MAX_ORDER);
    if order > bound {
        return Err(ConstructError::BoundExceeded { order, bound });
    }
    let (ra, rb) = (a.ring(), b.ring());
    let mut add = vec![0u8; order * order];
    let mut mul = vec![0u8; order * order];
    for x1 in 0..na {
        for y1 in 0..nb {
            let p = pair_index(x1, y1, nb);
            for x2 in 0..na {
                for y2 in 0..nb {
                    let q = pair_index(x2, y2, nb);
                    add[p * order + q] = pair_index(ra.add(x1, x2), rb.add(y1, y2), nb) as u8;
                    mul[p * order + q] = pair_index(ra.mul(x1, x2), rb.mul(y1, y2), nb) as u8;
                }
            }
        }
    }
    let ring = FiniteNearRing::from_flat(order, add, mul, pair_index(ra.zero(), rb.zero(), nb))?;
    let parts = a
        .grading()
        .parts()
        .iter()
        .zip(b.grading().parts())
        .map(|(&pa, &pb)| product_set(pa, pb, nb))
        .collect();
    Ok(GradedNearRing::new(ring, a.monoid().clone(), parts)?)
}

/// Graded ideals of `A × B` that are not of the form `I × J` with `I`, `J`
/// graded ideals of the factors.
pub fn product_catalog_discrepancies(a: &GradedNearRing, b: &GradedNearRing, product_ideals: &[SubSet]) -> Vec<SubSet> {
    let nb = b.order();
    product_ideals
        .iter()
        .copied()
        .filter(|&k| {
            let (i, j) = project(k, nb);
            !(product_set(i, j, nb) == k && ideal::is_graded_ideal(a, i) && ideal::is_graded_ideal(b, j))
        })
        .collect()
}

/// `N/I` together with the canonical epimorphism.
#[derive(Debug, Clone)]
pub struct Quotient {
    pub ring: Arc<GradedNearRing>,
    pub projection: GradedHom,
}

/// Builds `N/I`. Cosets are labelled in order of their smallest member, so
/// coset 0 is `I` itself.
pub fn quotient(gnr: &Arc<GradedNearRing>, i: SubSet) -> Result<Quotient, ConstructError> {
    if !ideal::is_graded_ideal(gnr, i) {
        return Err(ConstructError::NotGradedIdeal(i));
    }
    let ring = gnr.ring();
    let n = ring.order();
    let mut label = vec![usize::MAX; n];
    let mut reps = Vec::new();
    for x in 0..n {
        if label[x] != usize::MAX {
            continue;
        }
        let c = reps.len();
        reps.push(x);
        for k in i {
            label[ring.add(x, k)] = c;
        }
    }
    let q = reps.len();
    let mut add = vec![0u8; q * q];
    let mut mul = vec![0u8; q * q];
    for (c, &x) in reps.iter().enumerate() {
        for (d, &y) in reps.iter().enumerate() {
            add[c * q + d] = label[ring.add(x, y)] as u8;
            mul[c * q + d] = label[ring.mul(x, y)] as u8;
        }
    }
    for x in 0..n {
        for y in 0..n {
            let (c, d) = (label[x], label[y]);
            if add[c * q + d] as usize != label[ring.add(x, y)] || mul[c * q + d] as usize != label[ring.mul(x, y)] {
                return Err(ConstructError::NotWellDefined(x, y));
            }
        }
    }
    let qring = FiniteNearRing::from_flat(q, add, mul, label[ring.zero()])?;
    let parts = gnr
        .grading()
        .parts()
        .iter()
        .map(|&p| p.iter().map(|x| label[x]).collect())
        .collect();
    let target = GradedNearRing::new(qring, gnr.monoid().clone(), parts).map_err(ConstructError::InducedGradingInvalid)?;
    let target = Arc::new(target);
    let projection = GradedHom::new(gnr.clone(), target.clone(), label)?;
    Ok(Quotient {
        ring: target,
        projection,
    })
}

/// Image of an ideal under a surjective homomorphism.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ImageIdeal {
    pub ideal: IdealSet,
    /// The raw image was not an ideal and was replaced by its ideal closure.
    pub closed_up: bool,
}

pub fn hom_image_ideal(h: &GradedHom, p: SubSet) -> Result<ImageIdeal, ConstructError> {
    if !h.is_surjective() {
        return Err(ConstructError::NotSurjective);
    }
    if !ideal::is_ideal(h.source().ring(), p) {
        return Err(ConstructError::NotAnIdeal(p));
    }
    let target = h.target();
    let image = h.image(p);
    if ideal::is_ideal(target.ring(), image) {
        return Ok(ImageIdeal {
            ideal: IdealSet::analyze(target, image),
            closed_up: false,
        });
    }
    if h.kernel().is_subset(p) {
        return Err(ConstructError::ImageNotIdeal(image));
    }
    Ok(ImageIdeal {
        ideal: IdealSet::analyze(target, ideal_closure_bits(target.ring(), image)),
        closed_up: true,
    })
}

pub fn hom_preimage_ideal(h: &GradedHom, q: SubSet) -> Result<IdealSet, ConstructError> {
    let pre = h.preimage(q);
    if !ideal::is_ideal(h.source().ring(), pre) || !h.kernel().is_subset(pre) {
        return Err(ConstructError::PreimageNotIdeal(pre));
    }
    Ok(IdealSet::analyze(h.source(), pre))
}

/// A greedy generating set of `(N, +)`: each element not yet generated joins it.
pub fn additive_generators(ring: &FiniteNearRing) -> Vec<usize> {
    let mut gens = Vec::new();
    let mut span = ring.zero_set();
    for x in 0..ring.order() {
        if !span.contains(x) {
            gens.push(x);
            span = ring.subgroup_closure(span.union(SubSet::singleton(x)));
        }
    }
    gens
}

/// Every surjective graded homomorphism `A → B`, ordered lexicographically by
/// the images of the additive generators.
pub fn enumerate_surjective_homs(
    a: &Arc<GradedNearRing>,
    b: &Arc<GradedNearRing>,
    max_source_order: usize,
) -> Result<Vec<GradedHom>, ConstructError> {
    if a.order() > max_source_order {
        return Err(ConstructError::BoundExceeded {
            order: a.order(),
            bound: max_source_order,
        });
    }
    if a.monoid() != b.monoid() {
        return Err(ConstructError::MonoidMismatch);
    }
    let (na, nb) = (a.order(), b.order());
    if nb > na || na % nb != 0 {
        return Ok(Vec::new());
    }
    let (ra, rb) = (a.ring(), b.ring());
    let gens = additive_generators(ra);
    let mut images = vec![0usize; gens.len()];
    let mut found = Vec::new();
    loop {
        if let Some(map) = extend_on_generators(ra, rb, &gens, &images) {
            if let Ok(h) = GradedHom::new(a.clone(), b.clone(), map) {
                if h.is_surjective() {
                    found.push(h);
                }
            }
        }
        // Next assignment, last generator fastest.
        let mut k = gens.len();
        loop {
            if k == 0 {
                return Ok(found);
            }
            k -= 1;
            images[k] += 1;
            if images[k] < nb {
                break;
            }
            images[k] = 0;
        }
    }
}

/// Propagates generator images along `x ↦ x + g`; `None` on a conflict.
fn extend_on_generators(ra: &FiniteNearRing, rb: &FiniteNearRing, gens: &[usize], images: &[usize]) -> Option<Vec<usize>> {
    let mut map = vec![usize::MAX; ra.order()];
    map[ra.zero()] = rb.zero();
    let mut queue = vec![ra.zero()];
    while let Some(x) = queue.pop() {
        for (&g, &img) in gens.iter().zip(images) {
            let y = ra.add(x, g);
            let value = rb.add(map[x], img);
            if map[y] == usize::MAX {
                map[y] = value;
                queue.push(y);
            } else if map[y] != value {
                return None;
            }
        }
    }
    Some(map)
}
