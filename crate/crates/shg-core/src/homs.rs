//! Homomorphisms between finite semihypergroups.
//!
//! A total map `φ : K → H` is a homomorphism when the pushforward of every
//! table entry matches the target entry: `φ_*(p_x * p_y) = p_φ(x) * p_φ(y)`.
//! On finite carriers with exact coefficients this is the whole story — the
//! openness/properness conditions of the general theory are vacuous, and
//! the support lemma (`z ∈ supp(p_x*p_y)` implies
//! `φ(z) ∈ supp(p_φ(x)*p_φ(y))`) holds pointwise rather than almost
//! everywhere.

use crate::element::{ElementSet, Subset};
use crate::ideals::{is_left_ideal, IdealsError};
use crate::measure::Measure;
use crate::semihypergroup::{AxiomFailure, ConvolutionTable, Semihypergroup, UnknownElement};
use crate::TheoremViolation;
use num_traits::Zero;
use std::sync::Arc;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HomsError {
    #[error("map is not total or hits indices outside the target")]
    MalformedMap,
    #[error("map endpoints do not match the given semihypergroups")]
    CarrierMismatch,
    #[error(transparent)]
    UnknownElement(#[from] UnknownElement),
    #[error("source element {0:?} is not mapped")]
    MissingImage(String),
    #[error("source element {0:?} is mapped twice")]
    DoubledImage(String),
    #[error("map is not a homomorphism")]
    NotAHomomorphism,
    #[error("preimage of the ideal is empty, so it is not an ideal")]
    EmptyPreimage,
    #[error("search space of {space} maps exceeds the cap {cap}; raise the cap to enumerate")]
    SearchSpaceExceeded { space: u128, cap: u128 },
    #[error("image table fails the axioms: {0}")]
    ImageFailsAxioms(#[from] AxiomFailure),
    #[error(transparent)]
    Ideals(#[from] IdealsError),
    #[error(transparent)]
    Theorem(#[from] TheoremViolation),
}

/// A total map between two carriers, the candidate homomorphism.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ElementMap {
    source: Arc<ElementSet>,
    target: Arc<ElementSet>,
    map: Vec<usize>,
}

impl ElementMap {
    pub fn new(
        source: Arc<ElementSet>,
        target: Arc<ElementSet>,
        map: Vec<usize>,
    ) -> Result<Self, HomsError> {
        if map.len() != source.len() || map.iter().any(|&i| i >= target.len()) {
            return Err(HomsError::MalformedMap);
        }
        Ok(ElementMap {
            source,
            target,
            map,
        })
    }

    pub fn identity(carrier: Arc<ElementSet>) -> Self {
        let map = (0..carrier.len()).collect();
        ElementMap {
            source: Arc::clone(&carrier),
            target: carrier,
            map,
        }
    }

    pub fn constant(source: Arc<ElementSet>, target: Arc<ElementSet>, value: usize) -> Self {
        assert!(value < target.len());
        let map = vec![value; source.len()];
        ElementMap {
            source,
            target,
            map,
        }
    }

    /// Builds a map from `(source name, target name)` pairs, demanding
    /// totality and rejecting doubled assignments.
    pub fn from_pairs<'a, I>(
        source: Arc<ElementSet>,
        target: Arc<ElementSet>,
        pairs: I,
    ) -> Result<Self, HomsError>
    where
        I: IntoIterator<Item = (&'a str, &'a str)>,
    {
        let mut map: Vec<Option<usize>> = vec![None; source.len()];
        for (from, to) in pairs {
            let i = source
                .index_of(from)
                .ok_or_else(|| UnknownElement(from.to_string()))?;
            let j = target
                .index_of(to)
                .ok_or_else(|| UnknownElement(to.to_string()))?;
            if map[i].is_some() {
                return Err(HomsError::DoubledImage(from.to_string()));
            }
            map[i] = Some(j);
        }
        let map = map
            .into_iter()
            .enumerate()
            .map(|(i, v)| v.ok_or_else(|| HomsError::MissingImage(source.name(i).to_string())))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(ElementMap {
            source,
            target,
            map,
        })
    }

    pub fn source(&self) -> &Arc<ElementSet> {
        &self.source
    }

    pub fn target(&self) -> &Arc<ElementSet> {
        &self.target
    }

    pub fn apply(&self, x: usize) -> usize {
        self.map[x]
    }

    pub fn mapping(&self) -> &[usize] {
        &self.map
    }

    pub fn image(&self) -> Subset {
        Subset::from_indices(self.target.len(), self.map.iter().copied())
    }

    pub fn preimage(&self, j: &Subset) -> Subset {
        Subset::from_indices(
            self.source.len(),
            (0..self.source.len()).filter(|&x| j.contains(self.map[x])),
        )
    }

    /// `then ∘ self`: apply `self` first.
    pub fn compose(&self, then: &ElementMap) -> Result<ElementMap, HomsError> {
        if self.target != then.source {
            return Err(HomsError::CarrierMismatch);
        }
        Ok(ElementMap {
            source: Arc::clone(&self.source),
            target: Arc::clone(&then.target),
            map: self.map.iter().map(|&x| then.map[x]).collect(),
        })
    }
}

/// `φ_* μ`: sums weights over fibers of the map.
pub fn pushforward(mu: &Measure, phi: &ElementMap) -> Result<Measure, HomsError> {
    if mu.carrier().as_ref() != phi.source.as_ref() {
        return Err(HomsError::CarrierMismatch);
    }
    let mut out = Measure::zero(Arc::clone(&phi.target));
    let one = crate::rational::rat_int(1);
    for x in 0..phi.source.len() {
        if !mu.weight(x).is_zero() {
            let mut unit = Measure::zero(Arc::clone(&phi.target));
            unit.add_scaled_assign(&one, &Measure::point_mass(Arc::clone(&phi.target), phi.map[x]));
            out.add_scaled_assign(mu.weight(x), &unit);
        }
    }
    Ok(out)
}

/// Why a candidate is not a homomorphism: the first pair on which the
/// pushed entry and the target entry differ, with both measures.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomWitness {
    pub x: usize,
    pub y: usize,
    pub pushed: Measure,
    pub expected: Measure,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomCheck {
    pub holds: bool,
    pub witness: Option<HomWitness>,
}

fn endpoints_match(
    phi: &ElementMap,
    s: &Semihypergroup,
    t: &Semihypergroup,
) -> Result<(), HomsError> {
    if phi.source.as_ref() != s.carrier().as_ref() || phi.target.as_ref() != t.carrier().as_ref() {
        return Err(HomsError::CarrierMismatch);
    }
    Ok(())
}

/// Pushforward equality on every pair: `φ_*(p_x * p_y) = p_φ(x) * p_φ(y)`.
pub fn is_homomorphism(
    phi: &ElementMap,
    s: &Semihypergroup,
    t: &Semihypergroup,
) -> Result<HomCheck, HomsError> {
    endpoints_match(phi, s, t)?;
    for x in 0..s.size() {
        for y in 0..s.size() {
            let pushed = pushforward(s.convolve_points(x, y), phi)?;
            let expected = t.convolve_points(phi.apply(x), phi.apply(y));
            if &pushed != expected {
                return Ok(HomCheck {
                    holds: false,
                    witness: Some(HomWitness {
                        x,
                        y,
                        pushed,
                        expected: expected.clone(),
                    }),
                });
            }
        }
    }
    Ok(HomCheck {
        holds: true,
        witness: None,
    })
}

/// The image `φ(K)` with the restricted table, as its own structure.
#[derive(Debug, Clone)]
pub struct ImageSemihypergroup {
    pub shg: Semihypergroup,
    /// Image as a subset of the target carrier.
    pub image: Subset,
    /// New index → target index.
    pub image_to_target: Vec<usize>,
}

/// Restriction of the target table to the image, without the axiom gate.
fn restricted_table(
    phi: &ElementMap,
    t: &Semihypergroup,
) -> Result<(ConvolutionTable, Subset, Vec<usize>), HomsError> {
    let image = phi.image();
    // closure under convolution (a proved consequence of being an image)
    let closed = t.set_convolve(&image, &image).is_subset_of(&image);
    if !closed {
        return Err(TheoremViolation(
            "image of a homomorphism must be closed under convolution".into(),
        )
        .into());
    }
    let image_to_target = image.indices();
    let names = image_to_target.iter().map(|&i| t.carrier().name(i));
    let carrier = Arc::new(ElementSet::new(names).expect("subset of valid names"));
    let table = ConvolutionTable::from_fn(Arc::clone(&carrier), |x, y| {
        let m = t.convolve_points(image_to_target[x], image_to_target[y]);
        let weights = image_to_target.iter().map(|&i| m.weight(i).clone()).collect();
        Measure::new(Arc::clone(&carrier), weights).expect("length")
    })
    .expect("square");
    Ok((table, image, image_to_target))
}

/// `φ(K)` as a semihypergroup: requires a verified homomorphism and runs
/// the axiom checker on the restricted table.
pub fn image_semihypergroup(
    phi: &ElementMap,
    s: &Semihypergroup,
    t: &Semihypergroup,
) -> Result<ImageSemihypergroup, HomsError> {
    if !is_homomorphism(phi, s, t)?.holds {
        return Err(HomsError::NotAHomomorphism);
    }
    let (table, image, image_to_target) = restricted_table(phi, t)?;
    let shg = Semihypergroup::new(table)?;
    Ok(ImageSemihypergroup {
        shg,
        image,
        image_to_target,
    })
}

/// `φ(I)` for a left ideal `I ⊆ K`, re-verified as a left ideal of the
/// image structure. Returns the image subset in target indices.
pub fn push_ideal(
    phi: &ElementMap,
    s: &Semihypergroup,
    t: &Semihypergroup,
    ideal: &Subset,
) -> Result<Subset, HomsError> {
    if !is_homomorphism(phi, s, t)?.holds {
        return Err(HomsError::NotAHomomorphism);
    }
    if !is_left_ideal(s, ideal)?.holds {
        return Err(IdealsError::NotALeftIdeal.into());
    }
    let pushed = Subset::from_indices(t.size(), ideal.iter().map(|a| phi.apply(a)));
    // verify inside the image structure; the support arithmetic needs no
    // axiom gate
    let (table, _, image_to_target) = restricted_table(phi, t)?;
    let image_shg = Semihypergroup::new_unchecked(table);
    let in_image = Subset::from_indices(
        image_shg.size(),
        image_to_target
            .iter()
            .enumerate()
            .filter(|(_, &ti)| pushed.contains(ti))
            .map(|(k, _)| k),
    );
    if !is_left_ideal(&image_shg, &in_image)?.holds {
        return Err(TheoremViolation(
            "pushforward of a left ideal must be a left ideal of the image".into(),
        )
        .into());
    }
    Ok(pushed)
}

/// `φ⁻¹(J)` for a left ideal `J ⊆ H`, re-verified as a left ideal of the
/// source. An empty preimage is reported as such, not as an ideal.
pub fn pull_ideal(
    phi: &ElementMap,
    s: &Semihypergroup,
    t: &Semihypergroup,
    ideal: &Subset,
) -> Result<Subset, HomsError> {
    if !is_homomorphism(phi, s, t)?.holds {
        return Err(HomsError::NotAHomomorphism);
    }
    if !is_left_ideal(t, ideal)?.holds {
        return Err(IdealsError::NotALeftIdeal.into());
    }
    let pre = phi.preimage(ideal);
    if pre.is_empty() {
        return Err(HomsError::EmptyPreimage);
    }
    if !is_left_ideal(s, &pre)?.holds {
        return Err(TheoremViolation(
            "preimage of a left ideal must be a left ideal of the source".into(),
        )
        .into());
    }
    Ok(pre)
}

/// `φ(z) ∈ supp(p_φ(x) * p_φ(y))` for every `z ∈ supp(p_x * p_y)`.
///
/// Expects a verified homomorphism, for which this always holds; on an
/// arbitrary map the answer is whatever the supports say.
pub fn support_lemma_check(
    phi: &ElementMap,
    s: &Semihypergroup,
    t: &Semihypergroup,
) -> Result<bool, HomsError> {
    endpoints_match(phi, s, t)?;
    for x in 0..s.size() {
        for y in 0..s.size() {
            let target_supp = t.support_of(phi.apply(x), phi.apply(y));
            for z in s.support_of(x, y).iter() {
                if !target_supp.contains(phi.apply(z)) {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

/// All homomorphisms `S → T` by exhaustive search over the `|T|^|S|` total
/// maps, in lexicographic order. Refuses to start when the space exceeds
/// `cap`.
pub const DEFAULT_ENUMERATION_CAP: u128 = 1_000_000;

pub fn enumerate_homomorphisms(
    s: &Semihypergroup,
    t: &Semihypergroup,
    cap: u128,
) -> Result<Vec<ElementMap>, HomsError> {
    let space = (t.size() as u128)
        .checked_pow(s.size() as u32)
        .unwrap_or(u128::MAX);
    if space > cap {
        return Err(HomsError::SearchSpaceExceeded { space, cap });
    }
    let mut out = Vec::new();
    let mut digits = vec![0usize; s.size()];
    loop {
        let phi = ElementMap::new(
            Arc::clone(s.carrier()),
            Arc::clone(t.carrier()),
            digits.clone(),
        )?;
        if is_homomorphism(&phi, s, t)?.holds {
            out.push(phi);
        }
        // lexicographic odometer, most significant digit first
        let mut k = s.size();
        loop {
            if k == 0 {
                return Ok(out);
            }
            k -= 1;
            digits[k] += 1;
            if digits[k] < t.size() {
                break;
            }
            digits[k] = 0;
        }
    }
}
