//! Ideal theory: sidedness tests, principal ideals, minimality, exhaustive
//! enumeration, the kernel and the kernel sandwich.
//!
//! A nonempty `I ⊆ K` is a left ideal when `supp(p_x * p_a) ⊆ I` for every
//! `x ∈ K, a ∈ I`; right ideals are mirrored, and an ideal is both. All
//! subset arithmetic runs on cached support bitsets, so these functions
//! never touch rational arithmetic.
//!
//! Minimal-ideal enumeration has two strategies: an exhaustive power-set
//! scan (the trusted oracle, used up to [`DEFAULT_SCAN_BOUND`] elements) and
//! closure-based generation from singletons (used beyond it). The two are
//! equivalent — minimal left ideals are exactly the inclusion-minimal
//! left-multiplication closures of singletons — and the test suite holds
//! them to that.

use crate::element::Subset;
use crate::semihypergroup::Semihypergroup;
use crate::{Side, TheoremViolation};
use thiserror::Error;

/// Carrier-size / subset-size threshold below which the power-set scan is
/// used. Overridable per call; the CLI maps `SHG_SCAN_BOUND` onto it.
pub const DEFAULT_SCAN_BOUND: usize = 12;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IdealsError {
    #[error("the empty set is not considered an ideal")]
    EmptySubset,
    #[error("subset is over a universe of size {got}, carrier has {expected} elements")]
    WrongUniverse { expected: usize, got: usize },
    #[error("subset is not a left ideal, as required here")]
    NotALeftIdeal,
    #[error(transparent)]
    Theorem(#[from] TheoremViolation),
}

/// A pair whose convolution escapes the candidate subset: the factors in
/// convolution order and one escaping support element.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct IdealWitness {
    pub left_factor: usize,
    pub right_factor: usize,
    pub escaped: usize,
}

/// Result of a one-sided ideal test; `witnesses` is nonempty exactly when
/// `holds` is false and lists every violating factor pair.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SideIdealCheck {
    pub side: Side,
    pub holds: bool,
    pub witnesses: Vec<IdealWitness>,
}

fn validate(s: &Semihypergroup, i: &Subset) -> Result<(), IdealsError> {
    if i.universe() != s.size() {
        return Err(IdealsError::WrongUniverse {
            expected: s.size(),
            got: i.universe(),
        });
    }
    if i.is_empty() {
        return Err(IdealsError::EmptySubset);
    }
    Ok(())
}

fn side_check(s: &Semihypergroup, i: &Subset, side: Side) -> SideIdealCheck {
    let mut witnesses = Vec::new();
    for a in i.iter() {
        for x in 0..s.size() {
            let (lf, rf) = match side {
                Side::Left => (x, a),
                Side::Right => (a, x),
            };
            let supp = s.support_of(lf, rf);
            if !supp.is_subset_of(i) {
                let escaped = supp.iter().find(|e| !i.contains(*e)).expect("not subset");
                witnesses.push(IdealWitness {
                    left_factor: lf,
                    right_factor: rf,
                    escaped,
                });
            }
        }
    }
    SideIdealCheck {
        side,
        holds: witnesses.is_empty(),
        witnesses,
    }
}

/// `supp(p_x * p_a) ⊆ I` for all `x ∈ K, a ∈ I`?
pub fn is_left_ideal(s: &Semihypergroup, i: &Subset) -> Result<SideIdealCheck, IdealsError> {
    validate(s, i)?;
    Ok(side_check(s, i, Side::Left))
}

/// `supp(p_a * p_x) ⊆ I` for all `a ∈ I, x ∈ K`?
pub fn is_right_ideal(s: &Semihypergroup, i: &Subset) -> Result<SideIdealCheck, IdealsError> {
    validate(s, i)?;
    Ok(side_check(s, i, Side::Right))
}

/// `K * {a}`, the principal left ideal generated by `a`.
pub fn principal_left_ideal(s: &Semihypergroup, a: usize) -> Subset {
    s.set_convolve(&Subset::full(s.size()), &Subset::singleton(s.size(), a))
}

/// `{a} * K`, the principal right ideal generated by `a`.
pub fn principal_right_ideal(s: &Semihypergroup, a: usize) -> Subset {
    s.set_convolve(&Subset::singleton(s.size(), a), &Subset::full(s.size()))
}

/// Smallest set containing `seed` that is closed under taking supports of
/// products with the whole carrier on the outer side. These closures are
/// exactly the minimal one-sided ideals containing the seed.
fn closure(s: &Semihypergroup, seed: usize, side: Side) -> Subset {
    let n = s.size();
    let mut t = Subset::singleton(n, seed);
    loop {
        let mut next = t.clone();
        for a in t.iter() {
            for x in 0..n {
                let (lf, rf) = match side {
                    Side::Left => (x, a),
                    Side::Right => (a, x),
                };
                next.union_with(s.support_of(lf, rf));
            }
        }
        if next == t {
            return t;
        }
        t = next;
    }
}

/// Two-sided closure of a singleton: smallest two-sided ideal containing it.
fn two_sided_closure(s: &Semihypergroup, seed: usize) -> Subset {
    let n = s.size();
    let mut t = Subset::singleton(n, seed);
    loop {
        let mut next = t.clone();
        for a in t.iter() {
            for x in 0..n {
                next.union_with(s.support_of(x, a));
                next.union_with(s.support_of(a, x));
            }
        }
        if next == t {
            return t;
        }
        t = next;
    }
}

/// All nonempty subsets of `within` as bitsets over the same universe.
fn power_set_nonempty(universe: usize, within: &Subset) -> Vec<Subset> {
    let members = within.indices();
    let k = members.len();
    assert!(k < usize::BITS as usize);
    (1usize..(1 << k))
        .map(|mask| {
            Subset::from_indices(
                universe,
                members
                    .iter()
                    .enumerate()
                    .filter(|(j, _)| mask & (1 << *j) != 0)
                    .map(|(_, &m)| m),
            )
        })
        .collect()
}

fn side_holds(s: &Semihypergroup, i: &Subset, side: Side) -> bool {
    i.iter().all(|a| {
        (0..s.size()).all(|x| {
            let (lf, rf) = match side {
                Side::Left => (x, a),
                Side::Right => (a, x),
            };
            s.support_of(lf, rf).is_subset_of(i)
        })
    })
}

/// Minimal one-sided ideals by exhaustive power-set scan. Exponential in
/// the carrier size; the oracle half of the enumeration pair.
pub fn minimal_side_ideals_scan(s: &Semihypergroup, side: Side) -> Vec<Subset> {
    let all: Vec<Subset> = power_set_nonempty(s.size(), &Subset::full(s.size()))
        .into_iter()
        .filter(|i| side_holds(s, i, side))
        .collect();
    let mut minimal: Vec<Subset> = all
        .iter()
        .filter(|i| !all.iter().any(|j| j != *i && j.is_subset_of(i)))
        .cloned()
        .collect();
    minimal.sort_by_key(|m| m.indices());
    minimal
}

/// Minimal one-sided ideals as inclusion-minimal singleton closures.
pub fn minimal_side_ideals_closure(s: &Semihypergroup, side: Side) -> Vec<Subset> {
    let mut closures: Vec<Subset> = (0..s.size()).map(|a| closure(s, a, side)).collect();
    closures.sort_by_key(|m| m.indices());
    closures.dedup();
    let mut minimal: Vec<Subset> = closures
        .iter()
        .filter(|c| !closures.iter().any(|d| d != *c && d.is_subset_of(c)))
        .cloned()
        .collect();
    minimal.sort_by_key(|m| m.indices());
    minimal
}

fn minimal_side_ideals_bounded(
    s: &Semihypergroup,
    side: Side,
    scan_bound: usize,
) -> Result<Vec<Subset>, TheoremViolation> {
    let out = if s.size() <= scan_bound {
        minimal_side_ideals_scan(s, side)
    } else {
        minimal_side_ideals_closure(s, side)
    };
    if out.is_empty() {
        return Err(TheoremViolation(format!(
            "a finite semihypergroup must have a minimal {side} ideal"
        )));
    }
    for (i, a) in out.iter().enumerate() {
        for b in out.iter().skip(i + 1) {
            if !a.is_disjoint_from(b) {
                return Err(TheoremViolation(format!(
                    "distinct minimal {side} ideals must be disjoint"
                )));
            }
        }
    }
    Ok(out)
}

/// The exhaustive list of minimal left ideals, canonically ordered, with
/// disjointness and nonemptiness checked.
pub fn minimal_left_ideals(s: &Semihypergroup) -> Result<Vec<Subset>, TheoremViolation> {
    minimal_side_ideals_bounded(s, Side::Left, DEFAULT_SCAN_BOUND)
}

pub fn minimal_right_ideals(s: &Semihypergroup) -> Result<Vec<Subset>, TheoremViolation> {
    minimal_side_ideals_bounded(s, Side::Right, DEFAULT_SCAN_BOUND)
}

/// As the above with an explicit scan/closure crossover bound.
pub fn minimal_side_ideals_with_bound(
    s: &Semihypergroup,
    side: Side,
    scan_bound: usize,
) -> Result<Vec<Subset>, TheoremViolation> {
    minimal_side_ideals_bounded(s, side, scan_bound)
}

/// Minimality check via all three equivalent criteria, which must agree:
///
/// 1. no proper sub-left-ideal (power-set scan of the subset when it is
///    small, singleton closures otherwise),
/// 2. `K * {a} = I` for every `a ∈ I`,
/// 3. `I * {a} = I` for every `a ∈ I`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MinimalityCheck {
    pub minimal: bool,
    pub no_proper_subideal: bool,
    pub full_translates_back: bool,
    pub internal_translates_back: bool,
    /// A proper sub-left-ideal, when criterion 1 fails.
    pub proper_subideal: Option<Subset>,
    /// An `a ∈ I` with `K*{a} ≠ I`, when criterion 2 fails.
    pub bad_generator: Option<usize>,
}

pub fn is_minimal_left_ideal(
    s: &Semihypergroup,
    i: &Subset,
    scan_bound: usize,
) -> Result<MinimalityCheck, IdealsError> {
    validate(s, i)?;
    if !side_holds(s, i, Side::Left) {
        return Err(IdealsError::NotALeftIdeal);
    }
    let (no_proper_subideal, proper_subideal) = if i.len() <= scan_bound {
        let sub = power_set_nonempty(s.size(), i)
            .into_iter()
            .find(|j| j != i && side_holds(s, j, Side::Left));
        (sub.is_none(), sub)
    } else {
        let sub = i
            .iter()
            .map(|a| closure(s, a, Side::Left))
            .find(|c| c != i);
        (sub.is_none(), sub)
    };
    let bad_generator = i.iter().find(|&a| &principal_left_ideal(s, a) != i);
    let full_translates_back = bad_generator.is_none();
    let internal_translates_back = i
        .iter()
        .all(|a| &s.set_convolve(i, &Subset::singleton(s.size(), a)) == i);
    if no_proper_subideal != full_translates_back
        || no_proper_subideal != internal_translates_back
    {
        return Err(TheoremViolation(format!(
            "minimality criteria disagree on {:?}: no-proper-subideal={no_proper_subideal}, \
             K*{{a}}=I={full_translates_back}, I*{{a}}=I={internal_translates_back}",
            i.indices()
        ))
        .into());
    }
    Ok(MinimalityCheck {
        minimal: no_proper_subideal,
        no_proper_subideal,
        full_translates_back,
        internal_translates_back,
        proper_subideal,
        bad_generator,
    })
}

/// Kernel: the intersection of all two-sided ideals, computed as the
/// intersection of the two-sided closures of all singletons. Nonempty on a
/// finite carrier.
pub fn kernel(s: &Semihypergroup) -> Result<Subset, TheoremViolation> {
    let mut out = Subset::full(s.size());
    for a in 0..s.size() {
        out = out.intersection(&two_sided_closure(s, a));
    }
    if out.is_empty() {
        return Err(TheoremViolation(
            "the kernel of a finite semihypergroup must be nonempty".into(),
        ));
    }
    Ok(out)
}

/// Both inclusions of the kernel sandwich, for every minimal one-sided
/// ideal:
///
/// * `∪ minimal left ideals ⊆ Ker(K) ⊆ ∪_x I*{x}` for each minimal left `I`,
/// * `∪ minimal right ideals ⊆ Ker(K) ⊆ ∪_x {x}*J` for each minimal right `J`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SandwichReport {
    pub kernel: Subset,
    pub minimal_left: Vec<Subset>,
    pub minimal_right: Vec<Subset>,
    pub left_union: Subset,
    pub right_union: Subset,
    /// Per minimal left ideal `I`: the covering set `∪_{x∈K} I*{x}`.
    pub left_covers: Vec<Subset>,
    /// Per minimal right ideal `J`: the covering set `∪_{x∈K} {x}*J`.
    pub right_covers: Vec<Subset>,
}

pub fn kernel_sandwich_check(s: &Semihypergroup) -> Result<SandwichReport, TheoremViolation> {
    let kernel = kernel(s)?;
    let minimal_left = minimal_left_ideals(s)?;
    let minimal_right = minimal_right_ideals(s)?;
    let n = s.size();
    let mut left_union = Subset::empty(n);
    for i in &minimal_left {
        left_union.union_with(i);
    }
    let mut right_union = Subset::empty(n);
    for j in &minimal_right {
        right_union.union_with(j);
    }
    let left_covers: Vec<Subset> = minimal_left
        .iter()
        .map(|i| {
            let mut c = Subset::empty(n);
            for x in 0..n {
                c.union_with(&s.set_convolve(i, &Subset::singleton(n, x)));
            }
            c
        })
        .collect();
    let right_covers: Vec<Subset> = minimal_right
        .iter()
        .map(|j| {
            let mut c = Subset::empty(n);
            for x in 0..n {
                c.union_with(&s.set_convolve(&Subset::singleton(n, x), j));
            }
            c
        })
        .collect();
    if !left_union.is_subset_of(&kernel) {
        return Err(TheoremViolation(
            "union of minimal left ideals escapes the kernel".into(),
        ));
    }
    if !right_union.is_subset_of(&kernel) {
        return Err(TheoremViolation(
            "union of minimal right ideals escapes the kernel".into(),
        ));
    }
    for c in &left_covers {
        if !kernel.is_subset_of(c) {
            return Err(TheoremViolation(
                "kernel escapes a minimal-left-ideal cover".into(),
            ));
       }
    }
    for c in &right_covers {
        if !kernel.is_subset_of(c) {
            return Err(TheoremViolation(
                "kernel escapes a minimal-right-ideal cover".into(),
            ));
        }
    }
    Ok(SandwichReport {
        kernel,
        minimal_left,
        minimal_right,
        left_union,
        right_union,
        left_covers,
        right_covers,
    })
}

/// Full classification of one subset, as surfaced by the CLI: sidedness
/// with witnesses, minimality when it applies, and the principal ideals
/// generated by each member.
#[derive(Debug, Clone)]
pub struct IdealReport {
    pub subset: Subset,
    pub left: SideIdealCheck,
    pub right: SideIdealCheck,
    pub is_two_sided: bool,
    pub minimality: Option<MinimalityCheck>,
    /// `(a, K*{a})` for each member `a`.
    pub principal_left: Vec<(usize, Subset)>,
    /// `(a, {a}*K)` for each member `a`.
    pub principal_right: Vec<(usize, Subset)>,
}

pub fn ideal_report(
    s: &Semihypergroup,
    subset: &Subset,
    scan_bound: usize,
) -> Result<IdealReport, IdealsError> {
    let left = is_left_ideal(s, subset)?;
    let right = is_right_ideal(s, subset)?;
    let minimality = if left.holds {
        Some(is_minimal_left_ideal(s, subset, scan_bound)?)
    } else {
        None
    };
    Ok(IdealReport {
        subset: subset.clone(),
        is_two_sided: left.holds && right.holds,
        left,
        right,
        minimality,
        principal_left: subset
            .iter()
            .map(|a| (a, principal_left_ideal(s, a)))
            .collect(),
        principal_right: subset
            .iter()
            .map(|a| (a, principal_right_ideal(s, a)))
            .collect(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::{builtin_fixture, from_group, left_zero_pair, CayleyTable};

    fn remark() -> Semihypergroup {
        builtin_fixture("remark_5_9").unwrap()
    }

    fn subset(s: &Semihypergroup, names: &[&str]) -> Subset {
        Subset::from_indices(
            s.size(),
            names.iter().map(|n| s.carrier().index_of(n).unwrap()),
        )
    }

    #[test]
    fn left_ideal_tests_on_the_remark_fixture() {
        let s = remark();
        assert!(is_left_ideal(&s, &subset(&s, &["a"])).unwrap().holds);
        let check = is_left_ideal(&s, &subset(&s, &["b"])).unwrap();
        assert!(!check.holds);
        // p_a * p_b has support {a, b} ⊄ {b}
        assert!(check.witnesses.contains(&IdealWitness {
            left_factor: 0,
            right_factor: 1,
            escaped: 0
        }));
        assert!(is_left_ideal(&s, &Subset::full(3)).unwrap().holds);
    }

    #[test]
    fn right_ideal_tests() {
        let s = remark();
        let check = is_right_ideal(&s, &subset(&s, &["a"])).unwrap();
        assert!(!check.holds);
        assert!(check.witnesses.contains(&IdealWitness {
            left_factor: 0,
            right_factor: 1,
            escaped: 1
        }));
        assert!(is_right_ideal(&s, &Subset::full(3)).unwrap().holds);
        // every proper nonempty subset of S4/D8 fails to be a right ideal
        let c = builtin_fixture("s4_mod_d8").unwrap();
        for i in super::power_set_nonempty(3, &Subset::full(3)) {
            if i.len() < 3 {
                assert!(!is_right_ideal(&c, &i).unwrap().holds, "{i:?}");
            }
        }
    }

    #[test]
    fn empty_subset_rejected() {
        let s = remark();
        assert_eq!(
            is_left_ideal(&s, &Subset::empty(3)),
            Err(IdealsError::EmptySubset)
        );
        assert!(matches!(
            is_left_ideal(&s, &Subset::empty(5)),
            Err(IdealsError::WrongUniverse { expected: 3, got: 5 })
        ));
    }

    #[test]
    fn principal_ideals_on_the_remark_fixture() {
        let s = remark();
        assert_eq!(principal_left_ideal(&s, 0).indices(), vec![0]);
        assert_eq!(principal_left_ideal(&s, 1).indices(), vec![0, 1]);
        assert_eq!(principal_left_ideal(&s, 2).indices(), vec![0, 2]);
        // principal left ideals are left ideals
        for a in 0..3 {
            let i = principal_left_ideal(&s, a);
            assert!(is_left_ideal(&s, &i).unwrap().holds);
        }
        // in a group every principal ideal is everything
        let g = from_group(&CayleyTable::symmetric(3));
        for a in 0..6 {
            assert_eq!(principal_left_ideal(&g, a).len(), 6);
            assert_eq!(principal_right_ideal(&g, a).len(), 6);
        }
    }

    #[test]
    fn minimality_on_the_remark_fixture() {
        let s = remark();
        let a = subset(&s, &["a"]);
        let check = is_minimal_left_ideal(&s, &a, DEFAULT_SCAN_BOUND).unwrap();
        assert!(check.minimal);
        // {a}*{b} = {a,b} is a left ideal that fails minimality: translates
        // of a minimal left ideal need not stay minimal.
        let ab = s.set_convolve(&a, &subset(&s, &["b"]));
        assert_eq!(ab.indices(), vec![0, 1]);
        assert!(is_left_ideal(&s, &ab).unwrap().holds);
        let check = is_minimal_left_ideal(&s, &ab, DEFAULT_SCAN_BOUND).unwrap();
        assert!(!check.minimal);
        assert_eq!(
            check.proper_subideal.as_ref().map(|p| p.indices()),
            Some(vec![0])
        );
        assert_eq!(check.bad_generator, Some(0));
        // same for {a}*{c}
        let ac = s.set_convolve(&a, &subset(&s, &["c"]));
        assert_eq!(ac.indices(), vec![0, 2]);
        assert!(is_left_ideal(&s, &ac).unwrap().holds);
        assert!(!is_minimal_left_ideal(&s, &ac, DEFAULT_SCAN_BOUND)
            .unwrap()
            .minimal);
    }

    #[test]
    fn minimality_precondition_enforced() {
        let s = remark();
        assert_eq!(
            is_minimal_left_ideal(&s, &subset(&s, &["b"]), DEFAULT_SCAN_BOUND),
            Err(IdealsError::NotALeftIdeal)
        );
    }

    #[test]
    fn groups_have_no_proper_ideals() {
        let g = from_group(&CayleyTable::symmetric(3));
        let whole = Subset::full(6);
        assert!(is_minimal_left_ideal(&g, &whole, DEFAULT_SCAN_BOUND)
            .unwrap()
            .minimal);
        assert_eq!(minimal_left_ideals(&g).unwrap(), vec![whole.clone()]);
        assert_eq!(kernel(&g).unwrap(), whole);
    }

    #[test]
    fn enumeration_on_fixtures() {
        let s = remark();
        assert_eq!(
            minimal_left_ideals(&s).unwrap(),
            vec![Subset::singleton(3, 0)]
        );
        assert_eq!(minimal_right_ideals(&s).unwrap(), vec![Subset::full(3)]);

        let c = builtin_fixture("s4_mod_d8").unwrap();
        assert_eq!(minimal_left_ideals(&c).unwrap(), vec![Subset::full(3)]);

        let lz = left_zero_pair();
        assert_eq!(
            minimal_left_ideals(&lz).unwrap(),
            vec![Subset::singleton(2, 0), Subset::singleton(2, 1)]
        );
        assert_eq!(minimal_right_ideals(&lz).unwrap(), vec![Subset::full(2)]);
    }

    #[test]
    fn scan_and_closure_strategies_agree_on_fixtures() {
        for name in crate::construct::FIXTURE_NAMES {
            let s = builtin_fixture(name).unwrap();
            for side in [Side::Left, Side::Right] {
                assert_eq!(
                    minimal_side_ideals_scan(&s, side),
                    minimal_side_ideals_closure(&s, side),
                    "{name} {side}"
                );
            }
        }
        let lz = left_zero_pair();
        for side in [Side::Left, Side::Right] {
            assert_eq!(
                minimal_side_ideals_scan(&lz, side),
                minimal_side_ideals_closure(&lz, side)
            );
        }
    }

    #[test]
    fn kernel_on_fixtures() {
        assert_eq!(kernel(&remark()).unwrap(), Subset::full(3));
        assert_eq!(kernel(&left_zero_pair()).unwrap(), Subset::full(2));
        assert_eq!(
            kernel(&builtin_fixture("example_3_2_default").unwrap()).unwrap(),
            Subset::full(3)
        );
    }

    #[test]
    fn kernel_is_a_two_sided_ideal_when_nonempty() {
        for name in crate::construct::FIXTURE_NAMES {
            let s = builtin_fixture(name).unwrap();
            let k = kernel(&s).unwrap();
            assert!(is_left_ideal(&s, &k).unwrap().holds, "{name}");
            assert!(is_right_ideal(&s, &k).unwrap().holds, "{name}");
        }
    }

    #[test]
    fn sandwich_on_fixtures() {
        // remark: {a} ⊆ K and K ⊆ {a} ∪ {a,b} ∪ {a,c} = K
        let r = kernel_sandwich_check(&remark()).unwrap();
        assert_eq!(r.kernel, Subset::full(3));
        assert_eq!(r.left_union.indices(), vec![0]);
        assert_eq!(r.left_covers.len(), 1);
        assert_eq!(r.left_covers[0], Subset::full(3));

        // groups: everything is the whole carrier
        let g = from_group(&CayleyTable::cyclic(4));
        let r = kernel_sandwich_check(&g).unwrap();
        assert_eq!(r.kernel, Subset::full(4));
        assert_eq!(r.left_union, Subset::full(4));

        // S4/D8: all three sets are K
        let r = kernel_sandwich_check(&builtin_fixture("s4_mod_d8").unwrap()).unwrap();
        assert_eq!(r.kernel, Subset::full(3));
        assert_eq!(r.left_union, Subset::full(3));
        assert_eq!(r.minimal_left, vec![Subset::full(3)]);

        kernel_sandwich_check(&left_zero_pair()).unwrap();
    }

    #[test]
    fn union_of_left_ideals_is_a_left_ideal() {
        let s = remark();
        let ab = subset(&s, &["a", "b"]);
        let ac = subset(&s, &["a", "c"]);
        assert!(is_left_ideal(&s, &ab).unwrap().holds);
        assert!(is_left_ideal(&s, &ac).unwrap().holds);
        assert!(is_left_ideal(&s, &ab.union(&ac)).unwrap().holds);
    }

    #[test]
    fn translates_of_minimal_left_ideals_are_left_ideals() {
        // I*{x} is always a left ideal when I is minimal; minimality of the
        // translate can fail, and the counterexample fixture is the
        // regression for that.
        for name in crate::construct::FIXTURE_NAMES {
            let s = builtin_fixture(name).unwrap();
            for i in minimal_left_ideals(&s).unwrap() {
                for x in 0..s.size() {
                    let t = s.set_convolve(&i, &Subset::singleton(s.size(), x));
                    assert!(is_left_ideal(&s, &t).unwrap().holds, "{name}, x={x}");
                }
            }
        }
    }

    #[test]
    fn k_times_minimal_ideal_is_itself() {
        for name in crate::construct::FIXTURE_NAMES {
            let s = builtin_fixture(name).unwrap();
            for j in minimal_left_ideals(&s).unwrap() {
                assert_eq!(s.set_convolve(&Subset::full(s.size()), &j), j, "{name}");
            }
        }
    }

    #[test]
    fn ideal_report_shape() {
        let s = remark();
        let rep = ideal_report(&s, &subset(&s, &["a"]), DEFAULT_SCAN_BOUND).unwrap();
        assert!(rep.left.holds);
        assert!(!rep.right.holds);
        assert!(!rep.is_two_sided);
        assert!(rep.minimality.unwrap().minimal);
        assert_eq!(rep.principal_left[0].1.indices(), vec![0]);
        let rep = ideal_report(&s, &subset(&s, &["b"]), DEFAULT_SCAN_BOUND).unwrap();
        assert!(!rep.left.holds);
        assert!(rep.minimality.is_none());
    }
}
