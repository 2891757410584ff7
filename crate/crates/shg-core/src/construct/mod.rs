//! Constructors: every standard source of finite semihypergroups.
//!
//! * [`from_semigroup`] — a semigroup with `p_x * p_y = p_{x·y}`.
//! * [`three_element_parametric`] — the parametric commutative family on
//!   `{e, a, b}`.
//! * [`coset_space`] — left cosets `G/H` with the Haar-averaged product.
//! * [`double_coset_space`] — double cosets `G//H`; a hypergroup.
//! * [`orbit_space`] — orbits of an affine action, doubly averaged.
//! * [`builtin_fixture`] — bundled small examples used throughout the test
//!   suite and the CLI.
//!
//! Quotient-style constructors verify well-definedness by recomputing every
//! entry with every alternate representative pair; a dependence on the
//! representative would be a library bug and is reported as such.

pub mod cayley;

pub use cayley::{ActionDefect, AffineAction, CayleyTable, SemigroupTable, SubgroupDefect, TableDefect};

use crate::element::{ElementSet, ElementSetError, Subset};
use crate::measure::Measure;
use crate::rational::{rat, Rational};
use crate::semihypergroup::{AxiomFailure, ConvolutionTable, Semihypergroup};
use num_traits::{One, Signed, Zero};
use std::sync::Arc;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConstructError {
    #[error(transparent)]
    Table(#[from] TableDefect),
    #[error(transparent)]
    Subgroup(#[from] SubgroupDefect),
    #[error(transparent)]
    Action(#[from] ActionDefect),
    #[error("parameter constraint violated: {0}")]
    ConstraintViolation(String),
    #[error("constructed table fails the axioms: {0}")]
    Axioms(#[from] AxiomFailure),
    #[error("entry depends on the choice of representatives at block pair ({x}, {y}); this is a library bug")]
    RepresentativeDependence { x: usize, y: usize },
    #[error("unknown fixture {0:?}; available: s4_mod_d8, remark_5_9, example_3_2_default")]
    UnknownFixture(String),
    #[error(transparent)]
    Elements(#[from] ElementSetError),
}

/// `p_x * p_y = p_{x·y}` over a verified associative table.
pub fn from_semigroup(t: &SemigroupTable) -> Semihypergroup {
    let carrier = Arc::clone(t.elements());
    let table = ConvolutionTable::from_fn(Arc::clone(&carrier), |x, y| {
        Measure::point_mass(Arc::clone(&carrier), t.product(x, y))
    })
    .expect("square table");
    Semihypergroup::new(table).expect("point-mass tables inherit associativity")
}

/// Convenience: a group as a (trivial) semihypergroup.
pub fn from_group(g: &CayleyTable) -> Semihypergroup {
    from_semigroup(g.semigroup_table())
}

/// The parametric table on `{e, a, b}`:
///
/// ```text
/// a*a = x1 e + x2 a + x3 b      a*b = b*a = z1 a + z2 b
/// b*b = y1 e + y2 a + y3 b      e is an identity
/// ```
///
/// Parameters must be nonnegative with `x1+x2+x3 = y1+y2+y3 = z1+z2 = 1` and
/// `y1·x3 = z1·x1`. Those published constraints are necessary but not
/// sufficient for associativity, so the constructor always runs the axiom
/// checker and fails loudly when the table is not associative. See
/// [`example_3_2_params`] for the sufficient closed form.
pub fn three_element_parametric(
    x: [Rational; 3],
    y: [Rational; 3],
    z: [Rational; 2],
) -> Result<Semihypergroup, ConstructError> {
    let bad = |msg: String| Err(ConstructError::ConstraintViolation(msg));
    for (name, val) in [
        ("x1", &x[0]), ("x2", &x[1]), ("x3", &x[2]),
        ("y1", &y[0]), ("y2", &y[1]), ("y3", &y[2]),
        ("z1", &z[0]), ("z2", &z[1]),
    ] {
        if val.is_negative() {
            return bad(format!("{name} = {val} is negative"));
        }
    }
    let sum = |v: &[Rational]| v.iter().fold(Rational::zero(), |a, b| a + b);
    if !sum(&x).is_one() {
        return bad(format!("x1+x2+x3 = {} instead of 1", sum(&x)));
    }
    if !sum(&y).is_one() {
        return bad(format!("y1+y2+y3 = {} instead of 1", sum(&y)));
    }
    if !sum(&z).is_one() {
        return bad(format!("z1+z2 = {} instead of 1", sum(&z)));
    }
    if &y[0] * &x[2] != &z[0] * &x[0] {
        return bad(format!(
            "y1·x3 = {} differs from z1·x1 = {}",
            &y[0] * &x[2],
            &z[0] * &x[0]
        ));
    }
    let es = Arc::new(ElementSet::new(["e", "a", "b"]).expect("fixed names"));
    let m = |w: [Rational; 3]| Measure::new(Arc::clone(&es), w.to_vec()).expect("length 3");
    let zero = Rational::zero;
    let one = Rational::one;
    let table = ConvolutionTable::new(
        Arc::clone(&es),
        vec![
            m([one(), zero(), zero()]),                            // e*e
            m([zero(), one(), zero()]),                            // e*a
            m([zero(), zero(), one()]),                            // e*b
            m([zero(), one(), zero()]),                            // a*e
            m([x[0].clone(), x[1].clone(), x[2].clone()]),         // a*a
            m([zero(), z[0].clone(), z[1].clone()]),               // a*b
            m([zero(), zero(), one()]),                            // b*e
            m([zero(), z[0].clone(), z[1].clone()]),               // b*a
            m([y[0].clone(), y[1].clone(), y[2].clone()]),         // b*b
        ],
    )
    .expect("shape");
    Ok(Semihypergroup::new(table)?)
}

/// A parameter assignment that provably satisfies associativity: given
/// `x1, x3 > 0` and `z1`, the remaining values are forced to
/// `y1 = z1·x1/x3`, `y2 = z1·z2/x3`, `y3 = 1 − y1 − y2` (which must come out
/// nonnegative). Returns the full `(x, y, z)` triple.
pub fn example_3_2_params(
    x1: Rational,
    x3: Rational,
    z1: Rational,
) -> Result<([Rational; 3], [Rational; 3], [Rational; 2]), ConstructError> {
    let one = Rational::one();
    if x3.is_zero() {
        return Err(ConstructError::ConstraintViolation(
            "x3 must be positive for this parametrisation".into(),
        ));
    }
    let x2 = &one - &x1 - &x3;
    let z2 = &one - &z1;
    let y1 = &z1 * &x1 / &x3;
    let y2 = &z1 * &z2 / &x3;
    let y3 = &one - &y1 - &y2;
    for (name, v) in [("x1", &x1), ("x2", &x2), ("x3", &x3), ("y1", &y1), ("y2", &y2), ("y3", &y3), ("z1", &z1), ("z2", &z2)] {
        if v.is_negative() {
            return Err(ConstructError::ConstraintViolation(format!(
                "derived parameter {name} = {v} is negative"
            )));
        }
    }
    Ok(([x1, x2, x3], [y1, y2, y3], [z1, z2]))
}

/// Partition `0..n` by a representative function, blocks ordered by their
/// least member. Returns (block index per element, least member per block).
fn partition(n: usize, rep_of: impl Fn(usize) -> usize) -> (Vec<usize>, Vec<usize>) {
    let reps_per_elem: Vec<usize> = (0..n).map(rep_of).collect();
    let mut reps: Vec<usize> = reps_per_elem.clone();
    reps.sort_unstable();
    reps.dedup();
    let block_of = reps_per_elem
        .iter()
        .map(|r| reps.binary_search(r).expect("rep present"))
        .collect();
    (block_of, reps)
}

/// Shared skeleton of the quotient constructors: a block structure on `G`
/// and an entry rule giving, for a pair of *member* elements, the averaged
/// block measure. Every entry is recomputed for every representative pair;
/// any disagreement is reported as [`ConstructError::RepresentativeDependence`].
fn quotient_semihypergroup(
    g: &CayleyTable,
    block_of: &[usize],
    reps: &[usize],
    name_of_block: impl Fn(usize, usize) -> String,
    entry_rule: impl Fn(usize, usize) -> Vec<Rational>,
) -> Result<Semihypergroup, ConstructError> {
    let k = reps.len();
    let names: Vec<String> = reps
        .iter()
        .enumerate()
        .map(|(b, &r)| name_of_block(b, r))
        .collect();
    let es = Arc::new(ElementSet::new(names)?);
    let members: Vec<Vec<usize>> = (0..k)
        .map(|b| (0..g.size()).filter(|&x| block_of[x] == b).collect())
        .collect();
    let mut entries = Vec::with_capacity(k * k);
    for bx in 0..k {
        for by in 0..k {
            let canonical = entry_rule(reps[bx], reps[by]);
            for &x in &members[bx] {
                for &y in &members[by] {
                    if entry_rule(x, y) != canonical {
                        return Err(ConstructError::RepresentativeDependence { x: bx, y: by });
                    }
                }
            }
            entries.push(Measure::new(Arc::clone(&es), canonical).expect("length k"));
        }
    }
    let table = ConvolutionTable::new(es, entries).expect("square");
    Ok(Semihypergroup::new(table)?)
}

/// Left coset space `G/H` with `p_xH * p_yH = (1/|H|) Σ_{t∈H} p_(xty)H`.
///
/// Cosets are named `<rep>H` after their least-index member; the coset of
/// the identity is named plain `H`.
pub fn coset_space(g: &CayleyTable, h: &Subset) -> Result<Semihypergroup, ConstructError> {
    g.verify_subgroup(h)?;
    let n = g.size();
    let rep_of = |x: usize| h.iter().map(|t| g.product(x, t)).min().expect("H nonempty");
    let (block_of, reps) = partition(n, rep_of);
    let identity_block = block_of[g.identity()];
    let share = rat(1, h.len() as i64);
    quotient_semihypergroup(
        g,
        &block_of,
        &reps,
        |b, r| {
            if b == identity_block {
                "H".to_string()
            } else {
                format!("{}H", g.elements().name(r))
            }
        },
        |x, y| {
            let mut w = vec![Rational::zero(); reps.len()];
            for t in h.iter() {
                w[block_of[g.product(g.product(x, t), y)]] += &share;
            }
            w
        },
    )
}

/// Double coset space `G//H` with `p_HxH * p_HyH = (1/|H|) Σ_{t∈H} p_H(xty)H`.
///
/// Double cosets are named `H<rep>H`; the double coset of the identity (that
/// is, `H` itself) is named plain `H`.
pub fn double_coset_space(g: &CayleyTable, h: &Subset) -> Result<Semihypergroup, ConstructError> {
    g.verify_subgroup(h)?;
    let n = g.size();
    let rep_of = |x: usize| {
        let mut least = usize::MAX;
        for h1 in h.iter() {
            for h2 in h.iter() {
                least = least.min(g.product(g.product(h1, x), h2));
            }
        }
        least
    };
    let (block_of, reps) = partition(n, rep_of);
    let identity_block = block_of[g.identity()];
    let share = rat(1, h.len() as i64);
    quotient_semihypergroup(
        g,
        &block_of,
        &reps,
        |b, r| {
            if b == identity_block {
                "H".to_string()
            } else {
                format!("H{}H", g.elements().name(r))
            }
        },
        |x, y| {
            let mut w = vec![Rational::zero(); reps.len()];
            for t in h.iter() {
                w[block_of[g.product(g.product(x, t), y)]] += &share;
            }
            w
        },
    )
}

/// Orbit space of an affine action, with the doubly averaged product
/// `p_x^H * p_y^H = (1/|H|²) Σ_{s,t} p_(x^s · y^t)^H`.
///
/// Orbits are named `<rep>^H` after their least-index member.
pub fn orbit_space(action: &AffineAction) -> Result<Semihypergroup, ConstructError> {
    let g = action.target();
    let hn = action.acting().size();
    let rep_of = |x: usize| action.orbit(x).least().expect("orbits nonempty");
    let (block_of, reps) = partition(g.size(), rep_of);
    let share = rat(1, (hn * hn) as i64);
    quotient_semihypergroup(
        g,
        &block_of,
        &reps,
        |_, r| format!("{}^H", g.elements().name(r)),
        |x, y| {
            let mut w = vec![Rational::zero(); reps.len()];
            for s in 0..hn {
                for t in 0..hn {
                    let prod = g.product(action.apply(s, x), action.apply(t, y));
                    w[block_of[prod]] += &share;
                }
            }
            w
        },
    )
}

pub const FIXTURE_NAMES: &[&str] = &["s4_mod_d8", "remark_5_9", "example_3_2_default"];

/// Bundled example structures by name; see the individual constructors.
pub fn builtin_fixture(name: &str) -> Result<Semihypergroup, ConstructError> {
    match name {
        "s4_mod_d8" => Ok(s4_mod_d8()),
        "remark_5_9" => Ok(remark_5_9()),
        "example_3_2_default" => Ok(example_3_2_default()),
        other => Err(ConstructError::UnknownFixture(other.to_string())),
    }
}

fn table_from_flat(names: &[&str], rows: &[[(i64, i64); 3]]) -> ConvolutionTable {
    let es = Arc::new(ElementSet::new(names.iter().copied()).expect("fixed names"));
    let n = es.len();
    let entries = rows
        .iter()
        .map(|row| {
            Measure::new(Arc::clone(&es), row.iter().map(|&(p, q)| rat(p, q)).collect())
                .expect("row length")
        })
        .collect::<Vec<_>>();
    assert_eq!(entries.len(), n * n);
    ConvolutionTable::new(es, entries).expect("shape")
}

/// The published three-element counterexample table on `{a, b, c}`:
///
/// ```text
///       a     b           c
/// a     a     ½(a+b)      ½(a+c)
/// b     a     ½(a+b)      ½(a+c)
/// c     a     b           c
/// ```
///
/// `{a}` is a minimal left ideal while `{a}*{b} = {a,b}` and
/// `{a}*{c} = {a,c}` are left ideals that are not minimal. As printed, the
/// weights are *not* associative — the axiom checker pinpoints
/// `(a*a)*b ≠ a*(a*b)` — and no associative choice of weights can keep both
/// `{a}` minimal and `supp(a*b) = {a,b}`, so the table is kept verbatim and
/// constructed without the axiom gate. Support-level statements (ideals,
/// kernel, translations, means) are unaffected.
pub fn remark_5_9() -> Semihypergroup {
    let rows = [
        [(1, 1), (0, 1), (0, 1)],
        [(1, 2), (1, 2), (0, 1)],
        [(1, 2), (0, 1), (1, 2)],
        [(1, 1), (0, 1), (0, 1)],
        [(1, 2), (1, 2), (0, 1)],
        [(1, 2), (0, 1), (1, 2)],
        [(1, 1), (0, 1), (0, 1)],
        [(0, 1), (1, 1), (0, 1)],
        [(0, 1), (0, 1), (1, 1)],
    ];
    Semihypergroup::new_unchecked(table_from_flat(&["a", "b", "c"], &rows))
}

/// The left coset space `S4/D8` on `{H, s1H, s2H}` with `s1 = (124)`,
/// `s2 = (142)`:
///
/// ```text
///        H      s1H      s2H
/// H      H      ½(s1H+s2H)  ½(s1H+s2H)
/// s1H    s1H    ½(H+s2H)    ½(H+s2H)
/// s2H    s2H    ½(H+s1H)    ½(H+s1H)
/// ```
///
/// Computed directly from the group data (and reproduced by
/// [`coset_space`]); `x * y` for `y ≠ H` splits evenly over the two cosets
/// other than `x`. `H` is a right identity but not a left one, so this is a
/// semihypergroup that is not a hypergroup.
pub fn s4_mod_d8() -> Semihypergroup {
    let rows = [
        [(1, 1), (0, 1), (0, 1)],
        [(0, 1), (1, 2), (1, 2)],
        [(0, 1), (1, 2), (1, 2)],
        [(0, 1), (1, 1), (0, 1)],
        [(1, 2), (0, 1), (1, 2)],
        [(1, 2), (0, 1), (1, 2)],
        [(0, 1), (0, 1), (1, 1)],
        [(1, 2), (1, 2), (0, 1)],
        [(1, 2), (1, 2), (0, 1)],
    ];
    Semihypergroup::new(table_from_flat(&["H", "s1H", "s2H"], &rows))
        .expect("the honest coset table is associative")
}

/// Default instance of the parametric three-element family:
/// `x = (1/3, 1/6, 1/2)`, `y = (1/3, 1/2, 1/6)`, `z = (1/2, 1/2)`.
/// A commutative hypergroup with identity `e` and the identity involution.
pub fn example_3_2_default() -> Semihypergroup {
    three_element_parametric(
        [rat(1, 3), rat(1, 6), rat(1, 2)],
        [rat(1, 3), rat(1, 2), rat(1, 6)],
        [rat(1, 2), rat(1, 2)],
    )
    .expect("default parameters are associative")
}

/// The two-element semigroup with `x·y = y`, whose singletons are two
/// disjoint minimal left ideals. Standard counterexample input for the
/// amenability results.
pub fn left_zero_pair() -> Semihypergroup {
    let es = Arc::new(ElementSet::new(["x", "y"]).expect("fixed names"));
    let t = SemigroupTable::new(Arc::clone(&es), vec![0, 1, 0, 1]).expect("associative");
    from_semigroup(&t)
}
