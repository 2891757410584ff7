//! Convolution tables and the axiom checker.
//!
//! A [`ConvolutionTable`] assigns a measure to every ordered pair of carrier
//! elements; [`ConvolutionTable::check_axioms`] verifies that each entry is
//! a probability measure and that the bilinear extension is associative on
//! point masses (which by bilinearity gives associativity on all measures).
//! On a finite discrete carrier the two continuity axioms of the general
//! theory hold automatically and are only recorded as such in the report.
//!
//! A [`Semihypergroup`] wraps a table together with cached structure:
//! commutativity, identity elements by side, and the involution if one
//! exists.

use crate::element::{ElementSet, Subset};
use crate::measure::Measure;
use crate::rational::Rational;
use num_traits::{One, Signed, Zero};
use std::fmt;
use std::sync::Arc;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TableError {
    #[error("a table over {n} elements needs {expected} entries, got {got}")]
    WrongEntryCount { n: usize, expected: usize, got: usize },
    #[error("entry ({x}, {y}) lives on a different carrier")]
    EntryCarrierMismatch { x: usize, y: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("unknown element name {0:?}")]
pub struct UnknownElement(pub String);

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConvolveError {
    #[error("measure lives on a different carrier than the semihypergroup")]
    CarrierMismatch,
}

/// The first entry found violating "every `p_x * p_y` is a probability
/// measure".
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ProbabilityViolation {
    NegativeWeight { x: usize, y: usize, at: usize },
    WrongMass { x: usize, y: usize, mass: Rational },
}

/// The first triple found violating associativity of the bilinear
/// extension, with both sides of the failed identity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AssociativityViolation {
    pub x: usize,
    pub y: usize,
    pub z: usize,
    pub lhs: Measure,
    pub rhs: Measure,
}

/// Outcome of the axiom check. Both axioms are always evaluated; neither
/// short-circuits the other, so a report names a violation for each axiom
/// that fails.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AxiomReport {
    pub probability: Option<ProbabilityViolation>,
    pub associativity: Option<AssociativityViolation>,
}

/// Note attached to the two axioms that are about continuity and thus carry
/// no checkable content on a finite discrete carrier.
pub const VACUOUS_ON_FINITE_DISCRETE: &str = "vacuously satisfied (finite discrete)";

impl AxiomReport {
    pub fn passed(&self) -> bool {
        self.probability.is_none() && self.associativity.is_none()
    }

    pub fn describe(&self, carrier: &ElementSet) -> String {
        let mut lines = Vec::new();
        match &self.associativity {
            None => lines.push("A1 (associativity): PASS".to_string()),
            Some(v) => lines.push(format!(
                "A1 (associativity): FAIL at ({}, {}, {}): ({0} * {1}) * {2} = {} but {0} * ({1} * {2}) = {}",
                carrier.name(v.x),
                carrier.name(v.y),
                carrier.name(v.z),
                v.lhs.render(),
                v.rhs.render(),
            )),
        }
        lines.push(format!("A2 (positive continuity): {VACUOUS_ON_FINITE_DISCRETE}"));
        match &self.probability {
            None => lines.push("A3 (probability entries): PASS".to_string()),
            Some(ProbabilityViolation::NegativeWeight { x, y, at }) => lines.push(format!(
                "A3 (probability entries): FAIL at ({}, {}): negative weight on {}",
                carrier.name(*x),
                carrier.name(*y),
                carrier.name(*at),
            )),
            Some(ProbabilityViolation::WrongMass { x, y, mass }) => lines.push(format!(
                "A3 (probability entries): FAIL at ({}, {}): total mass {} instead of 1",
                carrier.name(*x),
                carrier.name(*y),
                mass,
            )),
        }
        lines.push(format!("A4 (support continuity): {VACUOUS_ON_FINITE_DISCRETE}"));
        lines.join("\n")
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("convolution table fails the semihypergroup axioms")]
pub struct AxiomFailure(pub AxiomReport);

/// The `n×n` table `(x, y) ↦ p_x * p_y`, stored row-major with the left
/// factor as the row.
#[derive(Clone, PartialEq, Eq)]
pub struct ConvolutionTable {
    carrier: Arc<ElementSet>,
    entries: Vec<Measure>,
}

impl ConvolutionTable {
    pub fn new(carrier: Arc<ElementSet>, entries: Vec<Measure>) -> Result<Self, TableError> {
        let n = carrier.len();
        if entries.len() != n * n {
            return Err(TableError::WrongEntryCount {
                n,
                expected: n * n,
                got: entries.len(),
            });
        }
        for (k, m) in entries.iter().enumerate() {
            if m.carrier().as_ref() != carrier.as_ref() {
                return Err(TableError::EntryCarrierMismatch { x: k / n, y: k % n });
            }
        }
        Ok(ConvolutionTable { carrier, entries })
    }

    /// Builds the table from a function on index pairs.
    pub fn from_fn(
        carrier: Arc<ElementSet>,
        mut f: impl FnMut(usize, usize) -> Measure,
    ) -> Result<Self, TableError> {
        let n = carrier.len();
        let mut entries = Vec::with_capacity(n * n);
        for x in 0..n {
            for y in 0..n {
                entries.push(f(x, y));
            }
        }
        ConvolutionTable::new(carrier, entries)
    }

    pub fn carrier(&self) -> &Arc<ElementSet> {
        &self.carrier
    }

    pub fn size(&self) -> usize {
        self.carrier.len()
    }

    pub fn entry(&self, x: usize, y: usize) -> &Measure {
        &self.entries[x * self.size() + y]
    }

    /// Bilinear extension: `μ * ν = Σ_x Σ_y μ(x) ν(y) (p_x * p_y)`, exactly.
    pub fn convolve(&self, mu: &Measure, nu: &Measure) -> Result<Measure, ConvolveError> {
        if mu.carrier().as_ref() != self.carrier.as_ref()
            || nu.carrier().as_ref() != self.carrier.as_ref()
        {
            return Err(ConvolveError::CarrierMismatch);
        }
        let mut acc = Measure::zero(Arc::clone(&self.carrier));
        for x in 0..self.size() {
            if mu.weight(x).is_zero() {
                continue;
            }
            for y in 0..self.size() {
                if nu.weight(y).is_zero() {
                    continue;
                }
                let c = mu.weight(x) * nu.weight(y);
                acc.add_scaled_assign(&c, self.entry(x, y));
            }
        }
        Ok(acc)
    }

    /// Checks the two axioms with checkable content on a finite discrete
    /// carrier: every entry a probability measure, and associativity of the
    /// bilinear extension on all point-mass triples. Both are evaluated even
    /// if the first fails.
    pub fn check_axioms(&self) -> AxiomReport {
        let n = self.size();
        let mut probability = None;
        'a3: for x in 0..n {
            for y in 0..n {
                let m = self.entry(x, y);
                for (at, w) in m.weights().iter().enumerate() {
                    if w.is_negative() {
                        probability = Some(ProbabilityViolation::NegativeWeight { x, y, at });
                        break 'a3;
                    }
                }
                let mass = m.mass();
                if !mass.is_one() {
                    probability = Some(ProbabilityViolation::WrongMass { x, y, mass });
                    break 'a3;
                }
            }
        }
        let mut associativity = None;
        'a1: for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    let pz = Measure::point_mass(Arc::clone(&self.carrier), z);
                    let px = Measure::point_mass(Arc::clone(&self.carrier), x);
                    let lhs = self.convolve(self.entry(x, y), &pz).expect("same carrier");
                    let rhs = self.convolve(&px, self.entry(y, z)).expect("same carrier");
                    if lhs != rhs {
                        associativity = Some(AssociativityViolation { x, y, z, lhs, rhs });
                        break 'a1;
                    }
                }
            }
        }
        AxiomReport {
            probability,
            associativity,
        }
    }
}

impl fmt::Debug for ConvolutionTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "ConvolutionTable over {:?}", self.carrier.names())?;
        for x in 0..self.size() {
            for y in 0..self.size() {
                writeln!(
                    f,
                    "  {} * {} = {}",
                    self.carrier.name(x),
                    self.carrier.name(y),
                    self.entry(x, y).render()
                )?;
            }
        }
        Ok(())
    }
}

/// A validated finite semihypergroup: a convolution table plus cached
/// structural facts (commutativity, identity elements by side, involution).
#[derive(Clone)]
pub struct Semihypergroup {
    table: ConvolutionTable,
    supports: Vec<Subset>,
    commutative: bool,
    left_identity: Option<usize>,
    right_identity: Option<usize>,
    involution: Option<Vec<usize>>,
}

impl Semihypergroup {
    /// Validating constructor: runs [`ConvolutionTable::check_axioms`] and
    /// fails with the full report unless both axioms hold.
    pub fn new(table: ConvolutionTable) -> Result<Self, AxiomFailure> {
        let report = table.check_axioms();
        if !report.passed() {
            return Err(AxiomFailure(report));
        }
        Ok(Self::from_table_unchecked(table))
    }

    /// Wraps a table without running the axiom checker.
    ///
    /// This exists for tables that are to be *inspected* — run
    /// [`Self::check_axioms`] afterwards to see exactly what holds. All
    /// support-level operations (ideals, translations, means) are
    /// well-defined for any table whose entries are probability measures.
    pub fn new_unchecked(table: ConvolutionTable) -> Self {
        Self::from_table_unchecked(table)
    }

    fn from_table_unchecked(table: ConvolutionTable) -> Self {
        let n = table.size();
        let supports = (0..n * n)
            .map(|k| table.entry(k / n, k % n).support())
            .collect();
        let commutative = (0..n)
            .all(|x| (0..n).all(|y| table.entry(x, y) == table.entry(y, x)));
        let is_point = |x: usize, y: usize, target: usize| -> bool {
            let m = table.entry(x, y);
            m.weight(target).is_one() && m.support().len() == 1
        };
        let left_identity = (0..n).find(|&e| (0..n).all(|x| is_point(e, x, x)));
        let right_identity = (0..n).find(|&e| (0..n).all(|x| is_point(x, e, x)));
        let identity = match (left_identity, right_identity) {
            (Some(l), Some(r)) if l == r => Some(l),
            _ => None,
        };
        let involution = identity.and_then(|e| find_involution(&table, e));
        Semihypergroup {
            table,
            supports,
            commutative,
            left_identity,
            right_identity,
            involution,
        }
    }

    pub fn table(&self) -> &ConvolutionTable {
        &self.table
    }

    pub fn carrier(&self) -> &Arc<ElementSet> {
        self.table.carrier()
    }

    pub fn size(&self) -> usize {
        self.table.size()
    }

    pub fn check_axioms(&self) -> AxiomReport {
        self.table.check_axioms()
    }

    /// `p_x * p_y`, straight from the table.
    pub fn convolve_points(&self, x: usize, y: usize) -> &Measure {
        self.table.entry(x, y)
    }

    /// Name-based variant of [`Self::convolve_points`].
    pub fn convolve_point_names(&self, x: &str, y: &str) -> Result<&Measure, UnknownElement> {
        let xi = self.carrier().index_of(x).ok_or_else(|| UnknownElement(x.into()))?;
        let yi = self.carrier().index_of(y).ok_or_else(|| UnknownElement(y.into()))?;
        Ok(self.convolve_points(xi, yi))
    }

    pub fn convolve_measures(&self, mu: &Measure, nu: &Measure) -> Result<Measure, ConvolveError> {
        self.table.convolve(mu, nu)
    }

    /// Cached `supp(p_x * p_y)`.
    pub fn support_of(&self, x: usize, y: usize) -> &Subset {
        &self.supports[x * self.size() + y]
    }

    /// Subset convolution `A * B = ∪ supp(p_x * p_y)` over `x ∈ A, y ∈ B`.
    pub fn set_convolve(&self, a: &Subset, b: &Subset) -> Subset {
        let mut out = Subset::empty(self.size());
        for x in a.iter() {
            for y in b.iter() {
                out.union_with(self.support_of(x, y));
            }
        }
        out
    }

    pub fn is_commutative(&self) -> bool {
        self.commutative
    }

    /// The two-sided identity, if one exists. Two-sided identities are
    /// unique, so this is well-defined.
    pub fn identity(&self) -> Option<usize> {
        match (self.left_identity, self.right_identity) {
            (Some(l), Some(r)) if l == r => Some(l),
            _ => None,
        }
    }

    /// Element `e` with `p_e * p_x = p_x` for all `x`, if any.
    pub fn left_identity(&self) -> Option<usize> {
        self.left_identity
    }

    /// Element `e` with `p_x * p_e = p_x` for all `x`, if any.
    pub fn right_identity(&self) -> Option<usize> {
        self.right_identity
    }

    /// The involution, when the structure has an identity and admits one.
    ///
    /// The convention used (the general theory leaves it unnamed): a
    /// permutation `σ` with `σ∘σ = id`, `σ(e) = e`, with
    /// `(p_x * p_y)(z) = (p_{σ(y)} * p_{σ(x)})(σ(z))` for all `x, y, z`, and
    /// with `e ∈ supp(p_x * p_y)` exactly when `y = σ(x)`. The last
    /// condition pins `σ` down uniquely when it exists.
    pub fn involution(&self) -> Option<&[usize]> {
        self.involution.as_deref()
    }

    /// Identity and involution together make the structure a hypergroup.
    pub fn is_hypergroup(&self) -> bool {
        self.identity().is_some() && self.involution.is_some()
    }
}

/// Searches for the involution given the two-sided identity `e`.
///
/// The condition `e ∈ supp(p_x * p_y) ⟺ y = σ(x)` forces `σ(x)` to be the
/// unique `y` whose product with `x` charges `e`; if any `x` has zero or
/// several such `y` there is no involution. The forced map is then checked
/// to be an involutive permutation fixing `e` and anti-compatible with the
/// table.
fn find_involution(table: &ConvolutionTable, e: usize) -> Option<Vec<usize>> {
    let n = table.size();
    let mut sigma = Vec::with_capacity(n);
    for x in 0..n {
        let candidates: Vec<usize> = (0..n)
            .filter(|&y| !table.entry(x, y).weight(e).is_zero())
            .collect();
        match candidates.as_slice() {
            [y] => sigma.push(*y),
            _ => return None,
        }
    }
    if sigma[e] != e {
        return None;
    }
    // involutive permutation
    for x in 0..n {
        if sigma[x] >= n || sigma[sigma[x]] != x {
            return None;
        }
    }
    // (p_x * p_y)(z) = (p_{σ(y)} * p_{σ(x)})(σ(z)) for all x, y, z
    for x in 0..n {
        for y in 0..n {
            let m = table.entry(x, y);
            let m_rev = table.entry(sigma[y], sigma[x]);
            for z in 0..n {
                if m.weight(z) != m_rev.weight(sigma[z]) {
                    return None;
                }
            }
        }
    }
    Some(sigma)
}

impl fmt::Debug for Semihypergroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Semihypergroup over {:?}", self.carrier().names())
    }
}
