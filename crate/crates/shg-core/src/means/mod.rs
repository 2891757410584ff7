//! Function-space machinery on a finite carrier: translations, orbits,
//! invariant means, introversion operators and Arens products.
//!
//! Functions are rational vectors over the carrier. The translates are
//! `L_x f(y) = f(x*y)` and `R_x f(y) = f(y*x)`, realised by row-stochastic
//! matrices built from the convolution table. A mean is a positive
//! normalised functional — on a finite carrier exactly a probability
//! vector — and invariance under all translations on one side is an exact
//! rational feasibility problem, solved by elimination plus phase-1 simplex
//! (see [`simplex`](self) internals).
//!
//! The introversion operators `T_μ f(x) = μ(L_x f)` and `U_μ f(x) = μ(R_x f)`
//! give the two Arens products on the dual; on a finite carrier both reduce
//! to the bilinear convolution, which the property suite pins down.

mod simplex;

use crate::element::{ElementSet, Subset};
use crate::ideals::{minimal_side_ideals_with_bound, DEFAULT_SCAN_BOUND};
use crate::measure::Measure;
use crate::rational::Rational;
use crate::semihypergroup::Semihypergroup;
use crate::{Side, TheoremViolation};
use num_traits::{One, Zero};
use std::sync::Arc;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MeansError {
    #[error("function or measure lives on a different carrier")]
    CarrierMismatch,
    #[error("the structure is not commutative, as required here")]
    NotCommutative,
    #[error(transparent)]
    Theorem(#[from] TheoremViolation),
}

/// A rational-valued function on the carrier.
#[derive(Clone, PartialEq, Eq)]
pub struct FunctionVector {
    carrier: Arc<ElementSet>,
    values: Vec<Rational>,
}

impl FunctionVector {
    pub fn new(carrier: Arc<ElementSet>, values: Vec<Rational>) -> Result<Self, MeansError> {
        if values.len() != carrier.len() {
            return Err(MeansError::CarrierMismatch);
        }
        Ok(FunctionVector { carrier, values })
    }

    pub fn constant(carrier: Arc<ElementSet>, value: Rational) -> Self {
        let n = carrier.len();
        FunctionVector {
            carrier,
            values: vec![value; n],
        }
    }

    pub fn indicator(carrier: Arc<ElementSet>, of: &Subset) -> Self {
        let values = (0..carrier.len())
            .map(|i| {
                if of.contains(i) {
                    Rational::one()
                } else {
                    Rational::zero()
                }
            })
            .collect();
        FunctionVector { carrier, values }
    }

    pub fn carrier(&self) -> &Arc<ElementSet> {
        &self.carrier
    }

    pub fn value(&self, x: usize) -> &Rational {
        &self.values[x]
    }

    pub fn values(&self) -> &[Rational] {
        &self.values
    }

    pub fn is_constant(&self) -> bool {
        self.values.windows(2).all(|w| w[0] == w[1])
    }
}

impl std::fmt::Debug for FunctionVector {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "FunctionVector[{}]",
            self.values
                .iter()
                .map(|v| v.to_string())
                .collect::<Vec<_>>()
                .join(", ")
        )
    }
}

/// Matrix of one translation operator. For the left translate by `x` the
/// row at `y` carries the weights of `p_x * p_y`, so that
/// `(A f)(y) = f(x*y) = L_x f(y)`; the right version uses `p_y * p_x`.
/// Rows are probability vectors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TranslationMatrix {
    carrier: Arc<ElementSet>,
    pub side: Side,
    pub by: usize,
    rows: Vec<Vec<Rational>>,
}

impl TranslationMatrix {
    pub fn build(s: &Semihypergroup, by: usize, side: Side) -> Self {
        let n = s.size();
        let rows = (0..n)
            .map(|y| {
                let entry = match side {
                    Side::Left => s.convolve_points(by, y),
                    Side::Right => s.convolve_points(y, by),
                };
                entry.weights().to_vec()
            })
            .collect();
        TranslationMatrix {
            carrier: Arc::clone(s.carrier()),
            side,
            by,
            rows,
        }
    }

    pub fn row(&self, y: usize) -> &[Rational] {
        &self.rows[y]
    }

    pub fn apply(&self, f: &FunctionVector) -> Result<FunctionVector, MeansError> {
        if f.carrier.as_ref() != self.carrier.as_ref() {
            return Err(MeansError::CarrierMismatch);
        }
        let values = self
            .rows
            .iter()
            .map(|row| {
                row.iter()
                    .zip(&f.values)
                    .filter(|(w, _)| !w.is_zero())
                    .fold(Rational::zero(), |acc, (w, v)| acc + w * v)
            })
            .collect();
        Ok(FunctionVector {
            carrier: Arc::clone(&self.carrier),
            values,
        })
    }

    pub fn is_row_stochastic(&self) -> bool {
        use num_traits::Signed;
        self.rows.iter().all(|row| {
            row.iter().all(|w| !w.is_negative())
                && row.iter().fold(Rational::zero(), |a, b| a + b).is_one()
        })
    }

    /// `Aᵀ m = m`, the invariance equation a mean must satisfy.
    pub fn adjoint_fixes(&self, m: &[Rational]) -> bool {
        let n = self.rows.len();
        (0..n).all(|z| {
            let lhs = (0..n).fold(Rational::zero(), |acc, y| acc + &self.rows[y][z] * &m[y]);
            lhs == m[z]
        })
    }
}

/// `L_x f` or `R_x f`.
pub fn translate(
    s: &Semihypergroup,
    f: &FunctionVector,
    x: usize,
    side: Side,
) -> Result<FunctionVector, MeansError> {
    TranslationMatrix::build(s, x, side).apply(f)
}

/// The right orbit `{R_x f : x ∈ K}`, deduplicated in first-appearance
/// order. Its cardinality is at most the carrier size, which on a finite
/// carrier is the witness that every function is (weakly) almost periodic.
pub fn right_orbit(
    s: &Semihypergroup,
    f: &FunctionVector,
) -> Result<Vec<FunctionVector>, MeansError> {
    let mut out: Vec<FunctionVector> = Vec::new();
    for x in 0..s.size() {
        let g = translate(s, f, x, Side::Right)?;
        if !out.contains(&g) {
            out.push(g);
        }
    }
    Ok(out)
}

/// Outcome of the invariant-mean search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MeanWitness {
    pub side: Side,
    /// A probability measure fixed by every adjoint translation, when one
    /// exists; the solver's first feasible vertex.
    pub weights: Option<Measure>,
    /// Affine dimension of the solution set of the invariance equations
    /// (before the nonnegativity constraints); `None` when the equations
    /// are already inconsistent.
    pub solution_dim: Option<usize>,
}

impl MeanWitness {
    pub fn found(&self) -> bool {
        self.weights.is_some()
    }
}

/// Searches for a mean `m ≥ 0, Σm = 1` with `m(L_x f) = m(f)` for all `x, f`
/// (left) or the right analogue — equivalently `Aᵀ_x m = m` for every
/// translation matrix. Exact elimination plus phase-1 simplex.
pub fn find_invariant_mean(s: &Semihypergroup, side: Side) -> MeanWitness {
    let n = s.size();
    let mut rows: Vec<Vec<Rational>> = Vec::with_capacity(n * n + 1);
    let mut rhs: Vec<Rational> = Vec::with_capacity(n * n + 1);
    for x in 0..n {
        let matrix = TranslationMatrix::build(s, x, side);
        // (Aᵀ m)_z - m_z = 0
        for z in 0..n {
            let mut row: Vec<Rational> = (0..n).map(|y| matrix.rows[y][z].clone()).collect();
            row[z] = &row[z] - &Rational::one();
            rows.push(row);
            rhs.push(Rational::zero());
        }
    }
    rows.push(vec![Rational::one(); n]);
    rhs.push(Rational::one());

    let solution_dim = simplex::reduce(rows.clone(), rhs.clone()).map(|r| n - r.rank);
    let weights = simplex::feasible_point(rows, rhs).map(|w| {
        let m = Measure::new(Arc::clone(s.carrier()), w).expect("solver length");
        assert!(
            verify_invariant_mean(s, side, &m),
            "solver produced a witness that fails direct re-verification"
        );
        m
    });
    MeanWitness {
        side,
        weights,
        solution_dim,
    }
}

/// Direct re-verification of a mean witness by matrix arithmetic,
/// independent of the solver path.
pub fn verify_invariant_mean(s: &Semihypergroup, side: Side, m: &Measure) -> bool {
    if m.carrier().as_ref() != s.carrier().as_ref() || !m.is_probability() {
        return false;
    }
    (0..s.size()).all(|x| TranslationMatrix::build(s, x, side).adjoint_fixes(m.weights()))
}

/// For a commutative structure a left invariant mean always exists; this
/// runs the solver and converts "none found" into a loud theorem violation.
pub fn lim_exists_commutative_check(s: &Semihypergroup) -> Result<MeanWitness, MeansError> {
    if !s.is_commutative() {
        return Err(MeansError::NotCommutative);
    }
    let witness = find_invariant_mean(s, Side::Left);
    if !witness.found() {
        return Err(TheoremViolation(
            "a commutative finite semihypergroup must admit a left invariant mean".into(),
        )
        .into());
    }
    Ok(witness)
}

/// Introversion operators: left `T_μ f(x) = μ(L_x f)`, right
/// `U_μ f(x) = μ(R_x f)`.
pub fn introversion(
    s: &Semihypergroup,
    mu: &Measure,
    f: &FunctionVector,
    side: Side,
) -> Result<FunctionVector, MeansError> {
    if mu.carrier().as_ref() != s.carrier().as_ref()
        || f.carrier.as_ref() != s.carrier().as_ref()
    {
        return Err(MeansError::CarrierMismatch);
    }
    let n = s.size();
    let values = (0..n)
        .map(|x| {
            let mut acc = Rational::zero();
            for y in 0..n {
                if mu.weight(y).is_zero() {
                    continue;
                }
                let entry = match side {
                    Side::Left => s.convolve_points(x, y),
                    Side::Right => s.convolve_points(y, x),
                };
                let fxy = entry
                    .weights()
                    .iter()
                    .zip(&f.values)
                    .filter(|(w, _)| !w.is_zero())
                    .fold(Rational::zero(), |a, (w, v)| a + w * v);
                acc += mu.weight(y) * fxy;
            }
            acc
        })
        .collect();
    Ok(FunctionVector {
        carrier: Arc::clone(s.carrier()),
        values,
    })
}

/// Evaluation of a measure against a function: `μ(f) = Σ μ(x) f(x)`.
pub fn pair(mu: &Measure, f: &FunctionVector) -> Result<Rational, MeansError> {
    if mu.carrier().as_ref() != f.carrier.as_ref() {
        return Err(MeansError::CarrierMismatch);
    }
    Ok(mu
        .weights()
        .iter()
        .zip(&f.values)
        .fold(Rational::zero(), |acc, (w, v)| acc + w * v))
}

/// The Arens product on the dual, through the introversion operators: left
/// is `(μ ⋆ ν)(f) = μ(T_ν f)`, right is `(μ □ ν)(f) = ν(U_μ f)`. The
/// result is reconstructed by evaluating against the indicator basis, which
/// keeps this an independent route from the bilinear convolution it must
/// agree with.
pub fn arens_product(
    s: &Semihypergroup,
    mu: &Measure,
    nu: &Measure,
    side: Side,
) -> Result<Measure, MeansError> {
    if mu.carrier().as_ref() != s.carrier().as_ref()
        || nu.carrier().as_ref() != s.carrier().as_ref()
    {
        return Err(MeansError::CarrierMismatch);
    }
    let n = s.size();
    let mut weights = Vec::with_capacity(n);
    for z in 0..n {
        let indicator =
            FunctionVector::indicator(Arc::clone(s.carrier()), &Subset::singleton(n, z));
        let w = match side {
            Side::Left => pair(mu, &introversion(s, nu, &indicator, Side::Left)?)?,
            Side::Right => pair(nu, &introversion(s, mu, &indicator, Side::Right)?)?,
        };
        weights.push(w);
    }
    Ok(Measure::new(Arc::clone(s.carrier()), weights).expect("length"))
}

/// The duality identity `μ(T_ν f) = ν(U_μ f)`, evaluated exactly.
pub fn duality_check(
    s: &Semihypergroup,
    mu: &Measure,
    nu: &Measure,
    f: &FunctionVector,
) -> Result<bool, MeansError> {
    let lhs = pair(mu, &introversion(s, nu, f, Side::Left)?)?;
    let rhs = pair(nu, &introversion(s, mu, f, Side::Right)?)?;
    Ok(lhs == rhs)
}

/// Outcome of the "right amenability forces a unique minimal left ideal"
/// check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RimVerdict {
    /// A right invariant mean exists and the minimal left ideal is unique.
    Confirmed {
        witness: Measure,
        minimal_left_ideal: Subset,
    },
    /// No right invariant mean, so the statement does not apply.
    NotApplicableNoRim,
}

/// If a right invariant mean exists, the minimal left ideal must be unique;
/// several disjoint minimal left ideals alongside a RIM would be a theorem
/// violation and is reported loudly.
pub fn rim_implies_unique_minimal_left_check(
    s: &Semihypergroup,
) -> Result<RimVerdict, MeansError> {
    let witness = find_invariant_mean(s, Side::Right);
    let Some(m) = witness.weights else {
        return Ok(RimVerdict::NotApplicableNoRim);
    };
    let minimal = minimal_side_ideals_with_bound(s, Side::Left, DEFAULT_SCAN_BOUND)
        .map_err(MeansError::from)?;
    if minimal.len() != 1 {
        return Err(TheoremViolation(format!(
            "a right invariant mean exists but there are {} minimal left ideals",
            minimal.len()
        ))
        .into());
    }
    Ok(RimVerdict::Confirmed {
        witness: m,
        minimal_left_ideal: minimal.into_iter().next().expect("length checked"),
    })
}
