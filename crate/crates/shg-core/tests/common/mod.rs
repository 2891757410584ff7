//! Shared machinery for the integration suites: a deterministic generator
//! of random valid instances, and slow independent oracles that the fast
//! implementations are held against.

#![allow(dead_code)]

use shg_core::construct::{
    self, builtin_fixture, example_3_2_params, from_group, from_semigroup, left_zero_pair,
    three_element_parametric, AffineAction, CayleyTable, SemigroupTable,
};
use shg_core::element::{ElementSet, Subset};
use shg_core::means::TranslationMatrix;
use shg_core::measure::Measure;
use shg_core::rational::{rat, Rational};
use shg_core::semihypergroup::{ConvolutionTable, Semihypergroup};
use shg_core::Side;
use num_traits::{One, Signed, Zero};
use std::sync::Arc;

/// xorshift64; deterministic across runs.
pub struct Rng(u64);

impl Rng {
    pub fn new(seed: u64) -> Self {
        Rng(seed.max(1))
    }

    pub fn next_u64(&mut self) -> u64 {
        let mut x = self.0;
        x ^= x << 13;
        x ^= x >> 7;
        x ^= x << 17;
        self.0 = x;
        x
    }

    pub fn below(&mut self, n: usize) -> usize {
        (self.next_u64() % n as u64) as usize
    }

    /// Nonnegative rational with denominator up to 6.
    pub fn small_nonneg(&mut self) -> Rational {
        rat(self.below(7) as i64, (self.below(6) + 1) as i64)
    }

    pub fn small_signed(&mut self) -> Rational {
        rat(self.below(19) as i64 - 9, (self.below(9) + 1) as i64)
    }

    pub fn signed_measure(&mut self, s: &Semihypergroup) -> Measure {
        let weights = (0..s.size()).map(|_| self.small_signed()).collect();
        Measure::new(Arc::clone(s.carrier()), weights).unwrap()
    }

    pub fn probability_measure(&mut self, s: &Semihypergroup) -> Measure {
        let mut weights: Vec<Rational> = (0..s.size()).map(|_| self.small_nonneg()).collect();
        let mass = weights.iter().fold(Rational::zero(), |a, b| a + b);
        if mass.is_zero() {
            weights[0] = Rational::one();
        } else {
            for w in weights.iter_mut() {
                *w = &*w / &mass;
            }
        }
        Measure::new(Arc::clone(s.carrier()), weights).unwrap()
    }
}

/// Random valid parameters for the three-element family: `x1, x3, z1` drawn
/// freely, the rest forced, resampling until the forced `y3` is
/// nonnegative.
pub fn random_parametric(rng: &mut Rng) -> Semihypergroup {
    loop {
        let k3 = rng.below(6) + 1; // x3 = k3/6 > 0
        let k1 = rng.below(6 - k3 + 1); // x1 + x3 ≤ 1
        let x3 = rat(k3 as i64, 6);
        let x1 = rat(k1 as i64, 6);
        let z1 = rat(rng.below(7) as i64, 6);
        if let Ok((x, y, z)) = example_3_2_params(x1, x3, z1) {
            return three_element_parametric(x, y, z).expect("derived family is associative");
        }
    }
}

/// Monogenic semigroup `a, a², …` with index `i` and period `p`
/// (`a^(i+p) = a^i`); commutative, size `i + p - 1`.
pub fn monogenic(index: usize, period: usize) -> Semihypergroup {
    assert!(index >= 1 && period >= 1);
    let m = index + period - 1;
    let names: Vec<String> = (1..=m).map(|k| format!("a{k}")).collect();
    let es = Arc::new(ElementSet::new(names).unwrap());
    let norm = |t: usize| {
        if t <= m {
            t
        } else {
            index + (t - index) % period
        }
    };
    let mut product = Vec::with_capacity(m * m);
    for j in 1..=m {
        for k in 1..=m {
            product.push(norm(j + k) - 1);
        }
    }
    let t = SemigroupTable::new(es, product).expect("monogenic is associative");
    from_semigroup(&t)
}

/// Direct product of two semihypergroups: weights multiply coordinatewise.
/// Valid factors give a valid product; a non-associative factor (the
/// counterexample fixture) carries its defect into the product, so the
/// result is built without the axiom gate.
pub fn direct_product(a: &Semihypergroup, b: &Semihypergroup) -> Semihypergroup {
    let names: Vec<String> = (0..a.size())
        .flat_map(|i| {
            (0..b.size()).map(move |j| format!("{}|{}", a.carrier().name(i), b.carrier().name(j)))
        })
        .collect();
    let es = Arc::new(ElementSet::new(names).unwrap());
    let nb = b.size();
    let table = ConvolutionTable::from_fn(Arc::clone(&es), |x, y| {
        let (xa, xb) = (x / nb, x % nb);
        let (ya, yb) = (y / nb, y % nb);
        let ma = a.convolve_points(xa, ya);
        let mb = b.convolve_points(xb, yb);
        let weights = (0..es.len())
            .map(|z| ma.weight(z / nb) * mb.weight(z % nb))
            .collect();
        Measure::new(Arc::clone(&es), weights).unwrap()
    })
    .unwrap();
    let s = Semihypergroup::new_unchecked(table);
    debug_assert!(
        !(a.check_axioms().passed() && b.check_axioms().passed()) || s.check_axioms().passed(),
        "a product of valid tables must be valid"
    );
    s
}

fn random_subgroup(g: &CayleyTable, rng: &mut Rng) -> Subset {
    let mut gens = Subset::empty(g.size());
    for _ in 0..(rng.below(2) + 1) {
        gens.insert(rng.below(g.size()));
    }
    g.subgroup_closure(&gens)
}

/// One random valid instance with carrier size ≤ `max_size`.
pub fn fuzz_instance(rng: &mut Rng, max_size: usize) -> Semihypergroup {
    loop {
        let s = match rng.below(8) {
            0 => from_group(&CayleyTable::cyclic(rng.below(max_size.min(6)) + 1)),
            1 => {
                let i = rng.below(3) + 1;
                let p = rng.below(3) + 1;
                monogenic(i, p)
            }
            2 => random_parametric(rng),
            3 => {
                let g = CayleyTable::symmetric(3);
                construct::coset_space(&g, &random_subgroup(&g, rng)).unwrap()
            }
            4 => {
                let g = CayleyTable::symmetric(rng.below(2) + 3);
                construct::double_coset_space(&g, &random_subgroup(&g, rng)).unwrap()
            }
            5 => {
                let g = CayleyTable::symmetric(3);
                let action = AffineAction::inner_conjugation(&g, &Subset::full(6)).unwrap();
                construct::orbit_space(&action).unwrap()
            }
            6 => left_zero_pair(),
            7 => {
                let a = random_parametric(rng);
                let b = from_group(&CayleyTable::cyclic(2));
                direct_product(&a, &b)
            }
            _ => unreachable!(),
        };
        if s.size() <= max_size {
            return s;
        }
    }
}

/// One random commutative instance with carrier size ≤ `max_size`.
pub fn fuzz_commutative_instance(rng: &mut Rng, max_size: usize) -> Semihypergroup {
    loop {
        let s = fuzz_instance(rng, max_size);
        if s.is_commutative() {
            return s;
        }
    }
}

/// The bundled fixture list the suites iterate over.
pub fn fixture_set() -> Vec<(&'static str, Semihypergroup)> {
    let mut out: Vec<(&'static str, Semihypergroup)> = construct::FIXTURE_NAMES
        .iter()
        .map(|n| (*n, builtin_fixture(n).unwrap()))
        .collect();
    out.push(("left_zero_pair", left_zero_pair()));
    out
}

// ---------------------------------------------------------------------------
// independent oracle: invariant-mean feasibility by vertex enumeration
// ---------------------------------------------------------------------------

/// Test-local Gaussian elimination: the unique solution of `cols · t = b`
/// if the columns are independent and the system is consistent.
fn solve_unique(cols: &[Vec<Rational>], b: &[Rational]) -> Option<Vec<Rational>> {
    let m = b.len();
    let k = cols.len();
    // augmented row-major matrix
    let mut a: Vec<Vec<Rational>> = (0..m)
        .map(|r| {
            let mut row: Vec<Rational> = cols.iter().map(|c| c[r].clone()).collect();
            row.push(b[r].clone());
            row
        })
        .collect();
    let mut pivot_cols = Vec::new();
    let mut row = 0;
    for col in 0..k {
        let Some(p) = (row..m).find(|&r| !a[r][col].is_zero()) else {
            continue;
        };
        a.swap(row, p);
        let d = a[row][col].clone();
        for v in a[row].iter_mut() {
            *v = &*v / &d;
        }
        for r in 0..m {
            if r != row && !a[r][col].is_zero() {
                let f = a[r][col].clone();
                for c in 0..=k {
                    let delta = &a[row][c] * &f;
                    a[r][c] = &a[r][c] - &delta;
                }
            }
        }
        pivot_cols.push(col);
        row += 1;
    }
    if pivot_cols.len() < k {
        return None; // dependent columns: not a vertex candidate
    }
    for r in row..m {
        if !a[r][k].is_zero() {
            return None; // inconsistent
        }
    }
    let mut t = vec![Rational::zero(); k];
    for (r, &c) in pivot_cols.iter().enumerate() {
        t[c] = a[r][k].clone();
    }
    Some(t)
}

/// The invariance-plus-normalisation equality system for one side, exactly
/// as the definition states it.
fn mean_equality_system(s: &Semihypergroup, side: Side) -> (Vec<Vec<Rational>>, Vec<Rational>) {
    let n = s.size();
    let mut rows = Vec::new();
    let mut rhs = Vec::new();
    for x in 0..n {
        let m = TranslationMatrix::build(s, x, side);
        for z in 0..n {
            let mut row: Vec<Rational> = (0..n).map(|y| m.row(y)[z].clone()).collect();
            row[z] = &row[z] - &Rational::one();
            rows.push(row);
            rhs.push(Rational::zero());
        }
    }
    rows.push(vec![Rational::one(); n]);
    rhs.push(Rational::one());
    (rows, rhs)
}

/// Feasibility oracle for small carriers: enumerate candidate supports and
/// solve each restricted system directly. A probability vector fixed by all
/// adjoint translations exists iff the polytope has a vertex, and every
/// vertex is the unique solution on its support.
pub fn mean_exists_by_vertex_enumeration(s: &Semihypergroup, side: Side) -> Option<Vec<Rational>> {
    let n = s.size();
    assert!(n <= 4, "oracle is exponential; keep it small");
    let (rows, rhs) = mean_equality_system(s, side);
    for mask in 1u32..(1 << n) {
        let support: Vec<usize> = (0..n).filter(|&i| mask & (1 << i) != 0).collect();
        let cols: Vec<Vec<Rational>> = support
            .iter()
            .map(|&j| rows.iter().map(|r| r[j].clone()).collect())
            .collect();
        if let Some(t) = solve_unique(&cols, &rhs) {
            if t.iter().all(|v| !v.is_negative()) {
                let mut full = vec![Rational::zero(); n];
                for (k, &j) in support.iter().enumerate() {
                    full[j] = t[k].clone();
                }
                return Some(full);
            }
        }
    }
    None
}

/// All left ideals of a small instance by scanning the power set.
pub fn all_left_ideals(s: &Semihypergroup) -> Vec<Subset> {
    let n = s.size();
    assert!(n <= 16);
    (1u32..(1 << n))
        .map(|mask| Subset::from_indices(n, (0..n).filter(|&i| mask & (1 << i) != 0)))
        .filter(|i| {
            i.iter()
                .all(|a| (0..n).all(|x| s.support_of(x, a).is_subset_of(i)))
        })
        .collect()
}
