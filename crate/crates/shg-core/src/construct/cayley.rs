//! Finite semigroup and group multiplication tables, plus affine actions.
//!
//! A [`SemigroupTable`] is an associative magma table; a [`CayleyTable`]
//! additionally has a verified identity and inverses. Products are stored
//! as index arrays; all structural requirements are checked at
//! construction, never trusted.

use crate::element::{ElementSet, Subset};
use crate::semihypergroup::UnknownElement;
use std::sync::Arc;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TableDefect {
    #[error("product table has {got} entries, expected {expected}")]
    WrongSize { expected: usize, got: usize },
    #[error("product entry out of range at ({x}, {y})")]
    IndexOutOfRange { x: usize, y: usize },
    #[error("not associative: ({x} {y}) {z} ≠ {x} ({y} {z})")]
    NotAssociative { x: String, y: String, z: String },
    #[error("no identity element")]
    NoIdentity,
    #[error("element {0} has no inverse")]
    NoInverse(String),
}

/// An associative multiplication table on named elements.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SemigroupTable {
    elements: Arc<ElementSet>,
    product: Vec<usize>,
}

impl SemigroupTable {
    pub fn new(elements: Arc<ElementSet>, product: Vec<usize>) -> Result<Self, TableDefect> {
        let n = elements.len();
        if product.len() != n * n {
            return Err(TableDefect::WrongSize {
                expected: n * n,
                got: product.len(),
            });
        }
        for x in 0..n {
            for y in 0..n {
                if product[x * n + y] >= n {
                    return Err(TableDefect::IndexOutOfRange { x, y });
                }
            }
        }
        let t = SemigroupTable { elements, product };
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    if t.product(t.product(x, y), z) != t.product(x, t.product(y, z)) {
                        return Err(TableDefect::NotAssociative {
                            x: t.elements.name(x).into(),
                            y: t.elements.name(y).into(),
                            z: t.elements.name(z).into(),
                        });
                    }
                }
            }
        }
        Ok(t)
    }

    pub fn elements(&self) -> &Arc<ElementSet> {
        &self.elements
    }

    pub fn size(&self) -> usize {
        self.elements.len()
    }

    pub fn product(&self, x: usize, y: usize) -> usize {
        self.product[x * self.size() + y]
    }
}

/// A finite group: associative table with identity and inverses, all
/// verified at load.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CayleyTable {
    table: SemigroupTable,
    identity: usize,
    inverse: Vec<usize>,
}

impl CayleyTable {
    pub fn new(elements: Arc<ElementSet>, product: Vec<usize>) -> Result<Self, TableDefect> {
        Self::from_semigroup_table(SemigroupTable::new(elements, product)?)
    }

    pub fn from_semigroup_table(table: SemigroupTable) -> Result<Self, TableDefect> {
        let n = table.size();
        let identity = (0..n)
            .find(|&e| (0..n).all(|x| table.product(e, x) == x && table.product(x, e) == x))
            .ok_or(TableDefect::NoIdentity)?;
        let mut inverse = Vec::with_capacity(n);
        for x in 0..n {
            let inv = (0..n)
                .find(|&y| table.product(x, y) == identity && table.product(y, x) == identity)
                .ok_or_else(|| TableDefect::NoInverse(table.elements().name(x).into()))?;
            inverse.push(inv);
        }
        Ok(CayleyTable {
            table,
            identity,
            inverse,
        })
    }

    pub fn elements(&self) -> &Arc<ElementSet> {
        self.table.elements()
    }

    pub fn size(&self) -> usize {
        self.table.size()
    }

    pub fn semigroup_table(&self) -> &SemigroupTable {
        &self.table
    }

    pub fn product(&self, x: usize, y: usize) -> usize {
        self.table.product(x, y)
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn inverse(&self, x: usize) -> usize {
        self.inverse[x]
    }

    pub fn subset_by_names<'a, I: IntoIterator<Item = &'a str>>(
        &self,
        names: I,
    ) -> Result<Subset, UnknownElement> {
        let mut s = Subset::empty(self.size());
        for name in names {
            let i = self
                .elements()
                .index_of(name)
                .ok_or_else(|| UnknownElement(name.to_string()))?;
            s.insert(i);
        }
        Ok(s)
    }

    /// Checks that `h` is a subgroup: nonempty, closed under products and
    /// inverses (which forces the identity in).
    pub fn verify_subgroup(&self, h: &Subset) -> Result<(), SubgroupDefect> {
        if h.is_empty() {
            return Err(SubgroupDefect("subgroup candidate is empty".into()));
        }
        let name = |i: usize| self.elements().name(i).to_string();
        for x in h.iter() {
            if !h.contains(self.inverse(x)) {
                return Err(SubgroupDefect(format!(
                    "not closed under inverses: {} is in, {} is not",
                    name(x),
                    name(self.inverse(x))
                )));
            }
            for y in h.iter() {
                if !h.contains(self.product(x, y)) {
                    return Err(SubgroupDefect(format!(
                        "not closed under products: {} {} = {} is outside",
                        name(x),
                        name(y),
                        name(self.product(x, y))
                    )));
                }
            }
        }
        Ok(())
    }

    /// Smallest subgroup containing `gens`.
    pub fn subgroup_closure(&self, gens: &Subset) -> Subset {
        let mut h = Subset::singleton(self.size(), self.identity);
        let mut frontier: Vec<usize> = gens.iter().collect();
        for &g in &frontier {
            h.insert(g);
        }
        while let Some(x) = frontier.pop() {
            let mut news = Vec::new();
            news.push(self.inverse(x));
            for y in h.iter() {
                news.push(self.product(x, y));
                news.push(self.product(y, x));
            }
            for n in news {
                if !h.contains(n) {
                    h.insert(n);
                    frontier.push(n);
                }
            }
        }
        h
    }

    /// Extracts a subgroup as its own group, reindexed; also returns the
    /// member list mapping new indices back into this group.
    pub fn sub_cayley(&self, h: &Subset) -> Result<(CayleyTable, Vec<usize>), SubgroupDefect> {
        self.verify_subgroup(h)?;
        let members = h.indices();
        let pos = |g: usize| members.iter().position(|&m| m == g).expect("closed");
        let names = members.iter().map(|&m| self.elements().name(m));
        let elements = Arc::new(ElementSet::new(names).expect("names distinct in parent"));
        let k = members.len();
        let mut product = Vec::with_capacity(k * k);
        for &x in &members {
            for &y in &members {
                product.push(pos(self.product(x, y)));
            }
        }
        let sub = CayleyTable::new(elements, product).expect("subgroup is a group");
        Ok((sub, members))
    }

    /// Whether `h` is normal: `g h g⁻¹ ∈ H` for all `g ∈ G, h ∈ H`.
    pub fn is_normal_subgroup(&self, h: &Subset) -> bool {
        self.verify_subgroup(h).is_ok()
            && (0..self.size()).all(|g| {
                h.iter()
                    .all(|x| h.contains(self.product(self.product(g, x), self.inverse(g))))
            })
    }

    /// Cyclic group of order `n`, elements named `0..n-1`.
    pub fn cyclic(n: usize) -> CayleyTable {
        assert!(n > 0);
        let elements = Arc::new(ElementSet::new((0..n).map(|i| i.to_string())).unwrap());
        let mut product = Vec::with_capacity(n * n);
        for x in 0..n {
            for y in 0..n {
                product.push((x + y) % n);
            }
        }
        CayleyTable::new(elements, product).expect("cyclic group")
    }

    /// Symmetric group on `n ≤ 9` points in lexicographic one-line order,
    /// elements named in cycle notation (`e`, `(12)`, `(123)`, ...).
    ///
    /// The product convention is left-to-right application:
    /// `(x·y)(i) = y(x(i))`.
    pub fn symmetric(n: usize) -> CayleyTable {
        assert!((1..=9).contains(&n), "cycle-notation names need n ≤ 9");
        let perms = all_permutations(n);
        let index_of = |p: &[usize]| perms.iter().position(|q| q == p).expect("closed");
        let elements = Arc::new(
            ElementSet::new(perms.iter().map(|p| cycle_name(p))).expect("distinct names"),
        );
        let mut product = Vec::with_capacity(perms.len() * perms.len());
        for x in &perms {
            for y in &perms {
                let composed: Vec<usize> = (0..n).map(|i| y[x[i]]).collect();
                product.push(index_of(&composed));
            }
        }
        CayleyTable::new(elements, product).expect("symmetric group")
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("not a subgroup: {0}")]
pub struct SubgroupDefect(pub String);

fn all_permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..n).collect();
    loop {
        out.push(cur.clone());
        // next lexicographic permutation
        let Some(i) = (0..n.saturating_sub(1)).rev().find(|&i| cur[i] < cur[i + 1]) else {
            break;
        };
        let j = (i + 1..n).rev().find(|&j| cur[j] > cur[i]).unwrap();
        cur.swap(i, j);
        cur[i + 1..].reverse();
    }
    out
}

/// Cycle notation with 1-based points, cycles sorted by least moved point;
/// the identity is `e`.
pub fn cycle_name(perm: &[usize]) -> String {
    let n = perm.len();
    let mut seen = vec![false; n];
    let mut out = String::new();
    for start in 0..n {
        if seen[start] || perm[start] == start {
            seen[start] = true;
            continue;
        }
        out.push('(');
        let mut i = start;
        loop {
            seen[i] = true;
            out.push_str(&(i + 1).to_string());
            i = perm[i];
            if i == start {
                break;
            }
        }
        out.push(')');
    }
    if out.is_empty() {
        "e".to_string()
    } else {
        out
    }
}

/// A finite group `H` acting on a group `G` by affine maps
/// `x ↦ a_h · ψ_h(x)` with each `ψ_h` an automorphism of `G`,
/// subject to the action laws `x^e = x` and `x^(st) = (x^s)^t`.
#[derive(Debug, Clone)]
pub struct AffineAction {
    acting: CayleyTable,
    target: CayleyTable,
    translation: Vec<usize>,
    automorphism: Vec<Vec<usize>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("invalid affine action: {0}")]
pub struct ActionDefect(pub String);

impl AffineAction {
    pub fn new(
        acting: CayleyTable,
        target: CayleyTable,
        parts: Vec<(usize, Vec<usize>)>,
    ) -> Result<Self, ActionDefect> {
        let hn = acting.size();
        let n = target.size();
        if parts.len() != hn {
            return Err(ActionDefect(format!(
                "need one affine map per acting element: got {}, expected {hn}",
                parts.len()
            )));
        }
        for (h, (a, psi)) in parts.iter().enumerate() {
            if *a >= n {
                return Err(ActionDefect(format!("translation part out of range for h={h}")));
            }
            if psi.len() != n {
                return Err(ActionDefect(format!("automorphism part has wrong length for h={h}")));
            }
            let mut seen = vec![false; n];
            for &v in psi {
                if v >= n || seen[v] {
                    return Err(ActionDefect(format!("map for h={h} is not a permutation")));
                }
                seen[v] = true;
            }
            for x in 0..n {
                for y in 0..n {
                    if psi[target.product(x, y)] != target.product(psi[x], psi[y]) {
                        return Err(ActionDefect(format!(
                            "map for h={h} is not an automorphism at ({x}, {y})"
                        )));
                    }
                }
            }
        }
        let action = AffineAction {
            translation: parts.iter().map(|(a, _)| *a).collect(),
            automorphism: parts.into_iter().map(|(_, p)| p).collect(),
            acting,
            target,
        };
        let e = action.acting.identity();
        for x in 0..n {
            if action.apply(e, x) != x {
                return Err(ActionDefect("identity of H does not act trivially".into()));
            }
        }
        for s in 0..hn {
            for t in 0..hn {
                let st = action.acting.product(s, t);
                for x in 0..n {
                    if action.apply(st, x) != action.apply(t, action.apply(s, x)) {
                        return Err(ActionDefect(format!(
                            "action law fails: x^(st) ≠ (x^s)^t at s={s}, t={t}, x={x}"
                        )));
                    }
                }
            }
        }
        Ok(action)
    }

    /// `H ≤ G` acting on `G` by conjugation, `x^h = h⁻¹ x h`.
    pub fn inner_conjugation(g: &CayleyTable, h: &Subset) -> Result<Self, ActionDefect> {
        let (acting, members) = g
            .sub_cayley(h)
            .map_err(|e| ActionDefect(e.to_string()))?;
        let n = g.size();
        let parts = members
            .iter()
            .map(|&m| {
                let minv = g.inverse(m);
                let psi: Vec<usize> = (0..n).map(|x| g.product(g.product(minv, x), m)).collect();
                (g.identity(), psi)
            })
            .collect();
        AffineAction::new(acting, g.clone(), parts)
    }

    /// `H ≤ G` acting by left translation, `x^h = h⁻¹ x`; the orbits are the
    /// right cosets `Hx`.
    pub fn translation(g: &CayleyTable, h: &Subset) -> Result<Self, ActionDefect> {
        let (acting, members) = g
            .sub_cayley(h)
            .map_err(|e| ActionDefect(e.to_string()))?;
        let identity_perm: Vec<usize> = (0..g.size()).collect();
        let parts = members
            .iter()
            .map(|&m| (g.inverse(m), identity_perm.clone()))
            .collect();
        AffineAction::new(acting, g.clone(), parts)
    }

    /// The one-element group acting trivially; orbits are singletons.
    pub fn trivial(g: &CayleyTable) -> Self {
        let acting = CayleyTable::cyclic(1);
        let parts = vec![(g.identity(), (0..g.size()).collect())];
        AffineAction::new(acting, g.clone(), parts).expect("trivial action is valid")
    }

    pub fn acting(&self) -> &CayleyTable {
        &self.acting
    }

    pub fn target(&self) -> &CayleyTable {
        &self.target
    }

    /// `x^h = a_h · ψ_h(x)`.
    pub fn apply(&self, h: usize, x: usize) -> usize {
        self.target
            .product(self.translation[h], self.automorphism[h][x])
    }

    pub fn orbit(&self, x: usize) -> Subset {
        Subset::from_indices(
            self.target.size(),
            (0..self.acting.size()).map(|h| self.apply(h, x)),
        )
    }
}
