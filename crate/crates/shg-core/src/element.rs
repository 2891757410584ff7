//! Carriers and subsets.
//!
//! An [`ElementSet`] is the ordered carrier of a semihypergroup: distinct
//! names whose declared order is the canonical order everywhere (iteration,
//! rendering, tie-breaking). A [`Subset`] is an index bitset over one
//! carrier; all ideal arithmetic runs on these.

use std::collections::HashMap;
use std::fmt;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ElementSetError {
    #[error("carrier must have at least one element")]
    Empty,
    #[error("duplicate element name {0:?}")]
    DuplicateName(String),
    #[error("invalid element name {0:?}: names are non-empty and may not contain whitespace, '#', '*', '+', '=' or \"->\"")]
    InvalidName(String),
}

/// Ordered set of distinct element names with O(1) name→index lookup.
#[derive(Debug, Clone)]
pub struct ElementSet {
    names: Vec<String>,
    index: HashMap<String, usize>,
}

impl PartialEq for ElementSet {
    fn eq(&self, other: &Self) -> bool {
        self.names == other.names
    }
}

impl Eq for ElementSet {}

impl std::hash::Hash for ElementSet {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.names.hash(state);
    }
}

impl ElementSet {
    pub fn new<I, S>(names: I) -> Result<Self, ElementSetError>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        if names.is_empty() {
            return Err(ElementSetError::Empty);
        }
        let mut index = HashMap::with_capacity(names.len());
        for (i, name) in names.iter().enumerate() {
            if !valid_name(name) {
                return Err(ElementSetError::InvalidName(name.clone()));
            }
            if index.insert(name.clone(), i).is_some() {
                return Err(ElementSetError::DuplicateName(name.clone()));
            }
        }
        Ok(ElementSet { names, index })
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        false // construction rejects empty carriers
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.index.get(name).copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = &str> {
        self.names.iter().map(String::as_str)
    }

    /// Renders a subset as `{a, b}` in declared order.
    pub fn render_subset(&self, s: &Subset) -> String {
        let mut out = String::from("{");
        for (k, i) in s.iter().enumerate() {
            if k > 0 {
                out.push_str(", ");
            }
            out.push_str(self.name(i));
        }
        out.push('}');
        out
    }
}

fn valid_name(name: &str) -> bool {
    !name.is_empty()
        && !name.contains(|c: char| c.is_whitespace())
        && !name.contains(['#', '*', '+', '='])
        && !name.contains("->")
}

/// Index bitset over a carrier of fixed size.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Subset {
    universe: usize,
    words: Vec<u64>,
}

impl Subset {
    pub fn empty(universe: usize) -> Self {
        Subset {
            universe,
            words: vec![0; universe.div_ceil(64)],
        }
    }

    pub fn full(universe: usize) -> Self {
        let mut s = Subset::empty(universe);
        for i in 0..universe {
            s.insert(i);
        }
        s
    }

    pub fn singleton(universe: usize, i: usize) -> Self {
        let mut s = Subset::empty(universe);
        s.insert(i);
        s
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(universe: usize, it: I) -> Self {
        let mut s = Subset::empty(universe);
        for i in it {
            s.insert(i);
        }
        s
    }

    pub fn universe(&self) -> usize {
        self.universe
    }

    pub fn insert(&mut self, i: usize) {
        assert!(i < self.universe, "index {i} out of range 0..{}", self.universe);
        self.words[i / 64] |= 1 << (i % 64);
    }

    pub fn contains(&self, i: usize) -> bool {
        i < self.universe && self.words[i / 64] & (1 << (i % 64)) != 0
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn union(&self, other: &Subset) -> Subset {
        assert_eq!(self.universe, other.universe);
        Subset {
            universe: self.universe,
            words: self.words.iter().zip(&other.words).map(|(a, b)| a | b).collect(),
        }
    }

    pub fn union_with(&mut self, other: &Subset) {
        assert_eq!(self.universe, other.universe);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }

    pub fn intersection(&self, other: &Subset) -> Subset {
        assert_eq!(self.universe, other.universe);
        Subset {
            universe: self.universe,
            words: self.words.iter().zip(&other.words).map(|(a, b)| a & b).collect(),
        }
    }

    pub fn is_subset_of(&self, other: &Subset) -> bool {
        assert_eq!(self.universe, other.universe);
        self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0)
    }

    pub fn is_disjoint_from(&self, other: &Subset) -> bool {
        self.intersection(other).is_empty()
    }

    pub fn least(&self) -> Option<usize> {
        self.iter().next()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.universe).filter(move |&i| self.contains(i))
    }

    pub fn indices(&self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl fmt::Debug for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Subset{:?}", self.indices())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn element_set_basics() {
        let es = ElementSet::new(["a", "b", "c"]).unwrap();
        assert_eq!(es.len(), 3);
        assert_eq!(es.name(1), "b");
        assert_eq!(es.index_of("c"), Some(2));
        assert_eq!(es.index_of("z"), None);
        assert_eq!(es.iter().collect::<Vec<_>>(), vec!["a", "b", "c"]);
    }

    #[test]
    fn element_set_rejects_bad_input() {
        assert_eq!(ElementSet::new(Vec::<String>::new()), Err(ElementSetError::Empty));
        assert_eq!(
            ElementSet::new(["a", "a"]),
            Err(ElementSetError::DuplicateName("a".into()))
        );
        for bad in ["", "a b", "x*y", "x+y", "x=y", "x->y", "#c"] {
            assert!(matches!(
                ElementSet::new([bad]),
                Err(ElementSetError::InvalidName(_))
            ));
        }
        // permutation-style and numeric names are fine
        assert!(ElementSet::new(["(12)(34)", "0", "1/2"]).is_ok());
    }

    #[test]
    fn subset_algebra() {
        let a = Subset::from_indices(70, [0, 3, 69]);
        let b = Subset::from_indices(70, [3, 5]);
        assert_eq!(a.len(), 3);
        assert!(a.contains(69) && !a.contains(68));
        assert_eq!(a.union(&b).indices(), vec![0, 3, 5, 69]);
        assert_eq!(a.intersection(&b).indices(), vec![3]);
        assert!(Subset::from_indices(70, [3]).is_subset_of(&a));
        assert!(!a.is_subset_of(&b));
        assert!(Subset::empty(70).is_empty());
        assert_eq!(Subset::full(70).len(), 70);
        assert_eq!(a.least(), Some(0));
        assert!(a.is_disjoint_from(&Subset::from_indices(70, [1, 2])));
    }

    #[test]
    fn subset_render() {
        let es = ElementSet::new(["a", "b", "c"]).unwrap();
        let s = Subset::from_indices(3, [0, 2]);
        assert_eq!(es.render_subset(&s), "{a, c}");
        assert_eq!(es.render_subset(&Subset::empty(3)), "{}");
    }
}
