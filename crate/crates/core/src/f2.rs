//! Formal sums with coefficients in F2.

use std::collections::btree_set;
use std::collections::BTreeSet;

/// A finite F2 linear combination: a set of terms where inserting a term twice removes it.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct F2Sum<T: Ord>(BTreeSet<T>);

impl<T: Ord> Default for F2Sum<T> {
    fn default() -> Self {
        F2Sum(BTreeSet::new())
    }
}

impl<T: Ord> F2Sum<T> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn single(t: T) -> Self {
        let mut s = Self::new();
        s.toggle(t);
        s
    }

    /// Adds one copy of `t`.
    pub fn toggle(&mut self, t: T) {
        if self.0.contains(&t) {
            self.0.remove(&t);
        } else {
            self.0.insert(t);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, t: &T) -> bool {
        self.0.contains(t)
    }

    pub fn iter(&self) -> btree_set::Iter<'_, T> {
        self.0.iter()
    }

    pub fn first(&self) -> Option<&T> {
        self.0.iter().next()
    }

    pub fn add_all<I: IntoIterator<Item = T>>(&mut self, items: I) {
        for t in items {
            self.toggle(t);
        }
    }
}

impl<T: Ord + Clone> F2Sum<T> {
    pub fn add(&mut self, other: &F2Sum<T>) {
        for t in other.iter() {
            self.toggle(t.clone());
        }
    }
}

impl<T: Ord> FromIterator<T> for F2Sum<T> {
    fn from_iter<I: IntoIterator<Item = T>>(iter: I) -> Self {
        let mut s = Self::new();
        s.add_all(iter);
        s
    }
}

impl<T: Ord> IntoIterator for F2Sum<T> {
    type Item = T;
    type IntoIter = btree_set::IntoIter<T>;
    fn into_iter(self) -> Self::IntoIter {
        self.0.into_iter()
    }
}

impl<'a, T: Ord> IntoIterator for &'a F2Sum<T> {
    type Item = &'a T;
    type IntoIter = btree_set::Iter<'a, T>;
    fn into_iter(self) -> Self::IntoIter {
        self.0.iter()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parity() {
        let s: F2Sum<u8> = [1, 2, 1, 3, 3, 3].into_iter().collect();
        assert_eq!(s.iter().copied().collect::<Vec<_>>(), vec![2, 3]);
    }
}
