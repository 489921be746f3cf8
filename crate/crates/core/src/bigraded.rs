//! Bidegrees `(-k, 2l)` and bigraded tables of abelian groups.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::linalg::GroupSummary;

/// The bidegree `(-k, 2l)`. Sorted by `l`, then `k`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize)]
pub struct Bidegree {
    pub k: usize,
    pub l: usize,
}

impl Bidegree {
    pub const fn new(k: usize, l: usize) -> Bidegree {
        Bidegree { k, l }
    }

    /// Total degree `2l - k`.
    pub fn total(self) -> isize {
        2 * self.l as isize - self.k as isize
    }

    /// Reduced simplicial degree `p = l - k - 1` of the Hochster summands.
    pub fn simplicial_degree(self) -> isize {
        self.l as isize - self.k as isize - 1
    }

    /// Bidegree for subsets of size `l` and reduced degree `p`.
    pub fn from_subset(l: usize, p: isize) -> Bidegree {
        let k = l as isize - p - 1;
        assert!(k >= 0, "reduced degree {p} too large for {l} vertices");
        Bidegree { k: k as usize, l }
    }
}

impl Ord for Bidegree {
    fn cmp(&self, o: &Bidegree) -> Ordering {
        (self.l, self.k).cmp(&(o.l, o.k))
    }
}

impl PartialOrd for Bidegree {
    fn partial_cmp(&self, o: &Bidegree) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}

impl fmt::Display for Bidegree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.k == 0 {
            write!(f, "(0, {})", 2 * self.l)
        } else {
            write!(f, "(-{}, {})", self.k, 2 * self.l)
        }
    }
}

/// A bigraded abelian group, storing only nonzero bidegrees.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct BigradedModule {
    groups: BTreeMap<Bidegree, GroupSummary>,
}

impl BigradedModule {
    pub fn new() -> BigradedModule {
        BigradedModule::default()
    }

    /// Sets the group at `b`; zero groups are not stored.
    pub fn insert(&mut self, b: Bidegree, g: GroupSummary) {
        if g.is_zero() {
            self.groups.remove(&b);
        } else {
            self.groups.insert(b, g);
        }
    }

    pub fn get(&self, b: Bidegree) -> GroupSummary {
        self.groups.get(&b).cloned().unwrap_or_default()
    }

    pub fn rank(&self, b: Bidegree) -> usize {
        self.groups.get(&b).map_or(0, |g| g.rank)
    }

    pub fn iter(&self) -> impl Iterator<Item = (Bidegree, &GroupSummary)> {
        self.groups.iter().map(|(b, g)| (*b, g))
    }

    pub fn support(&self) -> Vec<Bidegree> {
        self.groups.keys().copied().collect()
    }

    pub fn is_empty(&self) -> bool {
        self.groups.is_empty()
    }

    pub fn total_rank(&self) -> usize {
        self.groups.values().map(|g| g.rank).sum()
    }

    pub fn is_free(&self) -> bool {
        self.groups.values().all(|g| g.is_free())
    }

    /// `Σ (-1)^{2l-k} rank`.
    pub fn euler_characteristic(&self) -> i64 {
        self.groups
            .iter()
            .map(|(b, g)| {
                if b.k % 2 == 0 {
                    g.rank as i64
                } else {
                    -(g.rank as i64)
                }
            })
            .sum()
    }

    /// Builds a free module from `(k, l, rank)` triples.
    pub fn free_from(entries: &[(usize, usize, usize)]) -> BigradedModule {
        let mut m = BigradedModule::new();
        for &(k, l, r) in entries {
            m.insert(Bidegree::new(k, l), GroupSummary::free(r));
        }
        m
    }

    /// Ranks only, forgetting torsion.
    pub fn ranks(&self) -> BTreeMap<Bidegree, usize> {
        self.groups
            .iter()
            .filter(|(_, g)| g.rank > 0)
            .map(|(b, g)| (*b, g.rank))
            .collect()
    }

    /// Plain table, one row per nonzero bidegree.
    pub fn table(&self) -> String {
        let mut out = String::new();
        for (b, g) in &self.groups {
            let tors: Vec<String> = g.torsion.iter().map(|t| t.to_string()).collect();
            out.push_str(&format!(
                "{:>10}  rank {:>4}  torsion [{}]  {}\n",
                b.to_string(),
                g.rank,
                tors.join(", "),
                g
            ));
        }
        out
    }
}

impl fmt::Display for BigradedModule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .groups
            .iter()
            .map(|(b, g)| format!("{b}: {g}"))
            .collect();
        write!(f, "{}", parts.join("; "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ordering_and_display() {
        let mut v = vec![
            Bidegree::new(2, 3),
            Bidegree::new(0, 0),
            Bidegree::new(1, 2),
            Bidegree::new(1, 3),
        ];
        v.sort();
        assert_eq!(
            v,
            vec![
                Bidegree::new(0, 0),
                Bidegree::new(1, 2),
                Bidegree::new(1, 3),
                Bidegree::new(2, 3)
            ]
        );
        assert_eq!(Bidegree::new(1, 2).to_string(), "(-1, 4)");
        assert_eq!(Bidegree::new(0, 0).to_string(), "(0, 0)");
        assert_eq!(Bidegree::from_subset(3, 1), Bidegree::new(1, 3));
    }

    #[test]
    fn euler() {
        let m = BigradedModule::free_from(&[(0, 0, 1), (1, 2, 1), (2, 3, 1), (3, 5, 1)]);
        assert_eq!(m.euler_characteristic(), 0);
        assert_eq!(m.total_rank(), 4);
    }
}
