//! Dominating sets and the domatic number.
//!
//! A vertex dominates itself and its neighbors. The domatic number is the
//! largest number of pairwise disjoint dominating sets. Since any superset
//! of a dominating set dominates, `d` disjoint dominating sets exist iff the
//! vertices can be partitioned into `d` dominating classes; the search
//! below looks for such partitions.

use std::fmt;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

pub const DOMATIC_ORACLE_CAP: usize = 10;

/// `v == w` or `v` adjacent to `w`.
pub fn dominates(g: &Graph, v: usize, w: usize) -> Result<bool> {
    g.check_vertex(v)?;
    g.check_vertex(w)?;
    Ok(v == w || g.has_edge(v, w))
}

/// Every vertex of `g` is dominated by a member of `set`. Members outside
/// the graph make the answer `false`.
pub fn is_dominating_set(g: &Graph, set: &VertexSet) -> bool {
    if set.check_in(g).is_err() {
        return false;
    }
    let mut covered = set.to_bitset(g.n());
    for &v in set {
        covered.union_with(g.neighborhood(v));
    }
    covered.count_ones(..) == g.n()
}

/// An ordered family of disjoint dominating sets.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct DomaticFamily {
    pub sets: Vec<VertexSet>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FamilyViolation {
    VertexOutOfRange { set: usize, vertex: usize },
    EmptySet { set: usize },
    Overlap { first: usize, second: usize, vertex: usize },
    NotDominating { set: usize, undominated: usize },
}

impl fmt::Display for FamilyViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilyViolation::VertexOutOfRange { set, vertex } => {
                write!(f, "set {set}: vertex {vertex} out of range")
            }
            FamilyViolation::EmptySet { set } => write!(f, "set {set} is empty"),
            FamilyViolation::Overlap { first, second, vertex } => {
                write!(f, "sets {first} and {second} share vertex {vertex}")
            }
            FamilyViolation::NotDominating { set, undominated } => {
                write!(f, "set {set} does not dominate vertex {undominated}")
            }
        }
    }
}

impl DomaticFamily {
    pub fn new(sets: Vec<VertexSet>) -> Self {
        DomaticFamily { sets }
    }

    pub fn len(&self) -> usize {
        self.sets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sets.is_empty()
    }

    pub fn verify(&self, g: &Graph) -> std::result::Result<(), FamilyViolation> {
        let mut owner = vec![None; g.n()];
        for (i, set) in self.sets.iter().enumerate() {
            if set.is_empty() {
                return Err(FamilyViolation::EmptySet { set: i });
            }
            for &v in set {
                if v >= g.n() {
                    return Err(FamilyViolation::VertexOutOfRange { set: i, vertex: v });
                }
                if let Some(first) = owner[v] {
                    return Err(FamilyViolation::Overlap { first, second: i, vertex: v });
                }
                owner[v] = Some(i);
            }
        }
        for (i, set) in self.sets.iter().enumerate() {
            let mut covered = set.to_bitset(g.n());
            for &v in set {
                covered.union_with(g.neighborhood(v));
            }
            if let Some(w) = (0..g.n()).find(|&w| !covered.contains(w)) {
                return Err(FamilyViolation::NotDominating { set: i, undominated: w });
            }
        }
        Ok(())
    }
}

/// Looks for `d` disjoint dominating sets. `None` means none exist.
pub fn find_disjoint_dominating_sets(g: &Graph, d: usize) -> Result<Option<DomaticFamily>> {
    if g.n() == 0 {
        return Err(Error::EmptyGraph);
    }
    if d == 0 {
        return Err(Error::InvalidParameters("need at least one dominating set".into()));
    }
    if d == 1 {
        return Ok(Some(DomaticFamily::new(vec![VertexSet::full(g.n())])));
    }
    // each class must meet the closed neighborhood of a minimum-degree vertex
    if d > g.min_degree().unwrap() + 1 {
        return Ok(None);
    }
    let family = PartitionSearch::new(g, d).run();
    if let Some(f) = &family {
        if let Err(v) = f.verify(g) {
            panic!("domatic search returned an invalid family: {v}");
        }
    }
    Ok(family)
}

/// Largest `d` with `d` disjoint dominating sets, and such a family.
pub fn domatic_number(g: &Graph) -> Result<(usize, DomaticFamily)> {
    let mut best = find_disjoint_dominating_sets(g, 1)?.expect("whole vertex set dominates");
    let mut d = 1;
    while let Some(f) = find_disjoint_dominating_sets(g, d + 1)? {
        best = f;
        d += 1;
    }
    Ok((d, best))
}

const UNDECIDED: usize = usize::MAX;

/// Assigns every vertex one of `d` classes so that each closed neighborhood
/// sees all classes.
struct PartitionSearch<'g> {
    g: &'g Graph,
    d: usize,
    label: Vec<usize>,
    /// `hits[w * d + c]`: members of class `c` in `N[w]`
    hits: Vec<u32>,
    /// undecided vertices in `N[w]`
    open: Vec<u32>,
    /// classes with no member in `N[w]`
    missing: Vec<u32>,
    closed_nbhd: Vec<Vec<usize>>,
}

impl<'g> PartitionSearch<'g> {
    fn new(g: &'g Graph, d: usize) -> Self {
        let n = g.n();
        let closed_nbhd: Vec<Vec<usize>> = (0..n)
            .map(|w| {
                let mut c: Vec<usize> = g.neighbors(w).collect();
                c.push(w);
                c.sort_unstable();
                c
            })
            .collect();
        PartitionSearch {
            g,
            d,
            label: vec![UNDECIDED; n],
            hits: vec![0; n * d],
            open: closed_nbhd.iter().map(|c| c.len() as u32).collect(),
            missing: vec![d as u32; n],
            closed_nbhd,
        }
    }

    fn run(mut self) -> Option<DomaticFamily> {
        if !self.descend(0) {
            return None;
        }
        let mut sets = vec![Vec::new(); self.d];
        for (v, &c) in self.label.iter().enumerate() {
            sets[c].push(v);
        }
        Some(DomaticFamily::new(sets.into_iter().map(VertexSet::from).collect()))
    }

    fn assign(&mut self, v: usize, c: usize) {
        self.label[v] = c;
        for &w in &self.closed_nbhd[v] {
            self.open[w] -= 1;
            let slot = &mut self.hits[w * self.d + c];
            if *slot == 0 {
                self.missing[w] -= 1;
            }
            *slot += 1;
        }
    }

    fn unassign(&mut self, v: usize) {
        let c = self.label[v];
        self.label[v] = UNDECIDED;
        for &w in &self.closed_nbhd[v] {
            self.open[w] += 1;
            let slot = &mut self.hits[w * self.d + c];
            *slot -= 1;
            if *slot == 0 {
                self.missing[w] += 1;
            }
        }
    }

    /// Each undecided vertex in `N[w]` can fill at most one missing class.
    fn consistent_around(&self, v: usize) -> bool {
        self.closed_nbhd[v]
            .iter()
            .all(|&w| self.missing[w] <= self.open[w])
    }

    /// Tightest closed neighborhood that still has undecided members.
    fn pick_constraint(&self) -> Option<usize> {
        (0..self.g.n())
            .filter(|&w| self.open[w] > 0)
            .min_by_key(|&w| (self.open[w] - self.missing[w], w))
    }

    fn descend(&mut self, used: usize) -> bool {
        let Some(w) = self.pick_constraint() else {
            return (0..self.g.n()).all(|w| self.missing[w] == 0);
        };
        let v = *self.closed_nbhd[w]
            .iter()
            .find(|&&v| self.label[v] == UNDECIDED)
            .expect("constraint has an undecided member");
        let top = (used + 1).min(self.d);
        // classes still missing at w first
        let mut order: Vec<usize> = (0..top)
            .filter(|&c| self.hits[w * self.d + c] == 0)
            .collect();
        order.extend((0..top).filter(|&c| self.hits[w * self.d + c] != 0));
        for c in order {
            self.assign(v, c);
            if self.consistent_around(v) && self.descend(used.max(c + 1)) {
                return true;
            }
            self.unassign(v);
        }
        false
    }
}

/// Brute-force domatic number for small graphs, independent of the search:
/// for `d = n, n-1, ..., 1` tries every labeling of the vertices with
/// `{unused, 1..d}` (up to renaming of the classes) and tests the family
/// conditions directly.
pub fn domatic_oracle(g: &Graph) -> Result<usize> {
    domatic_oracle_with_cap(g, DOMATIC_ORACLE_CAP)
}

pub fn domatic_oracle_with_cap(g: &Graph, cap: usize) -> Result<usize> {
    let n = g.n();
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    if n > cap {
        return Err(Error::OracleCap { n, cap });
    }
    for d in (1..=n).rev() {
        let mut labels = vec![0usize; n];
        if oracle_labeling(g, d, &mut labels, 0, 0) {
            return Ok(d);
        }
    }
    unreachable!("the whole vertex set dominates")
}

fn oracle_labeling(g: &Graph, d: usize, labels: &mut [usize], v: usize, opened: usize) -> bool {
    let n = labels.len();
    if v == n {
        return opened == d
            && (1..=d).all(|class| {
                (0..n).all(|w| (0..n).any(|u| labels[u] == class && (u == w || g.has_edge(u, w))))
            });
    }
    if opened + (n - v) < d {
        return false;
    }
    for label in 0..=(opened + 1).min(d) {
        labels[v] = label;
        if oracle_labeling(g, d, labels, v + 1, opened.max(label)) {
            return true;
        }
    }
    labels[v] = 0;
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::{cycle, path};

    #[test]
    fn dominates_examples() {
        let c5 = cycle(5);
        assert!(dominates(&c5, 3, 3).unwrap());
        assert!(dominates(&c5, 0, 1).unwrap());
        assert!(!dominates(&c5, 0, 2).unwrap());
        assert!(dominates(&c5, 0, 5).is_err());
    }

    #[test]
    fn dominating_set_examples() {
        let c5 = cycle(5);
        assert!(is_dominating_set(&c5, &[0, 2].into()));
        assert!(!is_dominating_set(&c5, &[0].into()));
        assert!(is_dominating_set(&Graph::complete(4), &[3].into()));
        assert!(!is_dominating_set(&c5, &VertexSet::new()));
        assert!(is_dominating_set(&Graph::empty(0), &VertexSet::new()));
        assert!(!is_dominating_set(&c5, &[0, 9].into()));
    }

    #[test]
    fn find_examples() {
        let c5 = cycle(5);
        let two = find_disjoint_dominating_sets(&c5, 2).unwrap().unwrap();
        assert_eq!(two.len(), 2);
        assert_eq!(two.verify(&c5), Ok(()));
        assert_eq!(find_disjoint_dominating_sets(&c5, 3).unwrap(), None);
        let k3 = find_disjoint_dominating_sets(&Graph::complete(3), 3).unwrap().unwrap();
        assert_eq!(k3.sets, vec![[0].into(), [1].into(), [2].into()]);
        assert!(find_disjoint_dominating_sets(&Graph::empty(0), 1).is_err());
        assert!(find_disjoint_dominating_sets(&c5, 0).is_err());
    }

    #[test]
    fn domatic_number_examples() {
        assert_eq!(domatic_number(&Graph::complete(4)).unwrap().0, 4);
        assert_eq!(domatic_number(&cycle(5)).unwrap().0, 2);
        assert_eq!(domatic_number(&cycle(6)).unwrap().0, 3);
        assert_eq!(domatic_number(&path(3)).unwrap().0, 2);
        let isolated = Graph::new(4, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(domatic_number(&isolated).unwrap().0, 1);
        assert_eq!(domatic_number(&Graph::empty(0)), Err(Error::EmptyGraph));
    }

    #[test]
    fn oracle_examples() {
        assert_eq!(domatic_oracle(&cycle(6)).unwrap(), 3);
        assert_eq!(domatic_oracle(&path(3)).unwrap(), 2);
        assert_eq!(domatic_oracle(&cycle(5)).unwrap(), 2);
        assert_eq!(domatic_oracle(&Graph::complete(4)).unwrap(), 4);
        assert!(domatic_oracle(&Graph::empty(11)).is_err());
    }

    #[test]
    fn family_violations() {
        let c5 = cycle(5);
        let f = DomaticFamily::new(vec![[0, 2].into(), [2, 4].into()]);
        assert_eq!(f.verify(&c5), Err(FamilyViolation::Overlap { first: 0, second: 1, vertex: 2 }));
        let f = DomaticFamily::new(vec![[0].into()]);
        assert_eq!(f.verify(&c5), Err(FamilyViolation::NotDominating { set: 0, undominated: 2 }));
    }
}
