//! Clique subgraphs: used as the trivial lower bound for minors and as the
//! final test of the contraction search.

use fixedbitset::FixedBitSet;

use crate::graph::Graph;

/// Finds a clique of exactly `k` vertices, smallest ids preferred.
pub fn find_clique(g: &Graph, k: usize) -> Option<Vec<usize>> {
    let mut cand = full(g.n());
    core_filter(g.rows(), &mut cand, k);
    let mut chosen = Vec::with_capacity(k);
    clique_in(g.rows(), &cand, k, &mut chosen).then_some(chosen)
}

/// Size of a maximum clique.
pub fn clique_number(g: &Graph) -> usize {
    let rows = g.rows();
    let mut k = usize::from(g.n() > 0);
    let mut chosen = Vec::new();
    while k < g.n() {
        let mut cand = full(g.n());
        core_filter(rows, &mut cand, k + 1);
        chosen.clear();
        if !clique_in(rows, &cand, k + 1, &mut chosen) {
            break;
        }
        k += 1;
    }
    k
}

pub(crate) fn full(n: usize) -> FixedBitSet {
    let mut b = FixedBitSet::with_capacity(n);
    b.insert_range(..);
    b
}

/// Drops candidates with fewer than `k - 1` candidate neighbors until stable.
pub(crate) fn core_filter(rows: &[FixedBitSet], cand: &mut FixedBitSet, k: usize) {
    if k <= 1 {
        return;
    }
    loop {
        let mut changed = false;
        for v in cand.ones().collect::<Vec<_>>() {
            if rows[v].intersection_count(cand) + 1 < k {
                cand.set(v, false);
                changed = true;
            }
        }
        if !changed {
            return;
        }
    }
}

/// Extends `chosen` to `k` vertices using only `cand`, which must be
/// adjacent to everything already chosen.
pub(crate) fn clique_in(rows: &[FixedBitSet], cand: &FixedBitSet, k: usize, chosen: &mut Vec<usize>) -> bool {
    if chosen.len() >= k {
        return true;
    }
    let need = k - chosen.len();
    if cand.count_ones(..) < need || color_bound(rows, cand) < need {
        return false;
    }
    let mut rest = cand.clone();
    while let Some(v) = rest.minimum() {
        if rest.count_ones(..) < need {
            return false;
        }
        rest.set(v, false);
        let mut next = rest.clone();
        next.intersect_with(&rows[v]);
        chosen.push(v);
        if clique_in(rows, &next, k, chosen) {
            return true;
        }
        chosen.pop();
    }
    false
}

/// Greedy coloring of `cand`; the number of colors bounds any clique inside.
fn color_bound(rows: &[FixedBitSet], cand: &FixedBitSet) -> usize {
    let mut uncolored = cand.clone();
    let mut colors = 0;
    while !uncolored.is_clear() {
        colors += 1;
        let mut avail = uncolored.clone();
        while let Some(v) = avail.minimum() {
            avail.set(v, false);
            avail.difference_with(&rows[v]);
            uncolored.set(v, false);
        }
    }
    colors
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::{complete_bipartite, cycle, petersen};

    #[test]
    fn clique_numbers() {
        assert_eq!(clique_number(&Graph::empty(0)), 0);
        assert_eq!(clique_number(&Graph::empty(3)), 1);
        assert_eq!(clique_number(&Graph::complete(5)), 5);
        assert_eq!(clique_number(&cycle(5)), 2);
        assert_eq!(clique_number(&cycle(3)), 3);
        assert_eq!(clique_number(&petersen()), 2);
        assert_eq!(clique_number(&complete_bipartite(3, 4)), 2);
    }

    #[test]
    fn finds_explicit_clique() {
        let g = Graph::new(6, &[(0, 5), (1, 2), (1, 3), (2, 3), (3, 4), (2, 4), (1, 4)]).unwrap();
        assert_eq!(find_clique(&g, 4), Some(vec![1, 2, 3, 4]));
        assert_eq!(find_clique(&g, 5), None);
        assert_eq!(find_clique(&g, 0), Some(vec![]));
    }
}
