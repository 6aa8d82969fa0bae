//! Contraction search for near-spanning targets.
//!
//! A `K_h` model with branch sets `S_1..S_h` contracts to a `K_h` subgraph
//! using `sum(|S_i| - 1) <= n - h` contractions along spanning trees of the
//! sets. So it suffices to enumerate forests of at most `n - h` edges and
//! look for an `h`-clique in each quotient. Forests are enumerated in
//! increasing edge order; two forests with the same vertex partition have
//! the same extensions, so a partition is expanded only from the forest
//! whose last edge index is smallest.

use std::collections::HashMap;

use fixedbitset::FixedBitSet;

use super::clique::{clique_in, core_filter};
use super::{MinorModel, MinorSearch, SearchBudget, SearchOutcome};
use crate::graph::{Graph, VertexSet};

pub(super) struct ContractionSearch<'g> {
    g: &'g Graph,
    h: usize,
    slack: usize,
    edges: Vec<(usize, usize)>,
    /// partition (as class-representative vector) -> smallest last-edge index
    seen: HashMap<Vec<u16>, usize>,
    found: Option<MinorModel>,
}

enum Step {
    Found,
    Fail,
    OutOfBudget,
}

impl<'g> ContractionSearch<'g> {
    pub(super) fn new(g: &'g Graph, h: usize) -> Self {
        assert!(g.n() <= u16::MAX as usize, "contraction search limited to 65535 vertices");
        ContractionSearch {
            g,
            h,
            slack: g.n().saturating_sub(h),
            edges: g.edges(),
            seen: HashMap::new(),
            found: None,
        }
    }

    pub(super) fn run(mut self, budget: &mut SearchBudget) -> MinorSearch {
        if self.h > self.g.n() {
            return SearchOutcome::NotFound;
        }
        let rep: Vec<u16> = (0..self.g.n() as u16).collect();
        match self.descend(&rep, 0, 0, budget) {
            Step::Found => SearchOutcome::Found(self.found.take().expect("model recorded")),
            Step::Fail => SearchOutcome::NotFound,
            Step::OutOfBudget => SearchOutcome::Indeterminate,
        }
    }

    fn descend(
        &mut self,
        rep: &[u16],
        depth: usize,
        first_edge: usize,
        budget: &mut SearchBudget,
    ) -> Step {
        if !budget.tick() {
            return Step::OutOfBudget;
        }
        if let Some(model) = self.clique_in_quotient(rep) {
            self.found = Some(model);
            return Step::Found;
        }
        if depth == self.slack {
            return Step::Fail;
        }
        for e in first_edge..self.edges.len() {
            let (u, v) = self.edges[e];
            let (a, b) = (rep[u], rep[v]);
            if a == b {
                continue;
            }
            let (keep, gone) = (a.min(b), a.max(b));
            let mut merged = rep.to_vec();
            for r in merged.iter_mut() {
                if *r == gone {
                    *r = keep;
                }
            }
            match self.seen.get(&merged) {
                Some(&last) if last <= e => continue,
                _ => {
                    self.seen.insert(merged.clone(), e);
                }
            }
            match self.descend(&merged, depth + 1, e + 1, budget) {
                Step::Fail => {}
                other => return other,
            }
        }
        Step::Fail
    }

    /// Looks for `h` pairwise adjacent classes of the partition `rep`.
    fn clique_in_quotient(&self, rep: &[u16]) -> Option<MinorModel> {
        let n = self.g.n();
        let mut index = vec![usize::MAX; n];
        let mut classes: Vec<usize> = Vec::new();
        for &r in &rep[..n] {
            let r = r as usize;
            if index[r] == usize::MAX {
                index[r] = classes.len();
                classes.push(r);
            }
        }
        let k = classes.len();
        let mut rows = vec![FixedBitSet::with_capacity(k); k];
        for &(u, v) in &self.edges {
            let (a, b) = (index[rep[u] as usize], index[rep[v] as usize]);
            if a != b {
                rows[a].insert(b);
                rows[b].insert(a);
            }
        }
        let mut cand = FixedBitSet::with_capacity(k);
        cand.insert_range(..);
        core_filter(&rows, &mut cand, self.h);
        let mut chosen = Vec::with_capacity(self.h);
        if !clique_in(&rows, &cand, self.h, &mut chosen) {
            return None;
        }
        let sets = chosen
            .into_iter()
            .map(|c| {
                let r = classes[c] as u16;
                (0..n).filter(|&v| rep[v] == r).collect::<VertexSet>()
            })
            .collect();
        Some(MinorModel::new(sets))
    }
}
