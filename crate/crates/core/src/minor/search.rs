//! Branch-set extension search.
//!
//! Vertices are decided in a fixed order, highest degree first with ties
//! broken by id. The next vertex either opens a new branch set, joins an
//! existing one, or is left unused. Sets are therefore created in order of
//! their first vertex, which removes the `h!` relabelings of any model. A
//! vertex may join a set it is not (yet) adjacent to; the set then has to be
//! reconnected through vertices that are still undecided.
//!
//! Pruning at every node, with `U` the undecided vertices:
//! * sets so far plus `|U|` must reach `h`;
//! * each set must lie inside one component of `G[S ∪ U]` (its *closure*);
//! * two sets that are not adjacent must have adjacent closures;
//! * while sets are still missing, every closure needs a neighbor in `U`.

use fixedbitset::FixedBitSet;

use super::{MinorModel, MinorSearch, SearchBudget, SearchOutcome};
use crate::graph::{Graph, VertexSet};

pub(super) struct BranchSearch<'g> {
    g: &'g Graph,
    h: usize,
    order: Vec<usize>,
    sets: Vec<FixedBitSet>,
    count: usize,
    undecided: FixedBitSet,
    closure: Vec<FixedBitSet>,
    reach: Vec<FixedBitSet>,
    scratch: FixedBitSet,
    allowed: FixedBitSet,
}

enum Step {
    Found,
    Fail,
    OutOfBudget,
}

impl<'g> BranchSearch<'g> {
    pub(super) fn new(g: &'g Graph, h: usize) -> Self {
        let n = g.n();
        let empty = FixedBitSet::with_capacity(n);
        let mut undecided = empty.clone();
        undecided.insert_range(..);
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
        BranchSearch {
            g,
            h,
            order,
            sets: vec![empty.clone(); h],
            count: 0,
            undecided,
            closure: vec![empty.clone(); h],
            reach: vec![empty.clone(); h],
            scratch: empty.clone(),
            allowed: empty,
        }
    }

    pub(super) fn run(mut self, budget: &mut SearchBudget) -> MinorSearch {
        match self.descend(0, budget) {
            Step::Found => {
                let mut sets: Vec<VertexSet> =
                    self.sets[..self.count].iter().map(VertexSet::from_bitset).collect();
                sets.sort();
                SearchOutcome::Found(MinorModel::new(sets))
            }
            Step::Fail => SearchOutcome::NotFound,
            Step::OutOfBudget => SearchOutcome::Indeterminate,
        }
    }

    fn descend(&mut self, next: usize, budget: &mut SearchBudget) -> Step {
        if !budget.tick() {
            return Step::OutOfBudget;
        }
        if !self.feasible() {
            return Step::Fail;
        }
        if self.count == self.h && self.complete() {
            return Step::Found;
        }
        let n = self.g.n();
        if next == n {
            return Step::Fail;
        }
        let v = self.order[next];
        self.undecided.set(v, false);

        if self.count < self.h {
            self.sets[self.count].clear();
            self.sets[self.count].insert(v);
            self.count += 1;
            match self.descend(next + 1, budget) {
                Step::Fail => {}
                other => return other,
            }
            self.count -= 1;
            self.sets[self.count].set(v, false);
        }

        // adjacent sets first, then the ones v would have to be rejoined to
        for adjacent_pass in [true, false] {
            for i in 0..self.count {
                let touches = !self.sets[i].is_disjoint(self.g.neighborhood(v));
                if touches != adjacent_pass {
                    continue;
                }
                self.sets[i].insert(v);
                match self.descend(next + 1, budget) {
                    Step::Fail => {}
                    other => return other,
                }
                self.sets[i].set(v, false);
            }
        }

        match self.descend(next + 1, budget) {
            Step::Fail => {}
            other => return other,
        }
        self.undecided.insert(v);
        Step::Fail
    }

    fn feasible(&mut self) -> bool {
        let free = self.undecided.count_ones(..);
        if self.count + free < self.h {
            return false;
        }
        for i in 0..self.count {
            self.allowed.clone_from(&self.sets[i]);
            self.allowed.union_with(&self.undecided);
            let start = self.sets[i].minimum().expect("branch sets are nonempty");
            grow_component(
                self.g,
                start,
                &self.allowed,
                &mut self.closure[i],
                &mut self.reach[i],
                &mut self.scratch,
            );
            if !self.sets[i].is_subset(&self.closure[i]) {
                return false;
            }
            if self.count < self.h && self.reach[i].is_disjoint(&self.undecided) {
                return false;
            }
        }
        for i in 0..self.count {
            for j in i + 1..self.count {
                if self.reach[i].is_disjoint(&self.closure[j]) {
                    return false;
                }
            }
        }
        true
    }

    /// With all `h` sets open: every set connected on its own and every pair
    /// adjacent. Reuses `closure`/`reach` as scratch.
    fn complete(&mut self) -> bool {
        for i in 0..self.count {
            let start = self.sets[i].minimum().expect("branch sets are nonempty");
            self.allowed.clone_from(&self.sets[i]);
            grow_component(
                self.g,
                start,
                &self.allowed,
                &mut self.closure[i],
                &mut self.reach[i],
                &mut self.scratch,
            );
            if self.closure[i] != self.sets[i] {
                return false;
            }
        }
        for i in 0..self.count {
            for j in i + 1..self.count {
                if self.reach[i].is_disjoint(&self.sets[j]) {
                    return false;
                }
            }
        }
        true
    }
}

/// Component of `start` in `G[allowed]`, written to `comp`, with the union
/// of its neighborhoods written to `nbr`.
fn grow_component(
    g: &Graph,
    start: usize,
    allowed: &FixedBitSet,
    comp: &mut FixedBitSet,
    nbr: &mut FixedBitSet,
    fresh: &mut FixedBitSet,
) {
    comp.clear();
    comp.insert(start);
    nbr.clone_from(g.neighborhood(start));
    loop {
        fresh.clone_from(nbr);
        fresh.intersect_with(allowed);
        fresh.difference_with(comp);
        if fresh.is_clear() {
            return;
        }
        for v in fresh.ones() {
            comp.insert(v);
            nbr.union_with(g.neighborhood(v));
        }
    }
}
