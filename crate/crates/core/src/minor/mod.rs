//! Clique minors: models, verification, exact search and the Hadwiger number.
//!
//! A `K_h` minor is witnessed by a [`MinorModel`]: `h` disjoint, nonempty,
//! connected branch sets, every two of which are joined by an edge.

mod clique;
mod contract;
mod oracle;
mod search;

use std::fmt;

pub use clique::{clique_number, find_clique};
pub use oracle::{hadwiger_oracle, hadwiger_oracle_with_cap, HADWIGER_ORACLE_CAP};

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// Default node budget for a single search.
pub const DEFAULT_BUDGET: u64 = 10_000_000;

/// When `n - h` is at most this, the contraction search runs alongside the
/// branch-set search.
pub const NEAR_SPANNING_SLACK: usize = 4;

/// An ordered family of branch sets.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct MinorModel {
    pub branch_sets: Vec<VertexSet>,
}

impl MinorModel {
    pub fn new(branch_sets: Vec<VertexSet>) -> Self {
        MinorModel { branch_sets }
    }

    /// Number of branch sets, i.e. the order of the clique minor.
    pub fn order(&self) -> usize {
        self.branch_sets.len()
    }

    /// Index of the branch set holding `v`, if any.
    pub fn set_of(&self, v: usize) -> Option<usize> {
        self.branch_sets.iter().position(|s| s.contains(v))
    }
}

/// First failing condition found by [`verify_clique_minor_model`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ModelViolation {
    VertexOutOfRange { set: usize, vertex: usize },
    EmptySet { set: usize },
    Overlap { first: usize, second: usize, vertex: usize },
    Disconnected { set: usize },
    NotAdjacent { first: usize, second: usize },
}

impl fmt::Display for ModelViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ModelViolation::VertexOutOfRange { set, vertex } => {
                write!(f, "branch set {set}: vertex {vertex} out of range")
            }
            ModelViolation::EmptySet { set } => write!(f, "branch set {set} is empty"),
            ModelViolation::Overlap { first, second, vertex } => {
                write!(f, "branch sets {first} and {second} share vertex {vertex}")
            }
            ModelViolation::Disconnected { set } => {
                write!(f, "branch set {set} does not induce a connected subgraph")
            }
            ModelViolation::NotAdjacent { first, second } => {
                write!(f, "pair ({first},{second}) not adjacent")
            }
        }
    }
}

/// Checks the three model conditions in order: ranges and nonemptiness,
/// disjointness, connectivity, then pairwise adjacency.
pub fn verify_clique_minor_model(
    g: &Graph,
    model: &MinorModel,
) -> std::result::Result<(), ModelViolation> {
    let mut owner: Vec<Option<usize>> = vec![None; g.n()];
    for (i, set) in model.branch_sets.iter().enumerate() {
        if set.is_empty() {
            return Err(ModelViolation::EmptySet { set: i });
        }
        for &v in set {
            if v >= g.n() {
                return Err(ModelViolation::VertexOutOfRange { set: i, vertex: v });
            }
            if let Some(first) = owner[v] {
                return Err(ModelViolation::Overlap { first, second: i, vertex: v });
            }
            owner[v] = Some(i);
        }
    }
    for (i, set) in model.branch_sets.iter().enumerate() {
        if !g.is_connected_subset(set).unwrap_or(false) {
            return Err(ModelViolation::Disconnected { set: i });
        }
    }
    let h = model.order();
    let mut touches = vec![vec![false; h]; h];
    for (u, v) in g.edges() {
        if let (Some(a), Some(b)) = (owner[u], owner[v]) {
            touches[a][b] = true;
            touches[b][a] = true;
        }
    }
    let missing = (0..h).flat_map(|i| (i + 1..h).map(move |j| (i, j))).find(|&(i, j)| !touches[i][j]);
    match missing {
        Some((first, second)) => Err(ModelViolation::NotAdjacent { first, second }),
        None => Ok(()),
    }
}

/// Node budget for the exhaustive searches. Counting search-tree nodes
/// rather than wall time keeps results reproducible.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchBudget {
    max_nodes: u64,
    used: u64,
    exhausted: bool,
}

impl SearchBudget {
    /// # Panics
    /// If `max_nodes` is zero.
    pub fn new(max_nodes: u64) -> Self {
        assert!(max_nodes > 0, "search budget must allow at least one node");
        SearchBudget { max_nodes, used: 0, exhausted: false }
    }

    pub fn max_nodes(&self) -> u64 {
        self.max_nodes
    }

    pub fn used(&self) -> u64 {
        self.used
    }

    pub fn remaining(&self) -> u64 {
        self.max_nodes - self.used
    }

    pub fn is_exhausted(&self) -> bool {
        self.exhausted
    }

    /// Charges one node. Returns `false` once the budget is spent.
    #[inline]
    pub fn tick(&mut self) -> bool {
        if self.used >= self.max_nodes {
            self.exhausted = true;
            return false;
        }
        self.used += 1;
        true
    }
}

impl Default for SearchBudget {
    fn default() -> Self {
        SearchBudget::new(DEFAULT_BUDGET)
    }
}

/// Outcome of a bounded exhaustive search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SearchOutcome<W> {
    Found(W),
    NotFound,
    /// The budget ran out before the search could decide.
    Indeterminate,
}

impl<W> SearchOutcome<W> {
    pub fn is_found(&self) -> bool {
        matches!(self, SearchOutcome::Found(_))
    }

    pub fn found(self) -> Option<W> {
        match self {
            SearchOutcome::Found(w) => Some(w),
            _ => None,
        }
    }
}

pub type MinorSearch = SearchOutcome<MinorModel>;

/// `max { h <= n : C(h,2) <= m }`. A `K_h` model needs `C(h,2)` distinct
/// edges between branch sets, so this bounds the Hadwiger number.
pub fn hadwiger_upper_bound(g: &Graph) -> usize {
    let m = g.edge_count();
    let mut h = 0;
    while h < g.n() && (h + 1) * h / 2 <= m {
        h += 1;
    }
    h
}

/// Decides whether `g` has a `K_h` minor.
///
/// Runs the branch-set search; when `n - h <= NEAR_SPANNING_SLACK` the
/// contraction search runs too and whichever decides first wins. Every
/// `Found` model is re-verified before it is returned.
pub fn find_clique_minor(g: &Graph, h: usize, budget: &mut SearchBudget) -> MinorSearch {
    let outcome = find_clique_minor_unchecked(g, h, budget);
    if let SearchOutcome::Found(model) = &outcome {
        assert_eq!(model.order(), h, "search returned a model of the wrong order");
        if let Err(v) = verify_clique_minor_model(g, model) {
            panic!("search returned an invalid K_{h} model: {v}");
        }
    }
    outcome
}

fn find_clique_minor_unchecked(g: &Graph, h: usize, budget: &mut SearchBudget) -> MinorSearch {
    if h == 0 {
        return SearchOutcome::Found(MinorModel::default());
    }
    if h > hadwiger_upper_bound(g) {
        return SearchOutcome::NotFound;
    }
    if let Some(clique) = find_clique(g, h) {
        return SearchOutcome::Found(MinorModel::new(
            clique.into_iter().map(|v| VertexSet::from([v])).collect(),
        ));
    }
    if g.n() - h <= NEAR_SPANNING_SLACK {
        race(g, h, budget)
    } else {
        search::BranchSearch::new(g, h).run(budget)
    }
}

/// Runs the two complete searches in alternation on doubling node slices,
/// restarting each from scratch per slice. All work is charged to the shared
/// budget, so the outcome is deterministic for a fixed budget.
fn race(g: &Graph, h: usize, budget: &mut SearchBudget) -> MinorSearch {
    let mut slice = 1u64 << 10;
    loop {
        for step in 0..2 {
            let grant = slice.min(budget.remaining());
            if grant == 0 {
                budget.exhausted = true;
                return SearchOutcome::Indeterminate;
            }
            let mut local = SearchBudget::new(grant);
            let outcome = if step == 0 {
                search::BranchSearch::new(g, h).run(&mut local)
            } else {
                contract::ContractionSearch::new(g, h).run(&mut local)
            };
            budget.used += local.used;
            if outcome != SearchOutcome::Indeterminate {
                return outcome;
            }
        }
        slice = slice.saturating_mul(2);
    }
}

/// Result of [`hadwiger_number`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Hadwiger {
    /// `K_value` found and `K_{value+1}` refuted.
    Exact { value: usize, model: MinorModel },
    /// `K_value` found; the refutation step ran out of budget.
    LowerBound { value: usize, model: MinorModel },
}

impl Hadwiger {
    pub fn value(&self) -> usize {
        match self {
            Hadwiger::Exact { value, .. } | Hadwiger::LowerBound { value, .. } => *value,
        }
    }

    pub fn model(&self) -> &MinorModel {
        match self {
            Hadwiger::Exact { model, .. } | Hadwiger::LowerBound { model, .. } => model,
        }
    }

    pub fn is_exact(&self) -> bool {
        matches!(self, Hadwiger::Exact { .. })
    }
}

/// Computes the Hadwiger number, searching upward from the clique number.
/// The empty graph is rejected.
pub fn hadwiger_number(g: &Graph, budget: &mut SearchBudget) -> Result<Hadwiger> {
    if g.n() == 0 {
        return Err(Error::EmptyGraph);
    }
    let clique = find_clique(g, clique_number(g)).expect("maximum clique exists");
    let mut value = clique.len();
    let mut model = MinorModel::new(clique.into_iter().map(|v| VertexSet::from([v])).collect());
    let bound = hadwiger_upper_bound(g);
    while value < bound {
        match find_clique_minor(g, value + 1, budget) {
            SearchOutcome::Found(m) => {
                value += 1;
                model = m;
            }
            SearchOutcome::NotFound => break,
            SearchOutcome::Indeterminate => return Ok(Hadwiger::LowerBound { value, model }),
        }
    }
    Ok(Hadwiger::Exact { value, model })
}
