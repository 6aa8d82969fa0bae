//! Vertex-disjoint paths: instances, verification and a backtracking solver.

use std::collections::VecDeque;
use std::fmt;

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::minor::{SearchBudget, SearchOutcome};

/// A graph with terminal pairs `(s_i, t_i)`. All `2k` terminals are
/// distinct. A pair may already be adjacent.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DisjointPathsInstance {
    graph: Graph,
    pairs: Vec<(usize, usize)>,
}

impl DisjointPathsInstance {
    pub fn new(graph: Graph, pairs: Vec<(usize, usize)>) -> Result<Self> {
        let mut seen = FixedBitSet::with_capacity(graph.n());
        for &(s, t) in &pairs {
            graph.check_vertex(s)?;
            graph.check_vertex(t)?;
            if s == t {
                return Err(Error::InvalidInstance(format!("pair ({s},{t}) has equal ends")));
            }
            for x in [s, t] {
                if seen.put(x) {
                    return Err(Error::InvalidInstance(format!(
                        "terminal {x} appears in more than one pair"
                    )));
                }
            }
        }
        Ok(DisjointPathsInstance { graph, pairs })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    pub fn k(&self) -> usize {
        self.pairs.len()
    }
}

/// One path per terminal pair, as vertex sequences.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct PathSet {
    pub paths: Vec<Vec<usize>>,
}

impl PathSet {
    pub fn new(paths: Vec<Vec<usize>>) -> Self {
        PathSet { paths }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PathViolation {
    WrongCount { expected: usize, found: usize },
    VertexOutOfRange { path: usize, vertex: usize },
    WrongEnds { path: usize },
    NotAnEdge { path: usize, u: usize, v: usize },
    Repeats { path: usize, vertex: usize },
    Shared { first: usize, second: usize, vertex: usize },
}

impl fmt::Display for PathViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PathViolation::WrongCount { expected, found } => {
                write!(f, "expected {expected} paths, found {found}")
            }
            PathViolation::VertexOutOfRange { path, vertex } => {
                write!(f, "path {path}: vertex {vertex} out of range")
            }
            PathViolation::WrongEnds { path } => {
                write!(f, "path {path} does not join its terminal pair")
            }
            PathViolation::NotAnEdge { path, u, v } => {
                write!(f, "path {path}: {u}-{v} is not an edge")
            }
            PathViolation::Repeats { path, vertex } => {
                write!(f, "path {path} visits {vertex} twice")
            }
            PathViolation::Shared { first, second, vertex } => {
                write!(f, "paths {first} and {second} share vertex {vertex}")
            }
        }
    }
}

/// Checks each path joins its pair along edges without repeats, and that
/// no vertex (endpoints included) lies on two paths.
pub fn verify_path_set(
    inst: &DisjointPathsInstance,
    ps: &PathSet,
) -> std::result::Result<(), PathViolation> {
    let g = inst.graph();
    if ps.paths.len() != inst.k() {
        return Err(PathViolation::WrongCount { expected: inst.k(), found: ps.paths.len() });
    }
    let mut owner = vec![None; g.n()];
    for (i, (path, &(s, t))) in ps.paths.iter().zip(inst.pairs()).enumerate() {
        if let Some(&v) = path.iter().find(|&&v| v >= g.n()) {
            return Err(PathViolation::VertexOutOfRange { path: i, vertex: v });
        }
        if path.first() != Some(&s) || path.last() != Some(&t) {
            return Err(PathViolation::WrongEnds { path: i });
        }
        for w in path.windows(2) {
            if !g.has_edge(w[0], w[1]) {
                return Err(PathViolation::NotAnEdge { path: i, u: w[0], v: w[1] });
            }
        }
        for &v in path {
            match owner[v] {
                Some(j) if j == i => return Err(PathViolation::Repeats { path: i, vertex: v }),
                Some(j) => return Err(PathViolation::Shared { first: j, second: i, vertex: v }),
                None => owner[v] = Some(i),
            }
        }
    }
    Ok(())
}

/// Routes the pairs in input order by depth-first path extension, trying
/// neighbors in id order. A branch is cut as soon as some pair that is not
/// yet routed (including the one in progress) is disconnected in what
/// remains of the graph.
pub fn find_disjoint_paths(
    inst: &DisjointPathsInstance,
    budget: &mut SearchBudget,
) -> SearchOutcome<PathSet> {
    let mut router = Router::new(inst);
    let outcome = match router.route_pair(0, budget) {
        Routed::Yes => SearchOutcome::Found(PathSet::new(router.done)),
        Routed::No => SearchOutcome::NotFound,
        Routed::OutOfBudget => SearchOutcome::Indeterminate,
    };
    if let SearchOutcome::Found(ps) = &outcome {
        if let Err(v) = verify_path_set(inst, ps) {
            panic!("path search returned an invalid path set: {v}");
        }
    }
    outcome
}

enum Routed {
    Yes,
    No,
    OutOfBudget,
}

struct Router<'a> {
    inst: &'a DisjointPathsInstance,
    /// vertices on routed paths or on the path in progress
    used: FixedBitSet,
    /// terminals of pairs not yet finished
    reserved: FixedBitSet,
    done: Vec<Vec<usize>>,
    current: Vec<usize>,
}

impl<'a> Router<'a> {
    fn new(inst: &'a DisjointPathsInstance) -> Self {
        let n = inst.graph().n();
        let mut reserved = FixedBitSet::with_capacity(n);
        for &(s, t) in inst.pairs() {
            reserved.insert(s);
            reserved.insert(t);
        }
        Router {
            inst,
            used: FixedBitSet::with_capacity(n),
            reserved,
            done: Vec::new(),
            current: Vec::new(),
        }
    }

    fn route_pair(&mut self, i: usize, budget: &mut SearchBudget) -> Routed {
        if i == self.inst.k() {
            return Routed::Yes;
        }
        let (s, _) = self.inst.pairs()[i];
        self.reserved.set(s, false);
        self.used.insert(s);
        self.current.push(s);
        let r = self.extend(i, budget);
        if !matches!(r, Routed::Yes) {
            self.current.pop();
            self.used.set(s, false);
            self.reserved.insert(s);
        }
        r
    }

    fn extend(&mut self, i: usize, budget: &mut SearchBudget) -> Routed {
        if !budget.tick() {
            return Routed::OutOfBudget;
        }
        let (_, t) = self.inst.pairs()[i];
        let head = *self.current.last().unwrap();
        if head == t {
            let path = std::mem::take(&mut self.current);
            self.done.push(path);
            match self.route_pair(i + 1, budget) {
                Routed::No => {}
                other => return other,
            }
            self.current = self.done.pop().unwrap();
            return Routed::No;
        }
        if !self.remaining_pairs_connected(i, head) {
            return Routed::No;
        }
        let g = self.inst.graph();
        let next: Vec<usize> = g
            .neighbors(head)
            .filter(|&w| !self.used.contains(w) && (!self.reserved.contains(w) || w == t))
            .collect();
        for w in next {
            let was_reserved = w == t;
            if was_reserved {
                self.reserved.set(t, false);
            }
            self.used.insert(w);
            self.current.push(w);
            match self.extend(i, budget) {
                Routed::No => {}
                other => return other,
            }
            self.current.pop();
            self.used.set(w, false);
            if was_reserved {
                self.reserved.insert(t);
            }
        }
        Routed::No
    }

    /// The pair in progress (from `head`) and every later pair must still be
    /// joinable through vertices that are neither used nor reserved.
    fn remaining_pairs_connected(&self, i: usize, head: usize) -> bool {
        let pairs = self.inst.pairs();
        std::iter::once((head, pairs[i].1))
            .chain(pairs[i + 1..].iter().copied())
            .all(|(s, t)| self.reachable(s, t))
    }

    fn reachable(&self, s: usize, t: usize) -> bool {
        let g = self.inst.graph();
        let mut seen = FixedBitSet::with_capacity(g.n());
        seen.insert(s);
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            for w in g.neighbors(u) {
                if w == t {
                    return true;
                }
                if seen.contains(w) || self.used.contains(w) || self.reserved.contains(w) {
                    continue;
                }
                seen.insert(w);
                queue.push_back(w);
            }
        }
        false
    }
}
