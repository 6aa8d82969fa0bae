//! Deterministic graph generators and small named graphs.

use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// A generator family together with its parameters.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum GraphKind {
    Complete(usize),
    /// Cycle on `n >= 3` vertices.
    Cycle(usize),
    Path(usize),
    /// Star with center 0 and the given number of leaves.
    Star(usize),
    Empty(usize),
    /// Erdős-Rényi `G(n, p)`.
    Random { n: usize, p: f64 },
}

impl fmt::Display for GraphKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphKind::Complete(n) => write!(f, "complete:{n}"),
            GraphKind::Cycle(n) => write!(f, "cycle:{n}"),
            GraphKind::Path(n) => write!(f, "path:{n}"),
            GraphKind::Star(k) => write!(f, "star:{k}"),
            GraphKind::Empty(n) => write!(f, "empty:{n}"),
            GraphKind::Random { n, p } => write!(f, "random:{n}:{p}"),
        }
    }
}

impl FromStr for GraphKind {
    type Err = Error;

    /// Parses `complete:4`, `cycle:5`, `random:8:0.5` and friends.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidParameters(format!("cannot parse generator `{s}`"));
        let mut parts = s.split(':');
        let kind = parts.next().ok_or_else(bad)?;
        let n: usize = parts.next().ok_or_else(bad)?.parse().map_err(|_| bad())?;
        let out = match kind {
            "complete" => GraphKind::Complete(n),
            "cycle" => GraphKind::Cycle(n),
            "path" => GraphKind::Path(n),
            "star" => GraphKind::Star(n),
            "empty" => GraphKind::Empty(n),
            "random" => {
                let p = parts.next().ok_or_else(bad)?.parse().map_err(|_| bad())?;
                GraphKind::Random { n, p }
            }
            _ => return Err(bad()),
        };
        if parts.next().is_some() {
            return Err(bad());
        }
        Ok(out)
    }
}

/// Builds a graph of the given kind. Only `Random` consumes the seed; the
/// result is a pure function of `(kind, seed)`.
pub fn generate(kind: GraphKind, seed: u64) -> Result<Graph> {
    match kind {
        GraphKind::Complete(n) => Ok(Graph::complete(n)),
        GraphKind::Cycle(n) if n < 3 => Err(Error::InvalidParameters(format!(
            "a cycle needs at least 3 vertices, got {n}"
        ))),
        GraphKind::Cycle(n) => Ok(cycle(n)),
        GraphKind::Path(n) => Ok(path(n)),
        GraphKind::Star(k) => Ok(star(k)),
        GraphKind::Empty(n) => Ok(Graph::empty(n)),
        GraphKind::Random { n, p } => {
            if !(0.0..=1.0).contains(&p) {
                return Err(Error::InvalidParameters(format!(
                    "edge probability {p} outside [0, 1]"
                )));
            }
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            Ok(random_graph(n, p, &mut rng))
        }
    }
}

pub(crate) fn random_graph<R: Rng>(n: usize, p: f64, rng: &mut R) -> Graph {
    let mut g = Graph::empty(n);
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                g.insert_edge(u, v);
            }
        }
    }
    g
}

pub fn cycle(n: usize) -> Graph {
    let mut g = Graph::empty(n);
    for v in 0..n {
        let w = (v + 1) % n;
        if v != w {
            g.insert_edge(v, w);
        }
    }
    g
}

pub fn path(n: usize) -> Graph {
    let mut g = Graph::empty(n);
    for v in 1..n {
        g.insert_edge(v - 1, v);
    }
    g
}

pub fn star(leaves: usize) -> Graph {
    let mut g = Graph::empty(leaves + 1);
    for v in 1..=leaves {
        g.insert_edge(0, v);
    }
    g
}

/// Wheel: hub 0 joined to a cycle on `1..=rim`.
pub fn wheel(rim: usize) -> Graph {
    let mut g = Graph::empty(rim + 1);
    for v in 1..=rim {
        g.insert_edge(0, v);
        let w = if v == rim { 1 } else { v + 1 };
        if v != w {
            g.insert_edge(v, w);
        }
    }
    g
}

/// `K_{a,b}` with parts `0..a` and `a..a+b`.
pub fn complete_bipartite(a: usize, b: usize) -> Graph {
    let mut g = Graph::empty(a + b);
    for u in 0..a {
        for v in a..a + b {
            g.insert_edge(u, v);
        }
    }
    g
}

/// Petersen graph: outer 5-cycle `0..5`, spokes `i - (i+5)`, inner pentagram.
pub fn petersen() -> Graph {
    let mut g = Graph::empty(10);
    for i in 0..5 {
        g.insert_edge(i, (i + 1) % 5);
        g.insert_edge(i, i + 5);
        g.insert_edge(5 + i, 5 + (i + 2) % 5);
    }
    g
}

/// Every labeled graph on `n` vertices, in order of the edge mask over the
/// lexicographic pair list. There are `2^(n(n-1)/2)` of them.
pub fn all_labeled_graphs(n: usize) -> impl Iterator<Item = Graph> {
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    assert!(pairs.len() < 32, "too many labeled graphs to enumerate");
    (0u32..(1u32 << pairs.len())).map(move |mask| {
        let mut g = Graph::empty(n);
        for (bit, &(u, v)) in pairs.iter().enumerate() {
            if mask >> bit & 1 == 1 {
                g.insert_edge(u, v);
            }
        }
        g
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generator_examples() {
        let c5 = generate(GraphKind::Cycle(5), 0).unwrap();
        assert_eq!((c5.n(), c5.edge_count()), (5, 5));
        let k4 = generate(GraphKind::Complete(4), 0).unwrap();
        assert_eq!(k4.edge_count(), 6);
        let a = generate(GraphKind::Random { n: 8, p: 0.5 }, 7).unwrap();
        let b = generate(GraphKind::Random { n: 8, p: 0.5 }, 7).unwrap();
        assert_eq!(a.edges(), b.edges());
    }

    #[test]
    fn invalid_parameters() {
        assert!(generate(GraphKind::Random { n: 4, p: 1.5 }, 0).is_err());
        assert!(generate(GraphKind::Random { n: 4, p: -0.1 }, 0).is_err());
        assert!(generate(GraphKind::Cycle(2), 0).is_err());
    }

    #[test]
    fn parse_kinds() {
        assert_eq!("cycle:5".parse::<GraphKind>().unwrap(), GraphKind::Cycle(5));
        assert_eq!(
            "random:8:0.5".parse::<GraphKind>().unwrap(),
            GraphKind::Random { n: 8, p: 0.5 }
        );
        assert!("cycle".parse::<GraphKind>().is_err());
        assert!("blob:3".parse::<GraphKind>().is_err());
    }

    #[test]
    fn named_graphs() {
        let p = petersen();
        assert_eq!(p.edge_count(), 15);
        assert!(p.degrees().iter().all(|&d| d == 3));
        let w = wheel(5);
        assert_eq!(w.degree(0), 5);
        assert_eq!(w.edge_count(), 10);
        assert_eq!(complete_bipartite(3, 3).edge_count(), 9);
        assert_eq!(star(3).degrees(), vec![3, 1, 1, 1]);
    }

    #[test]
    fn labeled_graph_counts() {
        assert_eq!(all_labeled_graphs(3).count(), 8);
        assert_eq!(all_labeled_graphs(4).count(), 64);
        assert_eq!(all_labeled_graphs(1).count(), 1);
    }
}
