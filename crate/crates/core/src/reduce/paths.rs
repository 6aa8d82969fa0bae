//! Disjoint paths to Hadwiger number.
//!
//! Take an `(n+1)`-clique `K`, delete a matching `u_1v_1, ..., u_kv_k` from
//! it, and glue it to `G` by identifying `u_i` with `s_i` and `v_i` with
//! `t_i`. The host has `2n + 1 - 2k` vertices and the pairs can be routed
//! disjointly in `G` iff the host has a `K_{n+1}` minor.
//!
//! Ids: `G` keeps `0..n`; the `n + 1 - 2k` clique vertices that are not
//! terminals are appended. Edge sets are united, so an edge `s_i t_i`
//! already present in `G` survives.

use std::collections::VecDeque;

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::minor::{verify_clique_minor_model, MinorModel};
use crate::paths::{verify_path_set, DisjointPathsInstance, PathSet};

/// Where the clique gadget sits inside the host graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PathsReductionMap {
    /// Source vertex count `n`.
    pub n: usize,
    /// The `n + 1` host vertices of the clique gadget: terminals
    /// `s_1, t_1, ..., s_k, t_k`, then the fresh vertices.
    pub clique_vertices: Vec<usize>,
    /// The removed matching `(u_i, v_i)`, already identified with `(s_i, t_i)`.
    pub removed_pairs: Vec<(usize, usize)>,
}

impl PathsReductionMap {
    /// Target clique order `n + 1`.
    pub fn h(&self) -> usize {
        self.n + 1
    }

    pub fn host_vertex_count(&self) -> usize {
        2 * self.n + 1 - 2 * self.removed_pairs.len()
    }

    pub fn is_clique_vertex(&self, v: usize) -> bool {
        v >= self.n || self.removed_pairs.iter().any(|&(s, t)| v == s || v == t)
    }
}

/// Builds `(host, h, map)` for a disjoint-paths instance.
pub fn reduce_paths_to_hadwiger(inst: &DisjointPathsInstance) -> Result<(Graph, usize, PathsReductionMap)> {
    let g = inst.graph();
    let (n, k) = (g.n(), inst.k());
    if 2 * k > n {
        return Err(Error::InvalidInstance(format!("{k} pairs need {} terminals, graph has {n}", 2 * k)));
    }
    let total = 2 * n + 1 - 2 * k;
    let mut clique_vertices: Vec<usize> = inst.pairs().iter().flat_map(|&(s, t)| [s, t]).collect();
    clique_vertices.extend(n..total);
    let mut edges = g.edges();
    for (a, &p) in clique_vertices.iter().enumerate() {
        for &q in &clique_vertices[a + 1..] {
            let removed = inst
                .pairs()
                .iter()
                .any(|&(s, t)| (p, q) == (s, t) || (p, q) == (t, s));
            if !removed {
                edges.push((p, q));
            }
        }
    }
    let host = Graph::new(total, &edges)?;
    let map = PathsReductionMap {
        n,
        clique_vertices,
        removed_pairs: inst.pairs().to_vec(),
    };
    Ok((host, n + 1, map))
}

/// Forward witness map: every clique vertex is its own branch set, and the
/// set of `s_i` absorbs the interior of path `i`.
pub fn paths_witness_to_minor_model(
    inst: &DisjointPathsInstance,
    map: &PathsReductionMap,
    ps: &PathSet,
) -> Result<MinorModel> {
    verify_path_set(inst, ps).map_err(|v| Error::InvalidWitness(v.to_string()))?;
    let sets = map
        .clique_vertices
        .iter()
        .map(|&c| {
            let mut set = VertexSet::from([c]);
            if let Some(i) = map.removed_pairs.iter().position(|&(s, _)| s == c) {
                let path = &ps.paths[i];
                for &v in &path[1..path.len() - 1] {
                    set.insert(v);
                }
            }
            set
        })
        .collect();
    Ok(MinorModel::new(sets))
}

/// Backward witness map. Each branch set must hold exactly one clique
/// vertex; path `i` is a shortest `s_i`-`t_i` path inside the union of the
/// branch sets holding `s_i` and `t_i`.
pub fn minor_model_to_paths_witness(
    host: &Graph,
    model: &MinorModel,
    map: &PathsReductionMap,
) -> Result<PathSet> {
    if host.n() != map.host_vertex_count() {
        return Err(Error::InvalidWitness("map does not match host graph".into()));
    }
    if model.order() != map.h() {
        return Err(Error::InvalidWitness(format!(
            "model has {} branch sets, need {}",
            model.order(),
            map.h()
        )));
    }
    verify_clique_minor_model(host, model).map_err(|v| Error::InvalidWitness(v.to_string()))?;
    for (k, set) in model.branch_sets.iter().enumerate() {
        let inside = set.iter().filter(|&&v| map.is_clique_vertex(v)).count();
        if inside != 1 {
            return Err(Error::InvalidWitness(format!(
                "branch set {k} holds {inside} clique vertices"
            )));
        }
    }
    let mut paths = Vec::with_capacity(map.removed_pairs.len());
    for &(s, t) in &map.removed_pairs {
        let a = model.set_of(s).expect("every clique vertex is covered");
        let b = model.set_of(t).expect("every clique vertex is covered");
        let mut region = model.branch_sets[a].to_bitset(host.n());
        region.union_with(&model.branch_sets[b].to_bitset(host.n()));
        let path = shortest_path_within(host, &region, s, t).ok_or_else(|| {
            Error::InvalidWitness(format!("no {s}-{t} path inside its two branch sets"))
        })?;
        paths.push(path);
    }
    Ok(PathSet::new(paths))
}

fn shortest_path_within(g: &Graph, region: &FixedBitSet, s: usize, t: usize) -> Option<Vec<usize>> {
    let mut parent = vec![usize::MAX; g.n()];
    parent[s] = s;
    let mut queue = VecDeque::from([s]);
    while let Some(u) = queue.pop_front() {
        if u == t {
            let mut path = vec![t];
            let mut x = t;
            while x != s {
                x = parent[x];
                path.push(x);
            }
            path.reverse();
            return Some(path);
        }
        for w in g.neighbors(u) {
            if region.contains(w) && parent[w] == usize::MAX {
                parent[w] = u;
                queue.push_back(w);
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::{cycle, path};

    fn inst(g: Graph, pairs: &[(usize, usize)]) -> DisjointPathsInstance {
        DisjointPathsInstance::new(g, pairs.to_vec()).unwrap()
    }

    #[test]
    fn host_sizes() {
        let (host, h, map) = reduce_paths_to_hadwiger(&inst(path(4), &[(0, 2), (1, 3)])).unwrap();
        assert_eq!((host.n(), h), (5, 5));
        assert_eq!(map.clique_vertices, vec![0, 2, 1, 3, 4]);
        let (host, h, _) = reduce_paths_to_hadwiger(&inst(cycle(5), &[(0, 2)])).unwrap();
        assert_eq!((host.n(), h), (9, 6));
        let (host, h, _) = reduce_paths_to_hadwiger(&inst(path(3), &[])).unwrap();
        assert_eq!((host.n(), h), (7, 4));
        assert_eq!(host.edge_count(), 2 + 6);
    }

    #[test]
    fn removed_matching_only_missing_if_absent_in_g() {
        let (host, _, _) = reduce_paths_to_hadwiger(&inst(path(4), &[(0, 1), (2, 3)])).unwrap();
        assert!(host.has_edge(0, 1));
        let (host, _, _) = reduce_paths_to_hadwiger(&inst(path(4), &[(0, 2), (1, 3)])).unwrap();
        assert!(!host.has_edge(0, 2));
        assert!(!host.has_edge(1, 3));
    }

    #[test]
    fn witness_round_trip_on_c5() {
        let i = inst(cycle(5), &[(0, 2)]);
        let (host, _, map) = reduce_paths_to_hadwiger(&i).unwrap();
        let ps = PathSet::new(vec![vec![0, 1, 2]]);
        let model = paths_witness_to_minor_model(&i, &map, &ps).unwrap();
        assert_eq!(model.branch_sets[0], VertexSet::from([0, 1]));
        assert_eq!(verify_clique_minor_model(&host, &model), Ok(()));
        let back = minor_model_to_paths_witness(&host, &model, &map).unwrap();
        assert_eq!(verify_path_set(&i, &back), Ok(()));
    }

    #[test]
    fn direct_edges_give_singletons() {
        let i = inst(path(4), &[(0, 1), (2, 3)]);
        let (host, _, map) = reduce_paths_to_hadwiger(&i).unwrap();
        let ps = PathSet::new(vec![vec![0, 1], vec![2, 3]]);
        let model = paths_witness_to_minor_model(&i, &map, &ps).unwrap();
        assert!(model.branch_sets.iter().all(|s| s.len() == 1));
        assert_eq!(verify_clique_minor_model(&host, &model), Ok(()));
    }

    #[test]
    fn bad_inputs() {
        let i = inst(cycle(5), &[(0, 2)]);
        let (host, _, map) = reduce_paths_to_hadwiger(&i).unwrap();
        assert!(paths_witness_to_minor_model(&i, &map, &PathSet::new(vec![vec![0, 2]])).is_err());
        let small = MinorModel::new((0..5).map(|v| VertexSet::from([v])).collect());
        assert!(minor_model_to_paths_witness(&host, &small, &map).is_err());
    }
}
