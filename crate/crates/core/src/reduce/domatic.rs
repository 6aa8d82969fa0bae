//! Domatic number to Hadwiger number.
//!
//! For a source graph `G` on `n` vertices with no universal vertex and a
//! target `d`, the host graph `G'` has three layers:
//!
//! * top: a `d`-clique `t_1..t_d`;
//! * middle: an independent set `m_1..m_n`;
//! * bottom: an `n(n+1)`-clique `b_{i,j}`, `1 <= i <= n`, `1 <= j <= n+1`.
//!
//! Every top vertex is joined to every middle vertex, `m_i` is joined to
//! `b_{j,k}` exactly when `v_i` dominates `v_j`, and there are no top-bottom
//! edges. `G` has `d` disjoint dominating sets iff `G'` has a `K_h` minor
//! with `h = n(n+1) + d`.
//!
//! Vertex ids in `G'`: top block, then middle block, then bottom block in
//! row-major `(i, j)` order.

use std::fmt;
use std::str::FromStr;

use crate::domatic::DomaticFamily;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::minor::{verify_clique_minor_model, MinorModel};

/// Layer of a host vertex. Indices are 0-based here and 1-based in text
/// (`T3`, `M2`, `B4.1`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Layer {
    Top(usize),
    Mid(usize),
    Bot(usize, usize),
}

impl Layer {
    pub fn is_mid(self) -> bool {
        matches!(self, Layer::Mid(_))
    }
}

impl fmt::Display for Layer {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Layer::Top(i) => write!(f, "T{}", i + 1),
            Layer::Mid(i) => write!(f, "M{}", i + 1),
            Layer::Bot(i, j) => write!(f, "B{}.{}", i + 1, j + 1),
        }
    }
}

impl FromStr for Layer {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("bad layer label `{s}`"));
        let index = |t: &str| -> Result<usize> {
            match t.parse::<usize>() {
                Ok(k) if k >= 1 => Ok(k - 1),
                _ => Err(bad()),
            }
        };
        if let Some(rest) = s.strip_prefix('T') {
            Ok(Layer::Top(index(rest)?))
        } else if let Some(rest) = s.strip_prefix('M') {
            Ok(Layer::Mid(index(rest)?))
        } else if let Some(rest) = s.strip_prefix('B') {
            let (i, j) = rest.split_once('.').ok_or_else(bad)?;
            Ok(Layer::Bot(index(i)?, index(j)?))
        } else {
            Err(bad())
        }
    }
}

/// Layer map of a constructed host graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionLabeling {
    n: usize,
    d: usize,
    layers: Vec<Layer>,
}

impl ReductionLabeling {
    /// The canonical labeling for source size `n` and target `d`.
    pub fn new(n: usize, d: usize) -> Self {
        let mut layers = Vec::with_capacity(d + n + n * (n + 1));
        layers.extend((0..d).map(Layer::Top));
        layers.extend((0..n).map(Layer::Mid));
        for i in 0..n {
            layers.extend((0..=n).map(|j| Layer::Bot(i, j)));
        }
        ReductionLabeling { n, d, layers }
    }

    /// Rebuilds a labeling from an explicit vertex-to-layer list; it must be
    /// the canonical labeling for some `(n, d)`.
    pub fn from_layers(layers: Vec<Layer>) -> Result<Self> {
        let d = layers.iter().filter(|l| matches!(l, Layer::Top(_))).count();
        let n = layers.iter().filter(|l| l.is_mid()).count();
        let expected = ReductionLabeling::new(n, d);
        if expected.layers != layers {
            return Err(Error::Parse(format!(
                "labeling is not the canonical layout for n={n}, d={d}"
            )));
        }
        Ok(expected)
    }

    /// Source vertex count.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of dominating sets asked for (after stripping).
    pub fn d(&self) -> usize {
        self.d
    }

    /// Target clique size `n(n+1) + d`.
    pub fn h(&self) -> usize {
        self.n * (self.n + 1) + self.d
    }

    pub fn vertex_count(&self) -> usize {
        self.layers.len()
    }

    pub fn layer(&self, v: usize) -> Layer {
        self.layers[v]
    }

    pub fn layers(&self) -> &[Layer] {
        &self.layers
    }

    pub fn top(&self, i: usize) -> usize {
        debug_assert!(i < self.d);
        i
    }

    pub fn mid(&self, i: usize) -> usize {
        debug_assert!(i < self.n);
        self.d + i
    }

    pub fn bot(&self, i: usize, j: usize) -> usize {
        debug_assert!(i < self.n && j <= self.n);
        self.d + self.n + i * (self.n + 1) + j
    }
}

/// Result of removing universal vertices from a source instance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StrippedCore {
    /// Residual graph, relabeled `0..kept.len()` in original id order.
    pub core: Graph,
    /// Remaining target; may be zero or negative.
    pub d_core: i64,
    /// Removed vertices, original ids, in removal order.
    pub stripped: Vec<usize>,
    /// Original id of each core vertex.
    pub kept: Vec<usize>,
}

impl StrippedCore {
    /// Restricts a family of disjoint dominating sets of the original graph
    /// to the core: sets touching a stripped vertex are dropped, and the
    /// first `d_core` of the rest are kept.
    pub fn restrict_family(&self, family: &DomaticFamily) -> DomaticFamily {
        let mut index = vec![None; self.kept.iter().chain(&self.stripped).count()];
        for (i, &v) in self.kept.iter().enumerate() {
            index[v] = Some(i);
        }
        let want = self.d_core.max(0) as usize;
        let sets = family
            .sets
            .iter()
            .filter(|s| s.iter().all(|&v| index.get(v).copied().flatten().is_some()))
            .take(want)
            .map(|s| s.iter().map(|&v| index[v].unwrap()).collect())
            .collect();
        DomaticFamily::new(sets)
    }

    /// Lifts a core family back to the original graph: stripped vertices
    /// are universal there, so each becomes a singleton dominating set.
    pub fn lift_family(&self, core_family: &DomaticFamily) -> DomaticFamily {
        let mut sets: Vec<VertexSet> = self.stripped.iter().map(|&v| VertexSet::from([v])).collect();
        sets.extend(
            core_family
                .sets
                .iter()
                .map(|s| s.iter().map(|&i| self.kept[i]).collect::<VertexSet>()),
        );
        DomaticFamily::new(sets)
    }
}

/// Repeatedly deletes the lowest-id vertex adjacent to all others,
/// decrementing `d` each time, until none is left or the graph is empty.
pub fn strip_universal_vertices(g: &Graph, d: usize) -> StrippedCore {
    let mut current = g.clone();
    let mut kept: Vec<usize> = (0..g.n()).collect();
    let mut stripped = Vec::new();
    let mut d_core = d as i64;
    while let Some(v) = (0..current.n()).find(|&v| current.is_universal(v)) {
        stripped.push(kept.remove(v));
        current = current.delete_vertex(v).expect("vertex in range");
        d_core -= 1;
    }
    StrippedCore { core: current, d_core, stripped, kept }
}

/// Output of [`reduce_domatic_to_hadwiger`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DomaticReduction {
    Instance {
        host: Graph,
        labeling: ReductionLabeling,
        core: StrippedCore,
    },
    /// Stripping alone produced `d` dominating singletons.
    TriviallyPositive { core: StrippedCore },
    /// Stripping emptied the graph before reaching `d`.
    TriviallyNegative { core: StrippedCore },
}

impl DomaticReduction {
    /// The Hadwiger instance to decide. Trivial outcomes become `(K_1, 1)`
    /// (positive) and `(K_1, 2)` (negative).
    pub fn hadwiger_instance(&self) -> (Graph, usize) {
        match self {
            DomaticReduction::Instance { host, labeling, .. } => (host.clone(), labeling.h()),
            DomaticReduction::TriviallyPositive { .. } => (Graph::complete(1), 1),
            DomaticReduction::TriviallyNegative { .. } => (Graph::complete(1), 2),
        }
    }

    pub fn core(&self) -> &StrippedCore {
        match self {
            DomaticReduction::Instance { core, .. }
            | DomaticReduction::TriviallyPositive { core }
            | DomaticReduction::TriviallyNegative { core } => core,
        }
    }
}

/// Strips universal vertices, then builds the layered host graph.
pub fn reduce_domatic_to_hadwiger(g: &Graph, d: usize) -> Result<DomaticReduction> {
    if d < 1 {
        return Err(Error::InvalidParameters("d must be at least 1".into()));
    }
    let core = strip_universal_vertices(g, d);
    if core.d_core <= 0 {
        return Ok(DomaticReduction::TriviallyPositive { core });
    }
    if core.core.n() == 0 {
        return Ok(DomaticReduction::TriviallyNegative { core });
    }
    let (host, labeling) = build_host(&core.core, core.d_core as usize);
    Ok(DomaticReduction::Instance { host, labeling, core })
}

/// The three-layer construction, without any preprocessing.
pub fn build_host(g: &Graph, d: usize) -> (Graph, ReductionLabeling) {
    let n = g.n();
    let lab = ReductionLabeling::new(n, d);
    let mut host = Graph::empty(lab.vertex_count());
    for a in 0..d {
        for b in a + 1..d {
            host.insert_edge(lab.top(a), lab.top(b));
        }
        for i in 0..n {
            host.insert_edge(lab.top(a), lab.mid(i));
        }
    }
    let bottom: Vec<usize> = (0..n).flat_map(|i| (0..=n).map(move |j| (i, j))).map(|(i, j)| lab.bot(i, j)).collect();
    for (x, &p) in bottom.iter().enumerate() {
        for &q in &bottom[x + 1..] {
            host.insert_edge(p, q);
        }
    }
    for i in 0..n {
        for j in 0..n {
            if i == j || g.has_edge(i, j) {
                for k in 0..=n {
                    host.insert_edge(lab.mid(i), lab.bot(j, k));
                }
            }
        }
    }
    (host, lab)
}

/// Edge count of the host graph predicted from the layer rules:
/// `C(d,2) + d n + C(n(n+1),2) + sum_i (deg_i + 1)(n + 1)`.
pub fn predicted_host_edges(g: &Graph, d: usize) -> usize {
    let n = g.n();
    let bottom = n * (n + 1);
    d * d.saturating_sub(1) / 2
        + d * n
        + bottom * bottom.saturating_sub(1) / 2
        + (0..n).map(|i| (g.degree(i) + 1) * (n + 1)).sum::<usize>()
}

/// First structural defect found by [`audit_reduction_structure`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AuditViolation {
    LayerSizes { expected: (usize, usize), found: (usize, usize) },
    VertexCount { expected: usize, found: usize },
    /// An edge that the layer rules forbid.
    UnexpectedEdge { u: usize, v: usize, u_layer: Layer, v_layer: Layer },
    /// A pair the layer rules require to be adjacent.
    MissingEdge { u: usize, v: usize, u_layer: Layer, v_layer: Layer },
    MidDegree { mid: usize, expected: usize, found: usize },
}

impl fmt::Display for AuditViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AuditViolation::LayerSizes { expected, found } => write!(
                f,
                "labeling has (n, d) = {found:?}, expected {expected:?}"
            ),
            AuditViolation::VertexCount { expected, found } => {
                write!(f, "host has {found} vertices, expected {expected}")
            }
            AuditViolation::UnexpectedEdge { u, v, u_layer, v_layer } => {
                write!(f, "unexpected edge {u}-{v} ({u_layer}-{v_layer})")
            }
            AuditViolation::MissingEdge { u, v, u_layer, v_layer } => {
                write!(f, "missing edge {u}-{v} ({u_layer}-{v_layer})")
            }
            AuditViolation::MidDegree { mid, expected, found } => {
                write!(f, "middle vertex {mid} has degree {found}, expected {expected}")
            }
        }
    }
}

fn expected_adjacency(g: &Graph, a: Layer, b: Layer) -> bool {
    use Layer::*;
    match (a, b) {
        (Top(x), Top(y)) => x != y,
        (Top(_), Mid(_)) | (Mid(_), Top(_)) => true,
        (Top(_), Bot(..)) | (Bot(..), Top(_)) => false,
        (Mid(_), Mid(_)) => false,
        (Mid(i), Bot(j, _)) | (Bot(j, _), Mid(i)) => i == j || g.has_edge(i, j),
        (Bot(i, j), Bot(k, l)) => (i, j) != (k, l),
    }
}

/// Checks every vertex pair of `host` against the layer rules for `(g, d)`
/// and then the middle-layer degree identity
/// `deg(m_i) = (deg_G(v_i) + 1)(n + 1) + d`.
pub fn audit_reduction_structure(
    g: &Graph,
    d: usize,
    host: &Graph,
    lab: &ReductionLabeling,
) -> std::result::Result<(), AuditViolation> {
    let n = g.n();
    if (lab.n(), lab.d()) != (n, d) {
        return Err(AuditViolation::LayerSizes { expected: (n, d), found: (lab.n(), lab.d()) });
    }
    let expected = n * n + 2 * n + d;
    if host.n() != expected || lab.vertex_count() != expected {
        return Err(AuditViolation::VertexCount { expected, found: host.n() });
    }
    for u in 0..host.n() {
        for v in u + 1..host.n() {
            let (u_layer, v_layer) = (lab.layer(u), lab.layer(v));
            let want = expected_adjacency(g, u_layer, v_layer);
            match (want, host.has_edge(u, v)) {
                (true, false) => {
                    return Err(AuditViolation::MissingEdge { u, v, u_layer, v_layer })
                }
                (false, true) => {
                    return Err(AuditViolation::UnexpectedEdge { u, v, u_layer, v_layer })
                }
                _ => {}
            }
        }
    }
    for i in 0..n {
        let want = (g.degree(i) + 1) * (n + 1) + d;
        let found = host.degree(lab.mid(i));
        if found != want {
            return Err(AuditViolation::MidDegree { mid: lab.mid(i), expected: want, found });
        }
    }
    Ok(())
}

/// Recovers the source graph from the middle-bottom edges of a host graph.
pub fn decode_source(host: &Graph, lab: &ReductionLabeling) -> Graph {
    let n = lab.n();
    let mut g = Graph::empty(n);
    for i in 0..n {
        for j in i + 1..n {
            if host.has_edge(lab.mid(i), lab.bot(j, 0)) {
                g.insert_edge(i, j);
            }
        }
    }
    g
}

/// Forward witness map: one singleton per bottom vertex, and for each
/// dominating set `D_i` the set `{t_i} ∪ {m_j : v_j ∈ D_i}`. Top-based sets
/// come first.
pub fn domatic_witness_to_minor_model(
    g: &Graph,
    family: &DomaticFamily,
    lab: &ReductionLabeling,
) -> Result<MinorModel> {
    if lab.n() != g.n() {
        return Err(Error::InvalidWitness(format!(
            "labeling is for {} source vertices, graph has {}",
            lab.n(),
            g.n()
        )));
    }
    if family.len() != lab.d() {
        return Err(Error::InvalidWitness(format!(
            "need {} dominating sets, got {}",
            lab.d(),
            family.len()
        )));
    }
    family.verify(g).map_err(|v| Error::InvalidWitness(v.to_string()))?;
    let n = lab.n();
    let mut sets: Vec<VertexSet> = family
        .sets
        .iter()
        .enumerate()
        .map(|(i, dset)| {
            std::iter::once(lab.top(i))
                .chain(dset.iter().map(|&j| lab.mid(j)))
                .collect()
        })
        .collect();
    for i in 0..n {
        for j in 0..=n {
            sets.push(VertexSet::from([lab.bot(i, j)]));
        }
    }
    Ok(MinorModel::new(sets))
}

/// Backward witness map: `D_i = { v_j : m_j ∈ S }` for the branch set `S`
/// holding top vertex `t_i`. Each branch set must hold exactly one
/// non-middle vertex; the resulting family is checked against the source
/// graph decoded from `host`.
pub fn minor_model_to_domatic_witness(
    host: &Graph,
    model: &MinorModel,
    lab: &ReductionLabeling,
) -> Result<DomaticFamily> {
    if host.n() != lab.vertex_count() {
        return Err(Error::InvalidWitness("labeling does not match host graph".into()));
    }
    if model.order() != lab.h() {
        return Err(Error::InvalidWitness(format!(
            "model has {} branch sets, need h = {}",
            model.order(),
            lab.h()
        )));
    }
    verify_clique_minor_model(host, model).map_err(|v| Error::InvalidWitness(v.to_string()))?;
    for (k, set) in model.branch_sets.iter().enumerate() {
        let non_mid = set.iter().filter(|&&v| !lab.layer(v).is_mid()).count();
        if non_mid != 1 {
            return Err(Error::InvalidWitness(format!(
                "branch set {k} holds {non_mid} non-middle vertices"
            )));
        }
    }
    let sets: Vec<VertexSet> = (0..lab.d())
        .map(|i| {
            let holder = model.set_of(lab.top(i)).expect("every non-middle vertex is covered");
            model.branch_sets[holder]
                .iter()
                .filter_map(|&v| match lab.layer(v) {
                    Layer::Mid(j) => Some(j),
                    _ => None,
                })
                .collect()
        })
        .collect();
    let family = DomaticFamily::new(sets);
    family
        .verify(&decode_source(host, lab))
        .map_err(|v| Error::InvalidWitness(format!("recovered family invalid: {v}")))?;
    Ok(family)
}
