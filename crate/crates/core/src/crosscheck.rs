//! Runs a reduction and both solvers over a corpus and compares answers.
//!
//! Instances are solved in parallel but records are kept in generation
//! order, and the text report leaves out timings, so it is byte-stable for
//! a fixed corpus description.

use std::fmt::{self, Write};
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::domatic::find_disjoint_dominating_sets;
use crate::formats::format_graph6;
use crate::generate::{all_labeled_graphs, random_graph};
use crate::graph::Graph;
use crate::minor::{find_clique_minor, verify_clique_minor_model, MinorModel, SearchBudget, SearchOutcome};
use crate::paths::{find_disjoint_paths, verify_path_set, DisjointPathsInstance};
use crate::reduce::{
    audit_reduction_structure, domatic_witness_to_minor_model, minor_model_to_domatic_witness,
    minor_model_to_paths_witness, paths_witness_to_minor_model, reduce_domatic_to_hadwiger,
    reduce_paths_to_hadwiger, DomaticReduction,
};
use crate::witness::{format_witness, Witness};

/// Source graphs of a cross-check.
#[derive(Debug, Clone, PartialEq)]
pub enum GraphCorpus {
    /// Every labeled graph with `1 <= n <= max_n`.
    Exhaustive { max_n: usize },
    /// `count` graphs with `n` uniform in `1..=max_n` and `p` uniform over
    /// `ps`, all drawn from one seeded stream.
    Random { count: usize, max_n: usize, ps: Vec<f64>, seed: u64 },
}

impl GraphCorpus {
    pub fn graphs(&self) -> Vec<Graph> {
        match self {
            GraphCorpus::Exhaustive { max_n } => (1..=*max_n).flat_map(all_labeled_graphs).collect(),
            GraphCorpus::Random { count, max_n, ps, seed } => {
                let mut rng = ChaCha8Rng::seed_from_u64(*seed);
                (0..*count)
                    .map(|_| {
                        let n = rng.gen_range(1..=*max_n);
                        let p = ps[rng.gen_range(0..ps.len())];
                        random_graph(n, p, &mut rng)
                    })
                    .collect()
            }
        }
    }
}

impl fmt::Display for GraphCorpus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphCorpus::Exhaustive { max_n } => write!(f, "exhaustive max_n={max_n}"),
            GraphCorpus::Random { count, max_n, ps, seed } => {
                let ps: Vec<String> = ps.iter().map(|p| p.to_string()).collect();
                write!(f, "random count={count} max_n={max_n} p={} seed={seed}", ps.join(","))
            }
        }
    }
}

/// A corpus plus the parameter range (`d` for domatic, `k` for paths) and
/// the node budget given to each search.
#[derive(Debug, Clone, PartialEq)]
pub struct CorpusSpec {
    pub graphs: GraphCorpus,
    pub param_max: usize,
    pub budget: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Answer {
    Yes,
    No,
    Unknown,
}

impl Answer {
    fn of<W>(outcome: &SearchOutcome<W>) -> Self {
        match outcome {
            SearchOutcome::Found(_) => Answer::Yes,
            SearchOutcome::NotFound => Answer::No,
            SearchOutcome::Indeterminate => Answer::Unknown,
        }
    }
}

impl fmt::Display for Answer {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Answer::Yes => "yes",
            Answer::No => "no",
            Answer::Unknown => "unknown",
        })
    }
}

#[derive(Debug, Clone)]
pub struct CrossCheckRecord {
    pub id: usize,
    pub graph6: String,
    /// `d=2` or `pairs=0-2,1-3`.
    pub param: String,
    pub source: Answer,
    pub target: Answer,
    pub source_nodes: u64,
    pub target_nodes: u64,
    /// Failed audits and round trips; empty when everything checked out.
    pub issues: Vec<String>,
    /// Witnesses or refutation markers, filled in on disagreement.
    pub evidence: Vec<String>,
    pub elapsed: Duration,
}

impl CrossCheckRecord {
    pub fn agrees(&self) -> bool {
        self.source == self.target && self.source != Answer::Unknown && self.issues.is_empty()
    }
}

#[derive(Debug, Clone)]
pub struct CrossCheckReport {
    pub problem: &'static str,
    pub spec: CorpusSpec,
    pub records: Vec<CrossCheckRecord>,
}

impl CrossCheckReport {
    pub fn agreed(&self) -> usize {
        self.records.iter().filter(|r| r.agrees()).count()
    }

    pub fn all_agree(&self) -> bool {
        self.agreed() == self.records.len()
    }

    pub fn elapsed(&self) -> Duration {
        self.records.iter().map(|r| r.elapsed).sum()
    }

    pub fn disagreements(&self) -> impl Iterator<Item = &CrossCheckRecord> {
        self.records.iter().filter(|r| !r.agrees())
    }

    pub fn summary_line(&self) -> String {
        format!("AGREE {}/{}", self.agreed(), self.records.len())
    }

    /// One line per record, then the summary line.
    pub fn to_text(&self) -> String {
        let param = if self.problem == "domatic" { "max_d" } else { "max_k" };
        let mut out = format!(
            "crosscheck {} {} {param}={} budget={}\n",
            self.problem, self.spec.graphs, self.spec.param_max, self.spec.budget
        );
        for r in &self.records {
            write!(
                out,
                "{} {} {} source={} target={} nodes={}/{} {}",
                r.id,
                r.graph6,
                r.param,
                r.source,
                r.target,
                r.source_nodes,
                r.target_nodes,
                if r.agrees() { "ok" } else { "DISAGREE" }
            )
            .unwrap();
            for issue in &r.issues {
                write!(out, " [{issue}]").unwrap();
            }
            out.push('\n');
            for e in &r.evidence {
                writeln!(out, "  {e}").unwrap();
            }
        }
        out.push_str(&self.summary_line());
        out.push('\n');
        out
    }
}

fn one_line(w: &Witness) -> String {
    format_witness(w).trim_end().replace('\n', "; ")
}

/// Domatic number against the Hadwiger number of the reduced instance, for
/// every corpus graph and every `d` in `1..=param_max`.
pub fn crosscheck_domatic(spec: &CorpusSpec) -> CrossCheckReport {
    let jobs: Vec<(Graph, usize)> = spec
        .graphs
        .graphs()
        .into_iter()
        .flat_map(|g| (1..=spec.param_max).map(move |d| (g.clone(), d)))
        .collect();
    let records = jobs
        .par_iter()
        .enumerate()
        .map(|(id, (g, d))| domatic_record(id, g, *d, spec.budget))
        .collect();
    CrossCheckReport { problem: "domatic", spec: spec.clone(), records }
}

fn domatic_record(id: usize, g: &Graph, d: usize, budget: u64) -> CrossCheckRecord {
    let start = Instant::now();
    let mut issues = Vec::new();
    let mut evidence = Vec::new();
    let family = find_disjoint_dominating_sets(g, d).expect("corpus graphs are nonempty and d >= 1");
    let source = if family.is_some() { Answer::Yes } else { Answer::No };
    let reduction = reduce_domatic_to_hadwiger(g, d).expect("d >= 1");
    let core = reduction.core();
    let mut target_nodes = 0;
    let mut model: Option<MinorModel> = None;

    let target = match &reduction {
        DomaticReduction::TriviallyPositive { .. } => Answer::Yes,
        DomaticReduction::TriviallyNegative { .. } => Answer::No,
        DomaticReduction::Instance { host, labeling, .. } => {
            if let Err(v) = audit_reduction_structure(&core.core, labeling.d(), host, labeling) {
                issues.push(format!("audit: {v}"));
            }
            let mut b = SearchBudget::new(budget);
            let outcome = find_clique_minor(host, labeling.h(), &mut b);
            target_nodes = b.used();
            let answer = Answer::of(&outcome);
            model = outcome.found();
            answer
        }
    };

    // forward: source family -> host model
    if let (Some(f), DomaticReduction::Instance { host, labeling, .. }) = (&family, &reduction) {
        let restricted = core.restrict_family(f);
        match domatic_witness_to_minor_model(&core.core, &restricted, labeling) {
            Ok(m) if verify_clique_minor_model(host, &m).is_ok() => {}
            Ok(_) => issues.push("forward model does not verify".into()),
            Err(e) => issues.push(format!("forward: {e}")),
        }
    }
    // backward: host model (or trivial answer) -> source family
    if target == Answer::Yes {
        let core_family = match (&model, &reduction) {
            (Some(m), DomaticReduction::Instance { host, labeling, .. }) => {
                minor_model_to_domatic_witness(host, m, labeling).map_err(|e| format!("backward: {e}"))
            }
            _ => Ok(Default::default()),
        };
        match core_family {
            Ok(cf) => {
                let lifted = core.lift_family(&cf);
                if lifted.len() < d || lifted.verify(g).is_err() {
                    issues.push("lifted family does not verify".into());
                }
            }
            Err(e) => issues.push(e),
        }
    }

    if source != target || !issues.is_empty() {
        evidence.push(match &family {
            Some(f) => format!("source: {}", one_line(&Witness::Domatic(f.clone()))),
            None => "source: refuted".into(),
        });
        evidence.push(match (&model, target) {
            (Some(m), _) => format!("target: {}", one_line(&Witness::CliqueMinor(m.clone()))),
            (None, Answer::Unknown) => "target: budget exhausted".into(),
            (None, _) => "target: refuted".into(),
        });
    }
    CrossCheckRecord {
        id,
        graph6: format_graph6(g),
        param: format!("d={d}"),
        source,
        target,
        source_nodes: 0,
        target_nodes,
        issues,
        evidence,
        elapsed: start.elapsed(),
    }
}

/// Every set of `k` disjoint terminal pairs on `0..n`, each pair `s < t`
/// and the pairs sorted by `s`.
pub fn pair_sets(n: usize, k: usize) -> Vec<Vec<(usize, usize)>> {
    fn go(n: usize, k: usize, free: &mut Vec<bool>, cur: &mut Vec<(usize, usize)>, out: &mut Vec<Vec<(usize, usize)>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        let lo = cur.last().map_or(0, |&(s, _)| s + 1);
        for s in lo..n {
            if !free[s] {
                continue;
            }
            for t in s + 1..n {
                if !free[t] {
                    continue;
                }
                free[s] = false;
                free[t] = false;
                cur.push((s, t));
                go(n, k, free, cur, out);
                cur.pop();
                free[s] = true;
                free[t] = true;
            }
        }
    }
    let mut out = Vec::new();
    go(n, k, &mut vec![true; n], &mut Vec::new(), &mut out);
    out
}

/// Disjoint paths against the Hadwiger number of the reduced instance, for
/// every corpus graph and every pair set with at most `param_max` pairs.
pub fn crosscheck_paths(spec: &CorpusSpec) -> CrossCheckReport {
    let jobs: Vec<DisjointPathsInstance> = spec
        .graphs
        .graphs()
        .into_iter()
        .flat_map(|g| {
            let n = g.n();
            (0..=spec.param_max.min(n / 2))
                .flat_map(move |k| pair_sets(n, k))
                .map(move |pairs| DisjointPathsInstance::new(g.clone(), pairs).expect("pairs are valid"))
                .collect::<Vec<_>>()
        })
        .collect();
    let records = jobs
        .par_iter()
        .enumerate()
        .map(|(id, inst)| paths_record(id, inst, spec.budget))
        .collect();
    CrossCheckReport { problem: "paths", spec: spec.clone(), records }
}

fn paths_record(id: usize, inst: &DisjointPathsInstance, budget: u64) -> CrossCheckRecord {
    let start = Instant::now();
    let mut issues = Vec::new();
    let mut evidence = Vec::new();

    let mut b = SearchBudget::new(budget);
    let routed = find_disjoint_paths(inst, &mut b);
    let source_nodes = b.used();
    let source = Answer::of(&routed);

    let (host, h, map) = reduce_paths_to_hadwiger(inst).expect("2k <= n");
    if host.n() != map.host_vertex_count() || h != inst.graph().n() + 1 {
        issues.push("host size".into());
    }
    let mut b = SearchBudget::new(budget);
    let found = find_clique_minor(&host, h, &mut b);
    let target_nodes = b.used();
    let target = Answer::of(&found);

    if let SearchOutcome::Found(ps) = &routed {
        match paths_witness_to_minor_model(inst, &map, ps) {
            Ok(m) if verify_clique_minor_model(&host, &m).is_ok() => {}
            Ok(_) => issues.push("forward model does not verify".into()),
            Err(e) => issues.push(format!("forward: {e}")),
        }
    }
    if let SearchOutcome::Found(m) = &found {
        match minor_model_to_paths_witness(&host, m, &map) {
            Ok(ps) if verify_path_set(inst, &ps).is_ok() => {}
            Ok(_) => issues.push("backward paths do not verify".into()),
            Err(e) => issues.push(format!("backward: {e}")),
        }
    }

    if source != target || !issues.is_empty() {
        evidence.push(match &routed {
            SearchOutcome::Found(ps) => format!("source: {}", one_line(&Witness::Paths(ps.clone()))),
            SearchOutcome::NotFound => "source: refuted".into(),
            SearchOutcome::Indeterminate => "source: budget exhausted".into(),
        });
        evidence.push(match &found {
            SearchOutcome::Found(m) => format!("target: {}", one_line(&Witness::CliqueMinor(m.clone()))),
            SearchOutcome::NotFound => "target: refuted".into(),
            SearchOutcome::Indeterminate => "target: budget exhausted".into(),
        });
    }
    let pairs: Vec<String> = inst.pairs().iter().map(|(s, t)| format!("{s}-{t}")).collect();
    CrossCheckRecord {
        id,
        graph6: format_graph6(inst.graph()),
        param: format!("pairs={}", if pairs.is_empty() { "-".to_string() } else { pairs.join(",") }),
        source,
        target,
        source_nodes,
        target_nodes,
        issues,
        evidence,
        elapsed: start.elapsed(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pair_set_counts() {
        assert_eq!(pair_sets(5, 0), vec![Vec::<(usize, usize)>::new()]);
        assert_eq!(pair_sets(5, 1).len(), 10);
        assert_eq!(pair_sets(5, 2).len(), 15);
        assert_eq!(pair_sets(4, 2), vec![vec![(0, 1), (2, 3)], vec![(0, 2), (1, 3)], vec![(0, 3), (1, 2)]]);
        assert!(pair_sets(3, 2).is_empty());
    }

    #[test]
    fn small_domatic_run() {
        let spec = CorpusSpec { graphs: GraphCorpus::Exhaustive { max_n: 2 }, param_max: 3, budget: 100_000 };
        let report = crosscheck_domatic(&spec);
        assert_eq!(report.records.len(), 3 * 3);
        assert!(report.all_agree(), "{}", report.to_text());
        assert_eq!(report.to_text(), crosscheck_domatic(&spec).to_text());
        assert!(report.to_text().ends_with("AGREE 9/9\n"));
    }

    #[test]
    fn small_paths_run() {
        let spec = CorpusSpec { graphs: GraphCorpus::Exhaustive { max_n: 4 }, param_max: 2, budget: 100_000 };
        let report = crosscheck_paths(&spec);
        assert!(report.all_agree(), "{}", report.to_text());
    }

    #[test]
    fn random_corpus_is_seeded() {
        let c = GraphCorpus::Random { count: 20, max_n: 7, ps: vec![0.3, 0.5, 0.7], seed: 9 };
        let a: Vec<String> = c.graphs().iter().map(format_graph6).collect();
        let b: Vec<String> = c.graphs().iter().map(format_graph6).collect();
        assert_eq!(a, b);
        assert!(c.graphs().iter().all(|g| (1..=7).contains(&g.n())));
    }
}
