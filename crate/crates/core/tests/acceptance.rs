//! Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any
//! failure. Budgets are pinned so failures reproduce.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use minorkit::crosscheck::{crosscheck_domatic, crosscheck_paths, CorpusSpec, GraphCorpus};
use minorkit::domatic::{domatic_number, domatic_oracle, find_disjoint_dominating_sets};
use minorkit::generate::{all_labeled_graphs, cycle, generate, path, GraphKind};
use minorkit::minor::{
    clique_number, find_clique_minor, hadwiger_number, hadwiger_oracle, hadwiger_upper_bound,
    verify_clique_minor_model, Hadwiger, MinorModel, SearchBudget, SearchOutcome,
};
use minorkit::reduce::{
    audit_reduction_structure, build_host, domatic_witness_to_minor_model, minor_model_to_domatic_witness,
    reduce_domatic_to_hadwiger, DomaticReduction, Layer, ReductionLabeling,
};
use minorkit::{Graph, VertexSet};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn exact_hadwiger(g: &Graph) -> Result<usize, String> {
    match hadwiger_number(g, &mut SearchBudget::default()).map_err(|e| e.to_string())? {
        Hadwiger::Exact { value, model } => {
            verify_clique_minor_model(g, &model).map_err(|v| v.to_string())?;
            Ok(value)
        }
        Hadwiger::LowerBound { value, .. } => Err(format!("budget ran out at >= {value}")),
    }
}

fn c5_positive() -> Outcome {
    let DomaticReduction::Instance { host, labeling, core } = reduce_domatic_to_hadwiger(&cycle(5), 2).unwrap() else {
        return Err("C5 was reduced to a trivial instance".into());
    };
    ensure((host.n(), labeling.h()) == (37, 32), || format!("sizes {} / {}", host.n(), labeling.h()))?;
    let family = find_disjoint_dominating_sets(&core.core, 2)
        .map_err(|e| e.to_string())?
        .ok_or("domatic solver found no 2 disjoint dominating sets in C5")?;
    let model = domatic_witness_to_minor_model(&core.core, &family, &labeling).map_err(|e| e.to_string())?;
    ensure(model.order() == 32, || format!("model has {} sets", model.order()))?;
    verify_clique_minor_model(&host, &model).map_err(|v| v.to_string())?;
    Ok(format!("37 vertices, h = 32, {} edges, 32-set model verifies", host.edge_count()))
}

fn c5_search() -> Outcome {
    let (host, lab) = build_host(&cycle(5), 2);
    let mut budget = SearchBudget::new(10_000_000);
    match find_clique_minor(&host, lab.h(), &mut budget) {
        SearchOutcome::Found(m) => {
            verify_clique_minor_model(&host, &m).map_err(|v| v.to_string())?;
            check_model_structure(&m, &lab)?;
            Ok(format!("K32 found after {} nodes", budget.used()))
        }
        other => Err(format!("{other:?} after {} nodes", budget.used())),
    }
}

/// Mid degree counted neighbor by neighbor against the layer rules.
fn mid_degrees_by_count(g: &Graph, host: &Graph, lab: &ReductionLabeling) -> Result<(), String> {
    let (n, d) = (lab.n(), lab.d());
    for i in 0..n {
        let closed = 1 + g.degree(i);
        let want = closed * (n + 1) + d;
        let tops = (0..d).filter(|&t| host.has_edge(lab.mid(i), lab.top(t))).count();
        let bots = (0..n)
            .flat_map(|j| (0..=n).map(move |k| (j, k)))
            .filter(|&(j, k)| host.has_edge(lab.mid(i), lab.bot(j, k)))
            .count();
        let found = host.degree(lab.mid(i));
        ensure(found == want && tops + bots == found, || {
            format!("mid {i}: degree {found}, expected {want} ({tops} top + {bots} bottom)")
        })?;
    }
    Ok(())
}

fn degree_identity() -> Outcome {
    let mut graphs: Vec<Graph> = (1..=5).flat_map(all_labeled_graphs).collect();
    let exhaustive = graphs.len();
    graphs.extend(GraphCorpus::Random { count: 100, max_n: 7, ps: vec![0.3, 0.5, 0.7], seed: 2024 }.graphs());
    let mut audited = 0;
    for g in &graphs {
        for d in 1..=3 {
            if let DomaticReduction::Instance { host, labeling, core } = reduce_domatic_to_hadwiger(g, d).unwrap() {
                let (n, dc) = (core.core.n(), labeling.d());
                ensure(host.n() == n * n + 2 * n + dc && labeling.h() == n * (n + 1) + dc, || {
                    format!("size identity fails on n={n} d={dc}")
                })?;
                audit_reduction_structure(&core.core, dc, &host, &labeling).map_err(|v| v.to_string())?;
                mid_degrees_by_count(&core.core, &host, &labeling)?;
                audited += 1;
            }
        }
    }
    Ok(format!("{audited} hosts from {exhaustive} exhaustive + 100 random graphs"))
}

fn report_line(r: &minorkit::crosscheck::CrossCheckReport) -> Outcome {
    match r.disagreements().next() {
        None => Ok(r.summary_line()),
        Some(bad) => Err(format!("{} first: {} {} {:?}", r.summary_line(), bad.graph6, bad.param, bad.issues)),
    }
}

fn domatic_equivalence() -> Outcome {
    let spec = CorpusSpec { graphs: GraphCorpus::Exhaustive { max_n: 3 }, param_max: 4, budget: 10_000_000 };
    report_line(&crosscheck_domatic(&spec))
}

fn p3_negative() -> Outcome {
    let p3 = path(3);
    ensure(find_disjoint_dominating_sets(&p3, 3).unwrap().is_none(), || "domatic solver found 3 sets".into())?;
    // the layered construction applied to P3 directly
    let (host, lab) = build_host(&p3, 3);
    ensure((host.n(), lab.h()) == (18, 15), || format!("sizes {} / {}", host.n(), lab.h()))?;
    let mut budget = SearchBudget::new(10_000_000);
    let outcome = find_clique_minor(&host, 15, &mut budget);
    ensure(outcome == SearchOutcome::NotFound, || format!("{outcome:?} after {} nodes", budget.used()))?;
    // and the full pipeline, which strips the universal middle vertex first
    let answer = match reduce_domatic_to_hadwiger(&p3, 3).unwrap() {
        DomaticReduction::Instance { host, labeling, .. } => {
            find_clique_minor(&host, labeling.h(), &mut SearchBudget::new(10_000_000))
        }
        other => return Err(format!("unexpected trivial reduction {other:?}")),
    };
    ensure(answer == SearchOutcome::NotFound, || format!("stripped instance: {answer:?}"))?;
    Ok(format!("K15 refuted in the 18-vertex host after {} nodes", budget.used()))
}

fn paths_equivalence() -> Outcome {
    let spec = CorpusSpec { graphs: GraphCorpus::Exhaustive { max_n: 5 }, param_max: 2, budget: 10_000_000 };
    report_line(&crosscheck_paths(&spec))
}

fn oracle_equivalence() -> Outcome {
    let mut checked = 0;
    for g in (1..=5).flat_map(all_labeled_graphs) {
        let (a, b) = (exact_hadwiger(&g)?, hadwiger_oracle(&g).unwrap());
        ensure(a == b, || format!("hadwiger {a} vs oracle {b} on {:?}", g.edges()))?;
        let (x, family) = domatic_number(&g).map_err(|e| e.to_string())?;
        let y = domatic_oracle(&g).unwrap();
        ensure(x == y && family.len() == x && family.verify(&g).is_ok(), || {
            format!("domatic {x} vs oracle {y} on {:?}", g.edges())
        })?;
        checked += 1;
    }
    let ps = [0.2, 0.35, 0.5, 0.65, 0.8];
    for seed in 0..10_000u64 {
        let g = generate(GraphKind::Random { n: 6, p: ps[seed as usize % ps.len()] }, seed).unwrap();
        let (a, b) = (exact_hadwiger(&g)?, hadwiger_oracle(&g).unwrap());
        ensure(a == b, || format!("hadwiger {a} vs oracle {b} on seed {seed}"))?;
    }
    Ok(format!("{checked} exhaustive graphs (both problems) + 10000 random n=6"))
}

/// Each branch set holds exactly one non-middle vertex, and every bottom
/// row has a singleton set.
fn check_model_structure(m: &MinorModel, lab: &ReductionLabeling) -> Result<(), String> {
    for (k, set) in m.branch_sets.iter().enumerate() {
        let non_mid = set.iter().filter(|&&v| !lab.layer(v).is_mid()).count();
        ensure(non_mid == 1, || format!("set {k} has {non_mid} non-middle vertices"))?;
    }
    for i in 0..lab.n() {
        let singleton = m
            .branch_sets
            .iter()
            .any(|s| s.len() == 1 && matches!(lab.layer(s.as_slice()[0]), Layer::Bot(r, _) if r == i));
        ensure(singleton, || format!("bottom row {i} has no singleton set"))?;
    }
    Ok(())
}

/// Grows a random connected vertex set of `host` from a random start.
fn random_connected_subset(host: &Graph, rng: &mut ChaCha8Rng) -> VertexSet {
    let start = rng.gen_range(0..host.n());
    let target = rng.gen_range(1..=host.n().min(6));
    let mut set = VertexSet::from([start]);
    while set.len() < target {
        let frontier: Vec<usize> =
            set.iter().flat_map(|&v| host.neighbors(v)).filter(|w| !set.contains(*w)).collect();
        if frontier.is_empty() {
            break;
        }
        set.insert(frontier[rng.gen_range(0..frontier.len())]);
    }
    set
}

fn property_suite() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let corpus = GraphCorpus::Random { count: 200, max_n: 7, ps: vec![0.3, 0.5, 0.7], seed: 11 }.graphs();

    // deletion and contraction never raise the Hadwiger number
    let mut minors = 0;
    for g in &corpus {
        let h = exact_hadwiger(g)?;
        let w = clique_number(g);
        ensure(w <= h && h <= hadwiger_upper_bound(g), || format!("sandwich fails: {w} <= {h} on {:?}", g.edges()))?;
        for (u, v) in g.edges().into_iter().take(3) {
            let deleted = exact_hadwiger(&g.delete_edge(u, v).unwrap())?;
            let contracted = exact_hadwiger(&g.contract_edge(u, v).unwrap())?;
            ensure(deleted <= h && contracted <= h, || format!("minor of {:?} has larger value", g.edges()))?;
            minors += 2;
        }
        if g.n() > 1 {
            let v = rng.gen_range(0..g.n());
            ensure(exact_hadwiger(&g.delete_vertex(v).unwrap())? <= h, || "vertex deletion raised h".into())?;
        }
    }

    // connected sets of a host are one middle vertex or touch top or bottom
    let mut samples = 0;
    let mut models = 0;
    let small = (1..=3).flat_map(all_labeled_graphs).flat_map(|g| (1..=4).map(move |d| (g.clone(), d)));
    for (g, d) in small.chain(std::iter::once((cycle(5), 2))) {
        {
            let DomaticReduction::Instance { host, labeling, core } = reduce_domatic_to_hadwiger(&g, d).unwrap() else {
                continue;
            };
            for _ in 0..50 {
                let s = random_connected_subset(&host, &mut rng);
                let layers: Vec<Layer> = s.iter().map(|&v| labeling.layer(v)).collect();
                let lone_mid = layers.len() == 1 && layers[0].is_mid();
                let anchored = layers.iter().any(|l| !l.is_mid());
                ensure(lone_mid || anchored, || format!("connected set {s:?} is all middle"))?;
                samples += 1;
            }
            let mut budget = SearchBudget::new(10_000_000);
            match find_clique_minor(&host, labeling.h(), &mut budget) {
                SearchOutcome::Found(m) => {
                    check_model_structure(&m, &labeling)?;
                    let back = minor_model_to_domatic_witness(&host, &m, &labeling).map_err(|e| e.to_string())?;
                    let lifted = core.lift_family(&back);
                    ensure(lifted.len() >= d && lifted.verify(&g).is_ok(), || "round trip family invalid".into())?;
                    let again = domatic_witness_to_minor_model(&core.core, &back, &labeling).map_err(|e| e.to_string())?;
                    verify_clique_minor_model(&host, &again).map_err(|v| v.to_string())?;
                    models += 1;
                }
                SearchOutcome::NotFound => {}
                SearchOutcome::Indeterminate => return Err(format!("budget ran out on {:?} d={d}", g.edges())),
            }
        }
    }
    Ok(format!("{minors} minors, {samples} connected sets, {models} solver models with round trips"))
}

fn main() -> ExitCode {
    type Check = fn() -> Outcome;
    let criteria: [(&str, Check, u64); 8] = [
        ("C5 d=2 host sizes and translated 32-set model", c5_positive, 10),
        ("K32 found in the C5 d=2 host within 10^7 nodes", c5_search, 300),
        ("layer audit and middle degree identity", degree_identity, 60),
        ("domatic vs Hadwiger, all graphs n<=3, d<=4", domatic_equivalence, 600),
        ("P3 d=3 refuted on both sides", p3_negative, 60),
        ("disjoint paths vs Hadwiger, all graphs n<=5, k<=2", paths_equivalence, 600),
        ("solvers agree with brute-force oracles", oracle_equivalence, 1800),
        ("minor monotonicity, sandwich bounds, model structure, round trips", property_suite, 600),
    ];
    let mut failed = 0;
    for (i, (name, check, limit)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = check();
        let elapsed = start.elapsed();
        let result = match result {
            Ok(detail) if elapsed > Duration::from_secs(*limit) => {
                Err(format!("{detail}; took {elapsed:.1?}, limit {limit}s"))
            }
            other => other,
        };
        match result {
            Ok(detail) => println!("PASS {} {name}: {detail} ({elapsed:.2?})", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL {} {name}: {why} ({elapsed:.2?})", i + 1);
            }
        }
    }
    println!("{}/{} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
