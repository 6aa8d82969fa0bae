use std::fs;
use std::io::Read;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{bail, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};

use minorkit::crosscheck::{crosscheck_domatic, crosscheck_paths, CorpusSpec, GraphCorpus};
use minorkit::domatic::{domatic_number, find_disjoint_dominating_sets};
use minorkit::dot::emit_dot;
use minorkit::formats::{format_edge_list, format_graph6, looks_like_edge_list, parse_edge_list_doc, parse_graph6};
use minorkit::generate::{generate, GraphKind};
use minorkit::minor::{
    find_clique_minor, hadwiger_number, verify_clique_minor_model, Hadwiger, MinorModel, SearchBudget,
    SearchOutcome, DEFAULT_BUDGET,
};
use minorkit::paths::{find_disjoint_paths, verify_path_set, DisjointPathsInstance};
use minorkit::reduce::{
    domatic_witness_to_minor_model, minor_model_to_domatic_witness, minor_model_to_paths_witness,
    paths_witness_to_minor_model, reduce_domatic_to_hadwiger, reduce_paths_to_hadwiger, DomaticReduction,
};
use minorkit::witness::{format_labeling, format_witness, parse_witness, Witness};
use minorkit::Graph;

const YES: u8 = 0;
const NO: u8 = 1;
const USAGE: u8 = 2;
const UNKNOWN: u8 = 3;

/// Clique minors, domatic partitions, disjoint paths, and the reductions
/// between them.
///
/// Exit status: 0 positive answer or success, 1 negative answer, 2 usage or
/// input error, 3 search budget exhausted.
#[derive(Parser)]
#[command(name = "minorkit", version)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Generate a graph: complete:N, cycle:N, path:N, star:K, empty:N, random:N:P
    Gen {
        kind: GraphKind,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = Format::Graph6)]
        format: Format,
        /// Write here instead of stdout
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Hadwiger number, or whether K_h is a minor when --h is given
    Hadwiger {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        h: Option<usize>,
        #[command(flatten)]
        search: SearchArgs,
    },
    /// Domatic number, or whether d disjoint dominating sets exist
    Domatic {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        d: Option<usize>,
        /// Write the witness here instead of stdout
        #[arg(long)]
        witness: Option<PathBuf>,
    },
    /// Vertex-disjoint paths between terminal pairs
    Paths {
        /// Graph; `d s t` lines in an edge-list file add terminal pairs
        #[arg(long)]
        input: PathBuf,
        /// Extra terminal pair, as `s,t`
        #[arg(long = "pair", value_parser = parse_pair)]
        pairs: Vec<(usize, usize)>,
        #[command(flatten)]
        search: SearchArgs,
    },
    /// Build the Hadwiger instance for a domatic or paths instance, and
    /// translate witnesses between the two
    Reduce {
        #[arg(long, value_enum)]
        from: Problem,
        #[arg(long)]
        input: PathBuf,
        /// Number of dominating sets (domatic only)
        #[arg(long)]
        d: Option<usize>,
        /// Terminal pair `s,t` (paths only)
        #[arg(long = "pair", value_parser = parse_pair)]
        pairs: Vec<(usize, usize)>,
        /// Write the host graph (graph6) here
        #[arg(long)]
        host_out: Option<PathBuf>,
        /// Write the layer labeling here instead of stdout (domatic only)
        #[arg(long)]
        labeling_out: Option<PathBuf>,
        /// Write a DOT rendering of the host graph here
        #[arg(long)]
        dot: Option<PathBuf>,
        /// Source witness to translate into a host clique-minor model
        #[arg(long, conflicts_with = "back")]
        forward: Option<PathBuf>,
        /// Host clique-minor model to translate back into a source witness
        #[arg(long)]
        back: Option<PathBuf>,
        /// Where translated witnesses go (default stdout)
        #[arg(long)]
        witness: Option<PathBuf>,
    },
    /// Check a witness file against a graph
    Verify {
        #[arg(long = "type", value_enum)]
        kind: WitnessType,
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        witness: PathBuf,
        /// Required model order (clique_minor)
        #[arg(long)]
        h: Option<usize>,
        /// Required number of sets (domatic)
        #[arg(long)]
        d: Option<usize>,
        /// Terminal pair `s,t` (paths)
        #[arg(long = "pair", value_parser = parse_pair)]
        pairs: Vec<(usize, usize)>,
    },
    /// Compare a source solver with the Hadwiger solver over a corpus
    Crosscheck {
        #[arg(long, value_enum)]
        from: Problem,
        /// Largest graph order
        #[arg(long, default_value_t = 3)]
        max_n: usize,
        /// Largest d (domatic, default 4) or k (paths, default 2)
        #[arg(long)]
        max_param: Option<usize>,
        /// Use this many seeded random graphs instead of all labeled graphs
        #[arg(long)]
        random: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Edge probabilities for random graphs
        #[arg(long, value_delimiter = ',', default_value = "0.3,0.5,0.7")]
        p: Vec<f64>,
        #[arg(long, default_value_t = DEFAULT_BUDGET, value_parser = clap::value_parser!(u64).range(1..))]
        budget: u64,
        /// Write the report here instead of stdout
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Args)]
struct SearchArgs {
    /// Search-tree node limit
    #[arg(long, default_value_t = DEFAULT_BUDGET, value_parser = clap::value_parser!(u64).range(1..))]
    budget: u64,
    /// Write the witness here instead of stdout
    #[arg(long)]
    witness: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Graph6,
    Edges,
}

#[derive(Clone, Copy, PartialEq, ValueEnum)]
enum Problem {
    Domatic,
    Paths,
}

#[derive(Clone, Copy, ValueEnum)]
#[value(rename_all = "snake_case")]
enum WitnessType {
    CliqueMinor,
    Domatic,
    Paths,
}

fn parse_pair(s: &str) -> Result<(usize, usize), String> {
    let (a, b) = s.split_once(',').ok_or("expected `s,t`")?;
    let num = |x: &str| x.trim().parse::<usize>().map_err(|e| format!("{x:?}: {e}"));
    Ok((num(a)?, num(b)?))
}

fn read_text(path: &Path) -> anyhow::Result<String> {
    if path == Path::new("-") {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s)?;
        return Ok(s);
    }
    fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}

/// Reads a graph in either format, with any terminal pairs it carries.
fn read_graph(path: &Path) -> anyhow::Result<(Graph, Vec<(usize, usize)>)> {
    let text = read_text(path)?;
    if looks_like_edge_list(&text) {
        let doc = parse_edge_list_doc(&text).with_context(|| format!("parsing {}", path.display()))?;
        Ok((doc.graph, doc.pairs))
    } else {
        let g = parse_graph6(&text).with_context(|| format!("parsing {}", path.display()))?;
        Ok((g, Vec::new()))
    }
}

fn read_witness(path: &Path) -> anyhow::Result<Witness> {
    parse_witness(&read_text(path)?).with_context(|| format!("parsing {}", path.display()))
}

fn write_or_print(path: Option<&Path>, text: &str) -> anyhow::Result<()> {
    match path {
        Some(p) => fs::write(p, text).with_context(|| format!("writing {}", p.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn paths_instance(path: &Path, extra: &[(usize, usize)]) -> anyhow::Result<DisjointPathsInstance> {
    let (g, mut pairs) = read_graph(path)?;
    pairs.extend_from_slice(extra);
    Ok(DisjointPathsInstance::new(g, pairs)?)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.cmd) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(USAGE)
        }
    }
}

fn run(cmd: Cmd) -> anyhow::Result<u8> {
    match cmd {
        Cmd::Gen { kind, seed, format, out } => {
            let g = generate(kind, seed)?;
            let text = match format {
                Format::Graph6 => format_graph6(&g) + "\n",
                Format::Edges => format_edge_list(&g),
            };
            write_or_print(out.as_deref(), &text)?;
            Ok(YES)
        }
        Cmd::Hadwiger { input, h, search } => {
            let (g, _) = read_graph(&input)?;
            let mut budget = SearchBudget::new(search.budget);
            let code = match h {
                Some(h) => match find_clique_minor(&g, h, &mut budget) {
                    SearchOutcome::Found(model) => {
                        println!("yes");
                        write_or_print(search.witness.as_deref(), &format_witness(&Witness::CliqueMinor(model)))?;
                        YES
                    }
                    SearchOutcome::NotFound => {
                        println!("no");
                        NO
                    }
                    SearchOutcome::Indeterminate => {
                        println!("unknown");
                        UNKNOWN
                    }
                },
                None => {
                    let result = hadwiger_number(&g, &mut budget)?;
                    let code = match &result {
                        Hadwiger::Exact { value, .. } => {
                            println!("hadwiger {value}");
                            YES
                        }
                        Hadwiger::LowerBound { value, .. } => {
                            println!("hadwiger >= {value}");
                            UNKNOWN
                        }
                    };
                    let w = Witness::CliqueMinor(result.model().clone());
                    write_or_print(search.witness.as_deref(), &format_witness(&w))?;
                    code
                }
            };
            eprintln!("searched {} nodes", budget.used());
            Ok(code)
        }
        Cmd::Domatic { input, d, witness } => {
            let (g, _) = read_graph(&input)?;
            match d {
                Some(d) => match find_disjoint_dominating_sets(&g, d)? {
                    Some(family) => {
                        println!("yes");
                        write_or_print(witness.as_deref(), &format_witness(&Witness::Domatic(family)))?;
                        Ok(YES)
                    }
                    None => {
                        println!("no");
                        Ok(NO)
                    }
                },
                None => {
                    let (value, family) = domatic_number(&g)?;
                    println!("domatic {value}");
                    write_or_print(witness.as_deref(), &format_witness(&Witness::Domatic(family)))?;
                    Ok(YES)
                }
            }
        }
        Cmd::Paths { input, pairs, search } => {
            let inst = paths_instance(&input, &pairs)?;
            let mut budget = SearchBudget::new(search.budget);
            let outcome = find_disjoint_paths(&inst, &mut budget);
            eprintln!("searched {} nodes", budget.used());
            Ok(match outcome {
                SearchOutcome::Found(ps) => {
                    println!("yes");
                    write_or_print(search.witness.as_deref(), &format_witness(&Witness::Paths(ps)))?;
                    YES
                }
                SearchOutcome::NotFound => {
                    println!("no");
                    NO
                }
                SearchOutcome::Indeterminate => {
                    println!("unknown");
                    UNKNOWN
                }
            })
        }
        Cmd::Reduce { from, input, d, pairs, host_out, labeling_out, dot, forward, back, witness } => {
            let r = ReduceArgs { host_out, labeling_out, dot, forward, back, witness };
            match from {
                Problem::Domatic => {
                    let d = d.context("--d is required with --from domatic")?;
                    if !pairs.is_empty() {
                        bail!("--pair only applies to --from paths");
                    }
                    let (g, _) = read_graph(&input)?;
                    reduce_domatic(&g, d, &r)
                }
                Problem::Paths => {
                    if d.is_some() {
                        bail!("--d only applies to --from domatic");
                    }
                    reduce_paths(&paths_instance(&input, &pairs)?, &r)
                }
            }
        }
        Cmd::Verify { kind, graph, witness, h, d, pairs } => {
            let (g, file_pairs) = read_graph(&graph)?;
            let verdict: Result<(), String> = match (kind, read_witness(&witness)?) {
                (WitnessType::CliqueMinor, Witness::CliqueMinor(m)) => {
                    verify_clique_minor_model(&g, &m).map_err(|v| v.to_string()).and_then(|()| match h {
                        Some(h) if m.order() != h => Err(format!("model has {} sets, expected {h}", m.order())),
                        _ => Ok(()),
                    })
                }
                (WitnessType::Domatic, Witness::Domatic(f)) => {
                    f.verify(&g).map_err(|v| v.to_string()).and_then(|()| match d {
                        Some(d) if f.len() < d => Err(format!("family has {} sets, expected {d}", f.len())),
                        _ => Ok(()),
                    })
                }
                (WitnessType::Paths, Witness::Paths(ps)) => {
                    let mut all = file_pairs;
                    all.extend(pairs);
                    let inst = DisjointPathsInstance::new(g, all)?;
                    verify_path_set(&inst, &ps).map_err(|v| v.to_string())
                }
                (_, w) => bail!("witness file has type {}", w.type_name()),
            };
            Ok(match verdict {
                Ok(()) => {
                    println!("valid");
                    YES
                }
                Err(why) => {
                    println!("invalid: {why}");
                    NO
                }
            })
        }
        Cmd::Crosscheck { from, max_n, max_param, random, seed, p, budget, out } => {
            if p.is_empty() || p.iter().any(|p| !(0.0..=1.0).contains(p)) {
                bail!("--p needs probabilities in [0, 1]");
            }
            let graphs = match random {
                Some(count) => GraphCorpus::Random { count, max_n, ps: p, seed },
                None if max_n > 7 => bail!("exhaustive corpora stop at --max-n 7"),
                None => GraphCorpus::Exhaustive { max_n },
            };
            let param_max = max_param.unwrap_or(if from == Problem::Domatic { 4 } else { 2 });
            let spec = CorpusSpec { graphs, param_max, budget };
            let start = Instant::now();
            let report = match from {
                Problem::Domatic => crosscheck_domatic(&spec),
                Problem::Paths => crosscheck_paths(&spec),
            };
            write_or_print(out.as_deref(), &report.to_text())?;
            eprintln!("{} in {:.2?}", report.summary_line(), start.elapsed());
            Ok(if report.all_agree() { YES } else { NO })
        }
    }
}

struct ReduceArgs {
    host_out: Option<PathBuf>,
    labeling_out: Option<PathBuf>,
    dot: Option<PathBuf>,
    forward: Option<PathBuf>,
    back: Option<PathBuf>,
    witness: Option<PathBuf>,
}

fn print_host(host: &Graph, h: usize, r: &ReduceArgs) -> anyhow::Result<()> {
    println!("h {h}");
    println!("vertices {}", host.n());
    println!("edges {}", host.edge_count());
    println!("graph6 {}", format_graph6(host));
    if let Some(p) = &r.host_out {
        fs::write(p, format_graph6(host) + "\n").with_context(|| format!("writing {}", p.display()))?;
    }
    Ok(())
}

fn host_model(path: &Path) -> anyhow::Result<MinorModel> {
    match read_witness(path)? {
        Witness::CliqueMinor(m) => Ok(m),
        w => bail!("{} holds a {} witness, expected clique_minor", path.display(), w.type_name()),
    }
}

fn reduce_domatic(g: &Graph, d: usize, r: &ReduceArgs) -> anyhow::Result<u8> {
    let reduction = reduce_domatic_to_hadwiger(g, d)?;
    let core = reduction.core();
    eprintln!("stripped {} universal vertices, {} sets left to find", core.stripped.len(), core.d_core.max(0));
    let (host, h) = reduction.hadwiger_instance();
    match &reduction {
        DomaticReduction::TriviallyPositive { .. } => println!("trivial yes"),
        DomaticReduction::TriviallyNegative { .. } => println!("trivial no"),
        DomaticReduction::Instance { .. } => {}
    }
    print_host(&host, h, r)?;
    let lab = match &reduction {
        DomaticReduction::Instance { labeling, .. } => {
            write_or_print(r.labeling_out.as_deref(), &format_labeling(labeling))?;
            Some(labeling)
        }
        _ => None,
    };

    let mut model = None;
    if let Some(path) = &r.forward {
        let Witness::Domatic(family) = read_witness(path)? else {
            bail!("{} is not a domatic witness", path.display());
        };
        family.verify(g).map_err(|v| anyhow::anyhow!("source witness invalid: {v}"))?;
        if family.len() < d {
            bail!("source witness has {} sets, need {d}", family.len());
        }
        let m = match lab {
            Some(lab) => domatic_witness_to_minor_model(&core.core, &core.restrict_family(&family), lab)?,
            None if h == 1 => MinorModel::new(vec![[0].into()]),
            None => bail!("instance is trivially negative"),
        };
        write_or_print(r.witness.as_deref(), &format_witness(&Witness::CliqueMinor(m.clone())))?;
        model = Some(m);
    }
    if let Some(path) = &r.back {
        let m = host_model(path)?;
        verify_clique_minor_model(&host, &m).map_err(|v| anyhow::anyhow!("host model invalid: {v}"))?;
        if m.order() < h {
            bail!("host model has {} sets, need {h}", m.order());
        }
        let core_family = match lab {
            Some(lab) => minor_model_to_domatic_witness(&host, &m, lab)?,
            None => Default::default(),
        };
        let family = core.lift_family(&core_family);
        write_or_print(r.witness.as_deref(), &format_witness(&Witness::Domatic(family)))?;
        model = Some(m);
    }
    if let Some(p) = &r.dot {
        fs::write(p, emit_dot(&host, lab, model.as_ref())?).with_context(|| format!("writing {}", p.display()))?;
    }
    Ok(YES)
}

fn reduce_paths(inst: &DisjointPathsInstance, r: &ReduceArgs) -> anyhow::Result<u8> {
    if r.labeling_out.is_some() {
        bail!("--labeling-out only applies to --from domatic");
    }
    let (host, h, map) = reduce_paths_to_hadwiger(inst)?;
    print_host(&host, h, r)?;
    let ids: Vec<String> = map.clique_vertices.iter().map(|v| v.to_string()).collect();
    println!("clique {}", ids.join(" "));

    let mut model = None;
    if let Some(path) = &r.forward {
        let Witness::Paths(ps) = read_witness(path)? else {
            bail!("{} is not a paths witness", path.display());
        };
        let m = paths_witness_to_minor_model(inst, &map, &ps)?;
        write_or_print(r.witness.as_deref(), &format_witness(&Witness::CliqueMinor(m.clone())))?;
        model = Some(m);
    }
    if let Some(path) = &r.back {
        let m = host_model(path)?;
        let ps = minor_model_to_paths_witness(&host, &m, &map)?;
        write_or_print(r.witness.as_deref(), &format_witness(&Witness::Paths(ps)))?;
        model = Some(m);
    }
    if let Some(p) = &r.dot {
        fs::write(p, emit_dot(&host, None, model.as_ref())?).with_context(|| format!("writing {}", p.display()))?;
    }
    Ok(YES)
}
