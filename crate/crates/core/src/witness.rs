//! Line-oriented witness and labeling files.
//!
//! Every line is a keyword followed by integers; `c` lines and blank lines
//! are ignored. Witness files start with a `type` line:
//!
//! ```text
//! type clique_minor        type domatic        type paths
//! h 3                      d 2                 k 2
//! set 0 1                  set 0 2             path 0 1 2
//! set 2                    set 1 3             path 3 4
//! set 3 4
//! ```
//!
//! The count line (`h`, `d`, `k`) is checked against the number of
//! `set`/`path` lines. Labeling files map host ids to layer labels:
//!
//! ```text
//! n 5
//! d 2
//! h 32
//! v 0 T1
//! v 2 M1
//! v 7 B1.1
//! ```

use std::fmt::Write;

use crate::domatic::DomaticFamily;
use crate::error::{Error, Result};
use crate::graph::VertexSet;
use crate::minor::MinorModel;
use crate::paths::PathSet;
use crate::reduce::{Layer, ReductionLabeling};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Witness {
    CliqueMinor(MinorModel),
    Domatic(DomaticFamily),
    Paths(PathSet),
}

impl Witness {
    pub fn type_name(&self) -> &'static str {
        match self {
            Witness::CliqueMinor(_) => "clique_minor",
            Witness::Domatic(_) => "domatic",
            Witness::Paths(_) => "paths",
        }
    }
}

fn join(items: impl IntoIterator<Item = usize>) -> String {
    items.into_iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" ")
}

pub fn format_witness(w: &Witness) -> String {
    let mut out = format!("type {}\n", w.type_name());
    match w {
        Witness::CliqueMinor(m) => {
            writeln!(out, "h {}", m.order()).unwrap();
            for s in &m.branch_sets {
                writeln!(out, "set {}", join(s.iter().copied())).unwrap();
            }
        }
        Witness::Domatic(f) => {
            writeln!(out, "d {}", f.len()).unwrap();
            for s in &f.sets {
                writeln!(out, "set {}", join(s.iter().copied())).unwrap();
            }
        }
        Witness::Paths(ps) => {
            writeln!(out, "k {}", ps.paths.len()).unwrap();
            for p in &ps.paths {
                writeln!(out, "path {}", join(p.iter().copied())).unwrap();
            }
        }
    }
    out
}

/// Splits a file into `(line number, keyword, rest)` triples, skipping
/// comments and blank lines.
fn records(text: &str) -> impl Iterator<Item = (usize, &str, Vec<&str>)> {
    text.lines().enumerate().filter_map(|(i, line)| {
        let mut words = line.split_whitespace();
        let key = words.next()?;
        (key != "c").then(|| (i + 1, key, words.collect()))
    })
}

fn numbers(line: usize, words: &[&str]) -> Result<Vec<usize>> {
    words
        .iter()
        .map(|w| w.parse().map_err(|_| Error::Parse(format!("line {line}: bad integer {w:?}"))))
        .collect()
}

fn single(line: usize, words: &[&str]) -> Result<usize> {
    match numbers(line, words)?.as_slice() {
        [x] => Ok(*x),
        _ => Err(Error::Parse(format!("line {line}: expected one integer"))),
    }
}

pub fn parse_witness(text: &str) -> Result<Witness> {
    let mut kind = None;
    let mut declared = None;
    let mut rows: Vec<Vec<usize>> = Vec::new();
    for (line, key, words) in records(text) {
        match (key, kind) {
            ("type", None) => match words.as_slice() {
                [t @ ("clique_minor" | "domatic" | "paths")] => kind = Some(*t),
                _ => return Err(Error::Parse(format!("line {line}: unknown witness type"))),
            },
            (_, None) => return Err(Error::Parse(format!("line {line}: expected a type line first"))),
            ("h", Some("clique_minor")) | ("d", Some("domatic")) | ("k", Some("paths")) => {
                if declared.replace(single(line, &words)?).is_some() {
                    return Err(Error::Parse(format!("line {line}: count given twice")));
                }
            }
            ("set", Some("clique_minor" | "domatic")) | ("path", Some("paths")) => {
                rows.push(numbers(line, &words)?);
            }
            _ => return Err(Error::Parse(format!("line {line}: unexpected keyword {key:?}"))),
        }
    }
    let kind = kind.ok_or_else(|| Error::Parse("missing type line".into()))?;
    if let Some(count) = declared {
        if count != rows.len() {
            return Err(Error::Parse(format!("count line says {count}, found {} entries", rows.len())));
        }
    }
    let sets = || rows.iter().map(|r| r.iter().copied().collect::<VertexSet>()).collect();
    Ok(match kind {
        "clique_minor" => Witness::CliqueMinor(MinorModel::new(sets())),
        "domatic" => Witness::Domatic(DomaticFamily::new(sets())),
        _ => Witness::Paths(PathSet::new(rows)),
    })
}

pub fn format_labeling(lab: &ReductionLabeling) -> String {
    let mut out = format!("n {}\nd {}\nh {}\n", lab.n(), lab.d(), lab.h());
    for (v, l) in lab.layers().iter().enumerate() {
        writeln!(out, "v {v} {l}").unwrap();
    }
    out
}

/// Reads a labeling file. The `n`/`d`/`h` lines are optional but must agree
/// with the layers when present.
pub fn parse_labeling(text: &str) -> Result<ReductionLabeling> {
    let mut header = [None; 3];
    let mut layers: Vec<Option<Layer>> = Vec::new();
    for (line, key, words) in records(text) {
        match key {
            "n" | "d" | "h" => {
                let slot = ["n", "d", "h"].iter().position(|k| *k == key).unwrap();
                header[slot] = Some(single(line, &words)?);
            }
            "v" => {
                let [id, label] = words.as_slice() else {
                    return Err(Error::Parse(format!("line {line}: expected `v <id> <label>`")));
                };
                let id = single(line, &[id])?;
                let layer: Layer = label.parse()?;
                if layers.len() <= id {
                    layers.resize(id + 1, None);
                }
                if layers[id].replace(layer).is_some() {
                    return Err(Error::Parse(format!("line {line}: vertex {id} labeled twice")));
                }
            }
            _ => return Err(Error::Parse(format!("line {line}: unexpected keyword {key:?}"))),
        }
    }
    let layers = layers
        .into_iter()
        .enumerate()
        .map(|(v, l)| l.ok_or_else(|| Error::Parse(format!("vertex {v} has no label"))))
        .collect::<Result<Vec<_>>>()?;
    let lab = ReductionLabeling::from_layers(layers)?;
    for (value, expected, name) in [(header[0], lab.n(), "n"), (header[1], lab.d(), "d"), (header[2], lab.h(), "h")] {
        if value.is_some_and(|x| x != expected) {
            return Err(Error::Parse(format!("header {name} disagrees with the labels")));
        }
    }
    Ok(lab)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn witness_round_trips() {
        let ws = [
            Witness::CliqueMinor(MinorModel::new(vec![VertexSet::from([0, 1]), VertexSet::from([2])])),
            Witness::Domatic(DomaticFamily::new(vec![VertexSet::from([0, 2]), VertexSet::from([1, 3])])),
            Witness::Paths(PathSet::new(vec![vec![0, 1, 2], vec![3, 4]])),
            Witness::Paths(PathSet::default()),
        ];
        for w in ws {
            assert_eq!(parse_witness(&format_witness(&w)).unwrap(), w);
        }
    }

    #[test]
    fn witness_text() {
        let w = Witness::CliqueMinor(MinorModel::new(vec![VertexSet::from([3, 1]), VertexSet::from([2])]));
        assert_eq!(format_witness(&w), "type clique_minor\nh 2\nset 1 3\nset 2\n");
        let parsed = parse_witness("c hand made\n\ntype domatic\nset 1\nset 0 2\n").unwrap();
        assert_eq!(
            parsed,
            Witness::Domatic(DomaticFamily::new(vec![VertexSet::from([1]), VertexSet::from([0, 2])]))
        );
    }

    #[test]
    fn witness_errors() {
        assert!(parse_witness("set 1 2\n").is_err());
        assert!(parse_witness("type clique_minor\nh 2\nset 0\n").is_err());
        assert!(parse_witness("type paths\nset 0 1\n").is_err());
        assert!(parse_witness("type domatic\nset 0 x\n").is_err());
        assert!(parse_witness("type bogus\n").is_err());
        assert!(parse_witness("").is_err());
    }

    #[test]
    fn labeling_round_trip() {
        let lab = ReductionLabeling::new(3, 2);
        let text = format_labeling(&lab);
        assert!(text.starts_with("n 3\nd 2\nh 14\nv 0 T1\n"));
        assert_eq!(parse_labeling(&text).unwrap(), lab);
        assert!(parse_labeling(&text.replace("h 14", "h 15")).is_err());
        assert!(parse_labeling("v 0 T1\nv 2 M1\n").is_err());
    }
}
