//! Brute-force Hadwiger number, written straight from the definition and
//! sharing nothing with the search code beyond `Graph::has_edge`.

use crate::error::{Error, Result};
use crate::graph::Graph;

pub const HADWIGER_ORACLE_CAP: usize = 9;

pub fn hadwiger_oracle(g: &Graph) -> Result<usize> {
    hadwiger_oracle_with_cap(g, HADWIGER_ORACLE_CAP)
}

/// For `h = n, n-1, ..., 1` tries every labeling of the vertices with
/// `{unused, 1..h}` and returns the first `h` for which some labeling gives
/// `h` nonempty, connected, pairwise adjacent classes. Labelings are
/// enumerated up to renaming of the classes (class `c` first appears
/// before class `c+1`).
pub fn hadwiger_oracle_with_cap(g: &Graph, cap: usize) -> Result<usize> {
    let n = g.n();
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    if n > cap {
        return Err(Error::OracleCap { n, cap });
    }
    for h in (1..=n).rev() {
        let mut labels = vec![0usize; n];
        if some_labeling_works(g, h, &mut labels, 0, 0) {
            return Ok(h);
        }
    }
    unreachable!("a single vertex is always a K_1 model")
}

/// `labels[v] == 0` means unused; `1..=h` are classes. `opened` is the
/// largest class used so far.
fn some_labeling_works(g: &Graph, h: usize, labels: &mut [usize], v: usize, opened: usize) -> bool {
    if v == labels.len() {
        return opened == h && is_clique_model(g, labels, h);
    }
    if opened + (labels.len() - v) < h {
        return false;
    }
    for label in 0..=(opened + 1).min(h) {
        labels[v] = label;
        if some_labeling_works(g, h, labels, v + 1, opened.max(label)) {
            return true;
        }
    }
    labels[v] = 0;
    false
}

fn is_clique_model(g: &Graph, labels: &[usize], h: usize) -> bool {
    let n = labels.len();
    for class in 1..=h {
        let members: Vec<usize> = (0..n).filter(|&v| labels[v] == class).collect();
        if members.is_empty() || !members_connected(g, &members) {
            return false;
        }
    }
    for a in 1..=h {
        for b in a + 1..=h {
            let joined = (0..n).any(|u| {
                labels[u] == a && (0..n).any(|w| labels[w] == b && g.has_edge(u, w))
            });
            if !joined {
                return false;
            }
        }
    }
    true
}

fn members_connected(g: &Graph, members: &[usize]) -> bool {
    let mut reached = vec![false; members.len()];
    reached[0] = true;
    let mut stack = vec![0];
    while let Some(i) = stack.pop() {
        for j in 0..members.len() {
            if !reached[j] && g.has_edge(members[i], members[j]) {
                reached[j] = true;
                stack.push(j);
            }
        }
    }
    reached.into_iter().all(|r| r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::{complete_bipartite, cycle, star};

    #[test]
    fn oracle_examples() {
        let k4_minus = Graph::new(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)]).unwrap();
        assert_eq!(hadwiger_oracle(&k4_minus).unwrap(), 3);
        assert_eq!(hadwiger_oracle(&star(3)).unwrap(), 2);
        assert_eq!(hadwiger_oracle(&cycle(5)).unwrap(), 3);
        assert_eq!(hadwiger_oracle(&complete_bipartite(3, 3)).unwrap(), 4);
        assert_eq!(hadwiger_oracle(&Graph::complete(5)).unwrap(), 5);
        assert_eq!(hadwiger_oracle(&Graph::empty(2)).unwrap(), 1);
    }

    #[test]
    fn oracle_rejects() {
        assert_eq!(hadwiger_oracle(&Graph::empty(0)), Err(Error::EmptyGraph));
        assert_eq!(
            hadwiger_oracle(&Graph::empty(10)),
            Err(Error::OracleCap { n: 10, cap: 9 })
        );
    }
}
