//! Simple undirected graphs used as sparsity templates.

mod families;
mod near_complete;

use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{param, Error, Result};

pub use families::GraphFamily;
pub use near_complete::{
    max_near_complete_order, max_near_complete_order_fast, near_complete_embedding,
    NearCompleteEmbedding, BRUTE_FORCE_MAX_VERTICES,
};

/// A finite simple undirected graph on vertices `0..n`.
///
/// Adjacency is stored once per vertex as an ordered set, so the edge set is
/// symmetric by construction and iteration order is canonical.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(into = "GraphRepr", try_from = "GraphRepr")]
pub struct Graph {
    adj: Vec<BTreeSet<usize>>,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Graph {
            adj: vec![BTreeSet::new(); n],
        }
    }

    /// Builds a graph from 0-based edges. Duplicate edges collapse.
    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut g = Graph::empty(n);
        for (i, j) in edges {
            g.add_edge(i, j)?;
        }
        Ok(g)
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(BTreeSet::len).sum::<usize>() / 2
    }

    /// Inserts `{i, j}`. Returns `true` if the edge was new.
    pub fn add_edge(&mut self, i: usize, j: usize) -> Result<bool> {
        let n = self.n();
        if i >= n || j >= n {
            return param(format!(
                "edge {{{}, {}}} out of range for {n} vertices",
                i + 1,
                j + 1
            ));
        }
        if i == j {
            return param(format!("self-loop at vertex {}", i + 1));
        }
        let fresh = self.adj[i].insert(j);
        self.adj[j].insert(i);
        Ok(fresh)
    }

    pub fn remove_edge(&mut self, i: usize, j: usize) -> bool {
        if i >= self.n() || j >= self.n() {
            return false;
        }
        let had = self.adj[i].remove(&j);
        self.adj[j].remove(&i);
        had
    }

    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        i < self.n() && self.adj[i].contains(&j)
    }

    pub fn neighbors(&self, v: usize) -> &BTreeSet<usize> {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    /// Edges as `(i, j)` with `i < j`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(i, nb)| nb.range(i + 1..).map(move |&j| (i, j)))
    }

    /// True if every pair of distinct vertices in `set` is adjacent.
    pub fn is_clique(&self, set: &[usize]) -> bool {
        set.iter()
            .enumerate()
            .all(|(k, &a)| set[k + 1..].iter().all(|&b| self.has_edge(a, b)))
    }

    pub fn is_complete(&self) -> bool {
        let n = self.n();
        self.edge_count() == n * n.saturating_sub(1) / 2
    }

    /// Subgraph induced by `vertices`, relabeled `0..vertices.len()` in the
    /// given order. The second value maps new labels back to old ones.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Result<(Graph, Vec<usize>)> {
        if vertices.is_empty() {
            return param("induced subgraph needs a nonempty vertex set");
        }
        let mut index = vec![usize::MAX; self.n()];
        for (k, &v) in vertices.iter().enumerate() {
            if v >= self.n() {
                return param(format!("vertex {} out of range", v + 1));
            }
            if index[v] != usize::MAX {
                return param(format!("vertex {} listed twice", v + 1));
            }
            index[v] = k;
        }
        let mut sub = Graph::empty(vertices.len());
        for (k, &v) in vertices.iter().enumerate() {
            for &w in &self.adj[v] {
                if index[w] != usize::MAX && index[w] > k {
                    sub.add_edge(k, index[w])?;
                }
            }
        }
        Ok((sub, vertices.to_vec()))
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.n();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut comp = vec![start];
            let mut queue = VecDeque::from([start]);
            while let Some(v) = queue.pop_front() {
                for &w in &self.adj[v] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        queue.push_back(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// Two-colouring of the graph, or `None` if it has an odd cycle.
    /// Colour of the smallest vertex in each component is `false`.
    pub fn bipartition(&self) -> Option<Vec<bool>> {
        let n = self.n();
        let mut colour: Vec<Option<bool>> = vec![None; n];
        for start in 0..n {
            if colour[start].is_some() {
                continue;
            }
            colour[start] = Some(false);
            let mut queue = VecDeque::from([start]);
            while let Some(v) = queue.pop_front() {
                let cv = colour[v].unwrap();
                for &w in &self.adj[v] {
                    match colour[w] {
                        None => {
                            colour[w] = Some(!cv);
                            queue.push_back(w);
                        }
                        Some(cw) if cw == cv => return None,
                        Some(_) => {}
                    }
                }
            }
        }
        Some(colour.into_iter().map(Option::unwrap).collect())
    }

    /// True for a connected 2-regular graph, i.e. a cycle `C_n`, `n >= 3`.
    pub fn is_cycle(&self) -> bool {
        self.n() >= 3 && self.adj.iter().all(|nb| nb.len() == 2) && self.is_connected()
    }

    /// Parses the edge-list text format.
    ///
    /// Each non-empty line that does not start with `#` is either `i j`
    /// (1-based, positive) or a header `n <count>`. Without a header the
    /// vertex count is the largest label.
    pub fn parse_edge_list(text: &str) -> Result<Graph> {
        let mut declared: Option<(usize, usize)> = None;
        let mut edges: Vec<(usize, usize, usize)> = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let fields: Vec<&str> = line.split_whitespace().collect();
            let perr = |message: String| Error::Parse {
                line: line_no,
                message,
            };
            if fields[0] == "n" {
                if fields.len() != 2 {
                    return Err(perr("header must be `n <count>`".into()));
                }
                if declared.is_some() {
                    return Err(perr("duplicate `n` header".into()));
                }
                let count: usize = fields[1]
                    .parse()
                    .map_err(|_| perr(format!("bad vertex count `{}`", fields[1])))?;
                declared = Some((count, line_no));
                continue;
            }
            if fields.len() != 2 {
                return Err(perr(format!("expected `i j`, found `{line}`")));
            }
            let label = |s: &str| -> Result<usize> {
                let v: i64 = s
                    .parse()
                    .map_err(|_| perr(format!("bad vertex label `{s}`")))?;
                if v <= 0 {
                    return Err(perr(format!("vertex labels are positive, found {v}")));
                }
                Ok(v as usize)
            };
            let (i, j) = (label(fields[0])?, label(fields[1])?);
            if i == j {
                return Err(perr(format!("self-loop at vertex {i}")));
            }
            edges.push((i, j, line_no));
        }
        let max_label = edges.iter().map(|&(i, j, _)| i.max(j)).max().unwrap_or(0);
        let n = match declared {
            Some((count, line)) => {
                if let Some(&(i, j, l)) = edges.iter().find(|&&(i, j, _)| i.max(j) > count) {
                    return Err(Error::Parse {
                        line: l,
                        message: format!("edge {i} {j} exceeds declared n = {count} (line {line})"),
                    });
                }
                count
            }
            None => max_label,
        };
        let mut g = Graph::empty(n);
        for (i, j, _) in edges {
            g.add_edge(i - 1, j - 1)?;
        }
        Ok(g)
    }

    /// Canonical edge-list text: an `n` header followed by sorted edges.
    pub fn to_edge_list(&self) -> String {
        let mut out = format!("n {}\n", self.n());
        for (i, j) in self.edges() {
            out.push_str(&format!("{} {}\n", i + 1, j + 1));
        }
        out
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("graph serialization cannot fail")
    }

    pub fn from_json(text: &str) -> Result<Graph> {
        serde_json::from_str(text).map_err(|e| Error::Parse {
            line: e.line(),
            message: e.to_string(),
        })
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let edges: Vec<_> = self.edges().map(|(i, j)| (i + 1, j + 1)).collect();
        write!(f, "Graph(n={}, edges={:?})", self.n(), edges)
    }
}

/// Splits a multi-graph stream into edge-list blocks separated by `---`
/// lines. Blocks containing only blanks and comments are skipped.
pub fn parse_graph_stream(text: &str) -> Vec<Result<Graph>> {
    let mut blocks: Vec<(usize, String)> = vec![(0, String::new())];
    for (idx, line) in text.lines().enumerate() {
        if line.trim() == "---" {
            blocks.push((idx + 1, String::new()));
        } else {
            blocks.last_mut().unwrap().1.push_str(line);
            blocks.last_mut().unwrap().1.push('\n');
        }
    }
    blocks
        .into_iter()
        .filter(|(_, body)| {
            body.lines()
                .any(|l| !l.trim().is_empty() && !l.trim().starts_with('#'))
        })
        .map(|(offset, body)| {
            Graph::parse_edge_list(&body).map_err(|e| match e {
                Error::Parse { line, message } => Error::Parse {
                    line: line + offset,
                    message,
                },
                other => other,
            })
        })
        .collect()
}

#[derive(Serialize, Deserialize)]
struct GraphRepr {
    n: usize,
    edges: Vec<[usize; 2]>,
}

impl From<Graph> for GraphRepr {
    fn from(g: Graph) -> Self {
        GraphRepr {
            n: g.n(),
            edges: g.edges().map(|(i, j)| [i + 1, j + 1]).collect(),
        }
    }
}

impl TryFrom<GraphRepr> for Graph {
    type Error = Error;

    fn try_from(r: GraphRepr) -> Result<Graph> {
        let mut g = Graph::empty(r.n);
        for [i, j] in r.edges {
            if i == 0 || j == 0 {
                return param("vertex labels are 1-based");
            }
            g.add_edge(i - 1, j - 1)?;
        }
        Ok(g)
    }
}
