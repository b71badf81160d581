//! Simple undirected graphs, expected degree sequences and edge-list I/O.
//!
//! Edge-list format: one edge per line as two whitespace-separated labels, or
//! a single label to declare a (possibly isolated) node. Lines starting with
//! `#` and blank lines are ignored. Labels are mapped to dense indices in
//! first-appearance order.

use std::collections::HashMap;
use std::io::{BufRead, Write};

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Immutable simple undirected graph.
///
/// Edges are stored once each as `(i, j)` with `i < j`, sorted.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    labels: Vec<String>,
    edges: Vec<(usize, usize)>,
}

impl Graph {
    /// Builds a graph from labels and an edge list.
    ///
    /// Edge orientation and duplicates are normalised away; self-loops and
    /// out-of-range endpoints are rejected.
    pub fn new(labels: Vec<String>, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let n = labels.len();
        let mut seen = HashMap::with_capacity(n);
        for (i, label) in labels.iter().enumerate() {
            if label.is_empty() || label.starts_with('#') || label.chars().any(char::is_whitespace) {
                return Err(Error::Domain(format!("invalid node label {label:?}")));
            }
            if seen.insert(label.as_str(), i).is_some() {
                return Err(Error::Domain(format!("duplicate node label {label:?}")));
            }
        }
        let mut normalised = Vec::new();
        for (a, b) in edges {
            if a >= n || b >= n {
                return Err(Error::Domain(format!("edge ({a}, {b}) out of range for {n} nodes")));
            }
            if a == b {
                return Err(Error::Domain(format!("self-loop on node {a}")));
            }
            normalised.push((a.min(b), a.max(b)));
        }
        Ok(Self::from_normalised(labels, normalised))
    }

    /// Graph on nodes labelled `0..n`.
    pub fn with_index_labels(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        Self::new(index_labels(n), edges)
    }

    pub(crate) fn from_normalised(labels: Vec<String>, mut edges: Vec<(usize, usize)>) -> Self {
        edges.sort_unstable();
        edges.dedup();
        debug_assert!(edges.iter().all(|&(i, j)| i < j && j < labels.len()));
        Self { labels, edges }
    }

    pub fn n(&self) -> usize {
        self.labels.len()
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    /// Sorted edges, each with the smaller endpoint first.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        self.edges.binary_search(&(i.min(j), i.max(j))).is_ok()
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.n()];
        for &(i, j) in &self.edges {
            deg[i] += 1;
            deg[j] += 1;
        }
        deg
    }

    /// Per-node sorted neighbour lists.
    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.n()];
        for &(i, j) in &self.edges {
            adj[i].push(j);
            adj[j].push(i);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        adj
    }

    /// `m / (n choose 2)`, zero for graphs with fewer than two nodes.
    pub fn density(&self) -> f64 {
        let n = self.n() as f64;
        if self.n() < 2 {
            0.0
        } else {
            self.m() as f64 / (n * (n - 1.0) / 2.0)
        }
    }
}

pub(crate) fn index_labels(n: usize) -> Vec<String> {
    (0..n).map(|i| i.to_string()).collect()
}

/// Expected degree sequence: one nonnegative weight per node.
#[derive(Debug, Clone, PartialEq)]
pub struct WeightSeq<T> {
    weights: Vec<T>,
    total: T,
}

impl<T: Scalar> WeightSeq<T> {
    pub fn new(weights: Vec<T>) -> Result<Self> {
        for (i, w) in weights.iter().enumerate() {
            let finite = w.to_f64().is_some_and(f64::is_finite);
            if !(*w >= T::zero()) || !finite {
                return Err(Error::Domain(format!("weight {i} is {w}, expected a finite value >= 0")));
            }
        }
        let total = weights.iter().cloned().fold(T::zero(), |acc, w| acc + w);
        Ok(Self { weights, total })
    }

    pub fn weights(&self) -> &[T] {
        &self.weights
    }

    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    /// Sum of all weights.
    pub fn total(&self) -> T {
        self.total.clone()
    }

    /// Expected edge count, `total / 2`.
    pub fn edge_count(&self) -> T {
        self.total.clone() / T::from_usize_exact(2)
    }
}

/// Degree of every node, as weights.
pub fn degree_sequence<T: Scalar>(g: &Graph) -> WeightSeq<T> {
    let weights = g.degrees().into_iter().map(T::from_usize_exact).collect();
    WeightSeq::new(weights).expect("degrees are nonnegative")
}

pub fn read_edge_list<R: BufRead>(source: R) -> Result<Graph> {
    let mut index: HashMap<String, usize> = HashMap::new();
    let mut labels = Vec::new();
    let mut edges = Vec::new();
    let mut intern = |label: &str| -> usize {
        if let Some(&i) = index.get(label) {
            return i;
        }
        labels.push(label.to_owned());
        index.insert(label.to_owned(), labels.len() - 1);
        labels.len() - 1
    };

    for (lineno, line) in source.lines().enumerate() {
        let line = line?;
        let lineno = lineno + 1;
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let tokens: Vec<&str> = line.split_whitespace().collect();
        match tokens[..] {
            [a] => {
                intern(a);
            }
            [a, b] => {
                if a == b {
                    return Err(Error::SelfLoop { line: lineno, label: a.to_owned() });
                }
                let (i, j) = (intern(a), intern(b));
                edges.push((i.min(j), i.max(j)));
            }
            _ => {
                return Err(Error::Parse {
                    line: lineno,
                    msg: format!("expected 1 or 2 node labels, found {}", tokens.len()),
                })
            }
        }
    }
    Ok(Graph::from_normalised(labels, edges))
}

/// Writes `g` so that reading it back reproduces the same labels in the same
/// index order and the same edge set.
///
/// Edges are grouped by their larger endpoint, so node `v` first appears on
/// the line of its smallest neighbour. Nodes without a smaller neighbour are
/// introduced together with `v + 1` when that edge exists, otherwise on a
/// single-label line.
pub fn write_edge_list<W: Write>(g: &Graph, mut sink: W) -> Result<()> {
    let adj = g.adjacency();
    // edge (v - 1, v) was already written as an introducing line
    let mut paired = false;
    for (v, nbrs) in adj.iter().enumerate() {
        let split = nbrs.partition_point(|&u| u < v);
        let was_paired = std::mem::replace(&mut paired, false);
        if !was_paired && split == 0 {
            if nbrs.first() == Some(&(v + 1)) {
                writeln!(sink, "{} {}", g.label(v), g.label(v + 1))?;
                paired = true;
            } else {
                writeln!(sink, "{}", g.label(v))?;
            }
        }
        for &u in &nbrs[..split] {
            if was_paired && u + 1 == v {
                continue;
            }
            writeln!(sink, "{} {}", g.label(u), g.label(v))?;
        }
    }
    sink.flush()?;
    Ok(())
}
