//! Simple undirected graphs and their degree summaries.
//!
//! A [`Graph`] is immutable after construction: adjacency is stored both
//! as sorted neighbor lists (for sparse iteration) and as a hash set of
//! packed pairs (for O(1) membership queries). Self-edges are rejected
//! everywhere, and symmetry is enforced by construction.

use std::collections::{BTreeSet, HashMap, HashSet};
use std::fmt;
use std::path::Path;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum GraphError {
    #[error("self-loop at line {line}: node {node:?} connected to itself")]
    SelfLoop { line: usize, node: String },
    #[error("line {line}: expected two whitespace-separated tokens, got {got}")]
    BadLine { line: usize, got: usize },
    #[error("line {line}: token {token:?} is not a valid integer node id")]
    NonIntegerToken { line: usize, token: String },
    #[error("line {line}: node id {id} exceeds declared node count {n}")]
    IdOutOfRange { line: usize, id: usize, n: usize },
    #[error("declared node count {n} is smaller than the {got} distinct labels seen")]
    TooManyLabels { n: usize, got: usize },
    #[error("invalid node-count directive {directive:?}")]
    BadDirective { directive: String },
    #[error("node index {index} out of range for graph with {n} nodes")]
    NodeOutOfRange { index: usize, n: usize },
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

/// How edge-list tokens are mapped to node indices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum IdMode {
    /// Integer tokens are used verbatim as 0-based ids; anything else is
    /// treated as a label and mapped in first-appearance order.
    #[default]
    Auto,
    /// Tokens must parse as 0-based integer ids.
    Integer,
    /// Tokens are opaque labels mapped in first-appearance order.
    Label,
}

fn pack(i: usize, j: usize) -> u64 {
    let (lo, hi) = if i < j { (i, j) } else { (j, i) };
    ((lo as u64) << 32) | hi as u64
}

/// Simple undirected graph on nodes `0..n` with no self-edges.
#[derive(Clone)]
pub struct Graph {
    n: usize,
    adj: Vec<Vec<u32>>,
    edge_set: HashSet<u64>,
    labels: Option<Vec<String>>,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, m={})", self.n, self.edge_count())
    }
}

impl Graph {
    /// Builds a graph from unordered node pairs. Duplicate pairs and
    /// reversed duplicates collapse to a single edge; self-pairs are
    /// rejected.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut g = Graph {
            n,
            adj: vec![Vec::new(); n],
            edge_set: HashSet::with_capacity(edges.len()),
            labels: None,
        };
        for (line, &(i, j)) in edges.iter().enumerate() {
            if i == j {
                return Err(GraphError::SelfLoop {
                    line: line + 1,
                    node: i.to_string(),
                });
            }
            let bad = if i >= n { i } else { j };
            if i >= n || j >= n {
                return Err(GraphError::NodeOutOfRange { index: bad, n });
            }
            if g.edge_set.insert(pack(i, j)) {
                g.adj[i].push(j as u32);
                g.adj[j].push(i as u32);
            }
        }
        for nbrs in &mut g.adj {
            nbrs.sort_unstable();
        }
        Ok(g)
    }

    /// Parses an edge-list document: one edge per line as two
    /// whitespace-separated tokens, `#`-prefixed comment lines ignored,
    /// and an optional leading `n=<count>` directive fixing the node
    /// count.
    pub fn from_edge_list(text: &str, mode: IdMode) -> Result<Self, GraphError> {
        let mut declared_n: Option<usize> = None;
        let mut pairs: Vec<(usize, usize, usize)> = Vec::new(); // (i, j, line)
        let mut label_ids: HashMap<String, usize> = HashMap::new();
        let mut labels: Vec<String> = Vec::new();
        let mut max_id = 0usize;
        let mut integer_ids = !matches!(mode, IdMode::Label);
        let mut seen_data = false;

        for (idx, raw) in text.lines().enumerate() {
            let line = idx + 1;
            let trimmed = raw.trim();
            if trimmed.is_empty() || trimmed.starts_with('#') {
                continue;
            }
            if !seen_data && let Some(rest) = trimmed.strip_prefix("n=") {
                let n: usize = rest.trim().parse().map_err(|_| GraphError::BadDirective {
                    directive: trimmed.to_string(),
                })?;
                declared_n = Some(n);
                seen_data = true;
                continue;
            }
            seen_data = true;
            let tokens: Vec<&str> = trimmed.split_whitespace().collect();
            if tokens.len() != 2 {
                return Err(GraphError::BadLine {
                    line,
                    got: tokens.len(),
                });
            }
            if tokens[0] == tokens[1] {
                return Err(GraphError::SelfLoop {
                    line,
                    node: tokens[0].to_string(),
                });
            }
            if integer_ids {
                match (tokens[0].parse::<usize>(), tokens[1].parse::<usize>()) {
                    (Ok(i), Ok(j)) => {
                        max_id = max_id.max(i).max(j);
                        pairs.push((i, j, line));
                        continue;
                    }
                    _ if matches!(mode, IdMode::Integer) => {
                        let tok = if tokens[0].parse::<usize>().is_err() {
                            tokens[0]
                        } else {
                            tokens[1]
                        };
                        return Err(GraphError::NonIntegerToken {
                            line,
                            token: tok.to_string(),
                        });
                    }
                    _ => {
                        // Auto mode: fall back to labels, remapping what we
                        // have parsed so far.
                        integer_ids = false;
                        let prior = std::mem::take(&mut pairs);
                        for (i, j, l) in prior {
                            let a = intern(&mut label_ids, &mut labels, &i.to_string());
                            let b = intern(&mut label_ids, &mut labels, &j.to_string());
                            pairs.push((a, b, l));
                        }
                    }
                }
            }
            let a = intern(&mut label_ids, &mut labels, tokens[0]);
            let b = intern(&mut label_ids, &mut labels, tokens[1]);
            pairs.push((a, b, line));
        }

        let n = if integer_ids {
            let needed = if pairs.is_empty() { 0 } else { max_id + 1 };
            match declared_n {
                Some(n) => {
                    if needed > n {
                        let (i, j, line) = *pairs
                            .iter()
                            .find(|&&(i, j, _)| i >= n || j >= n)
                            .expect("some pair exceeds declared count");
                        return Err(GraphError::IdOutOfRange {
                            line,
                            id: i.max(j),
                            n,
                        });
                    }
                    n
                }
                None => needed,
            }
        } else {
            match declared_n {
                Some(n) => {
                    if labels.len() > n {
                        return Err(GraphError::TooManyLabels {
                            n,
                            got: labels.len(),
                        });
                    }
                    n
                }
                None => labels.len(),
            }
        };

        let edges: Vec<(usize, usize)> = pairs.iter().map(|&(i, j, _)| (i, j)).collect();
        let mut g = Self::from_edges(n, &edges)?;
        if !integer_ids {
            g.labels = Some(labels);
        }
        Ok(g)
    }

    pub fn from_edge_list_path(path: &Path, mode: IdMode) -> Result<Self, GraphError> {
        let text = std::fs::read_to_string(path)?;
        Self::from_edge_list(&text, mode)
    }

    pub fn node_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edge_set.len()
    }

    /// Adjacency query A(i,j); zero on the diagonal.
    #[inline]
    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        i != j && self.edge_set.contains(&pack(i, j))
    }

    /// Sorted neighbors of node `i`.
    #[inline]
    pub fn neighbors(&self, i: usize) -> &[u32] {
        &self.adj[i]
    }

    #[inline]
    pub fn degree(&self, i: usize) -> usize {
        self.adj[i].len()
    }

    /// Per-node degrees y with y_i = sum_j A(i,j).
    pub fn degrees(&self) -> Vec<usize> {
        self.adj.iter().map(Vec::len).collect()
    }

    /// Edges as `(i, j)` pairs with `i < j`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = self
            .edge_set
            .iter()
            .map(|&k| ((k >> 32) as usize, (k & 0xffff_ffff) as usize))
            .collect();
        out.sort_unstable();
        out
    }

    /// Node-label mapping when the graph was parsed from non-integer
    /// tokens: `labels()[id]` is the original token for node `id`.
    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    /// Average degree 2m/n.
    pub fn mean_degree(&self) -> f64 {
        if self.n == 0 {
            0.0
        } else {
            2.0 * self.edge_count() as f64 / self.n as f64
        }
    }

    /// Adjacency rows as bitmasks, for n <= 64 subset kernels.
    pub(crate) fn bitmask_rows(&self) -> Option<Vec<u64>> {
        if self.n > 64 {
            return None;
        }
        let mut rows = vec![0u64; self.n];
        for (i, nbrs) in self.adj.iter().enumerate() {
            for &j in nbrs {
                rows[i] |= 1u64 << j;
            }
        }
        Some(rows)
    }
}

fn intern(ids: &mut HashMap<String, usize>, labels: &mut Vec<String>, token: &str) -> usize {
    if let Some(&id) = ids.get(token) {
        return id;
    }
    let id = labels.len();
    ids.insert(token.to_string(), id);
    labels.push(token.to_string());
    id
}

/// Renders a graph back to edge-list text (used by tests and examples).
pub fn to_edge_list(g: &Graph) -> String {
    let mut out = format!("n={}\n", g.node_count());
    for (i, j) in g.edges() {
        out.push_str(&format!("{i} {j}\n"));
    }
    out
}

/// Complete graph on n nodes.
pub fn complete(n: usize) -> Graph {
    let mut edges = Vec::with_capacity(n * (n - 1) / 2);
    for i in 0..n {
        for j in (i + 1)..n {
            edges.push((i, j));
        }
    }
    Graph::from_edges(n, &edges).expect("complete graph is valid")
}

/// Path graph 0-1-...-(n-1).
pub fn path(n: usize) -> Graph {
    let edges: Vec<_> = (0..n.saturating_sub(1)).map(|i| (i, i + 1)).collect();
    Graph::from_edges(n, &edges).expect("path graph is valid")
}

/// Cycle graph on n >= 3 nodes.
pub fn cycle(n: usize) -> Graph {
    let mut edges: Vec<_> = (0..n - 1).map(|i| (i, i + 1)).collect();
    edges.push((n - 1, 0));
    Graph::from_edges(n, &edges).expect("cycle graph is valid")
}

/// Star with center 0 and n-1 leaves.
pub fn star(n: usize) -> Graph {
    let edges: Vec<_> = (1..n).map(|i| (0, i)).collect();
    Graph::from_edges(n, &edges).expect("star graph is valid")
}

/// Relabels nodes by a permutation: node i becomes perm(i).
pub fn relabel(g: &Graph, perm: &[usize]) -> Graph {
    assert_eq!(perm.len(), g.node_count());
    let check: BTreeSet<usize> = perm.iter().copied().collect();
    assert_eq!(check.len(), g.node_count(), "perm must be a permutation");
    let edges: Vec<(usize, usize)> = g.edges().iter().map(|&(i, j)| (perm[i], perm[j])).collect();
    Graph::from_edges(g.node_count(), &edges).expect("relabeling preserves validity")
}
