//! Simple undirected graphs and their connectivity primitives.
//!
//! A [`Graph`] is generic over its vertex label so the same type carries both
//! spines (plain integer ids) and interlacements (twin-labeled vertices).
//! Neighbor sets are kept sorted, so every traversal is deterministic.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt::{self, Debug, Display, Write as _};
use std::hash::Hash;

use crate::error::{Error, Result};

pub type VertexId = u32;

/// A vertex label that can be read from and written to the edge-list format.
pub trait VertexLabel: Copy + Ord + Hash + Debug + Display {
    fn parse_label(token: &str) -> std::result::Result<Self, String>;
}

impl VertexLabel for VertexId {
    fn parse_label(token: &str) -> std::result::Result<Self, String> {
        if let Some(rest) = token.strip_prefix('-') {
            if !rest.is_empty() && rest.bytes().all(|b| b.is_ascii_digit()) {
                return Err(format!("negative id {token}"));
            }
        }
        token
            .parse::<VertexId>()
            .map_err(|_| format!("invalid vertex id {token:?}"))
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph<V = VertexId> {
    adjacency: BTreeMap<V, BTreeSet<V>>,
}

impl<V: Ord> Default for Graph<V> {
    fn default() -> Self {
        Self {
            adjacency: BTreeMap::new(),
        }
    }
}

impl<V: VertexLabel> Debug for Graph<V> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("vertices", &self.vertices().collect::<Vec<_>>())
            .field("edges", &self.edges())
            .finish()
    }
}

impl<V: VertexLabel> Graph<V> {
    pub fn new() -> Self {
        Self::default()
    }

    /// Builds a graph from explicit vertex and edge lists. Edge endpoints are
    /// added to the vertex set; duplicate edges collapse.
    pub fn from_edges(
        vertices: impl IntoIterator<Item = V>,
        edges: impl IntoIterator<Item = (V, V)>,
    ) -> Result<Self> {
        let mut g = Self::new();
        for v in vertices {
            g.add_vertex(v);
        }
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn add_vertex(&mut self, v: V) {
        self.adjacency.entry(v).or_default();
    }

    /// Adds the edge `{u, v}`. Returns `false` if it was already present.
    pub fn add_edge(&mut self, u: V, v: V) -> Result<bool> {
        if u == v {
            return Err(Error::SelfLoop(u.to_string()));
        }
        self.adjacency.entry(v).or_default().insert(u);
        Ok(self.adjacency.entry(u).or_default().insert(v))
    }

    pub fn contains_vertex(&self, v: V) -> bool {
        self.adjacency.contains_key(&v)
    }

    pub fn has_edge(&self, u: V, v: V) -> bool {
        self.adjacency.get(&u).is_some_and(|n| n.contains(&v))
    }

    /// Vertices in ascending order.
    pub fn vertices(&self) -> impl Iterator<Item = V> + '_ {
        self.adjacency.keys().copied()
    }

    /// Neighbors of `v` in ascending order (empty if `v` is absent).
    pub fn neighbors(&self, v: V) -> impl Iterator<Item = V> + '_ {
        self.adjacency.get(&v).into_iter().flatten().copied()
    }

    pub fn degree(&self, v: V) -> usize {
        self.adjacency.get(&v).map_or(0, BTreeSet::len)
    }

    pub fn vertex_count(&self) -> usize {
        self.adjacency.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.values().map(BTreeSet::len).sum::<usize>() / 2
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(V, V)> {
        self.adjacency
            .iter()
            .flat_map(|(&u, n)| n.range(u..).map(move |&v| (u, v)))
            .filter(|(u, v)| u != v)
            .collect()
    }

    pub fn isolated_vertices(&self) -> impl Iterator<Item = V> + '_ {
        self.adjacency
            .iter()
            .filter(|(_, n)| n.is_empty())
            .map(|(&v, _)| v)
    }

    /// The subgraph induced on `keep`.
    pub fn induced(&self, keep: &BTreeSet<V>) -> Self {
        let adjacency = self
            .adjacency
            .iter()
            .filter(|(v, _)| keep.contains(v))
            .map(|(&v, n)| (v, n.intersection(keep).copied().collect()))
            .collect();
        Self { adjacency }
    }

    /// Applies an injective relabeling.
    pub fn relabel<W: VertexLabel>(&self, mut f: impl FnMut(V) -> W) -> Graph<W> {
        let mut out = Graph::new();
        for (&v, n) in &self.adjacency {
            let fv = f(v);
            out.add_vertex(fv);
            for &u in n {
                out.adjacency.entry(fv).or_default().insert(f(u));
            }
        }
        out
    }

    /// Connected components, each sorted ascending, ordered by least vertex.
    pub fn components(&self) -> VertexPartition<V> {
        let mut seen = BTreeSet::new();
        let mut blocks = Vec::new();
        for start in self.vertices() {
            if !seen.insert(start) {
                continue;
            }
            let mut block = vec![start];
            let mut queue = VecDeque::from([start]);
            while let Some(v) = queue.pop_front() {
                for u in self.neighbors(v) {
                    if seen.insert(u) {
                        block.push(u);
                        queue.push_back(u);
                    }
                }
            }
            block.sort_unstable();
            blocks.push(block);
        }
        VertexPartition { blocks }
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// Cycle rank `|E| - |V| + c`.
    pub fn betti1(&self) -> usize {
        self.edge_count() + self.components().len() - self.vertex_count()
    }

    /// A maximal acyclic edge set, grown breadth-first from the least vertex
    /// of every component.
    pub fn spanning_forest(&self) -> BTreeSet<(V, V)> {
        let mut seen = BTreeSet::new();
        let mut forest = BTreeSet::new();
        for start in self.vertices() {
            if !seen.insert(start) {
                continue;
            }
            let mut queue = VecDeque::from([start]);
            while let Some(v) = queue.pop_front() {
                for u in self.neighbors(v) {
                    if seen.insert(u) {
                        forest.insert((v.min(u), v.max(u)));
                        queue.push_back(u);
                    }
                }
            }
        }
        forest
    }

    /// Serializes to the edge-list format: `v <id>` for isolated vertices,
    /// then one `<id> <id>` line per edge, all ascending.
    pub fn to_edge_list(&self) -> String {
        let mut out = String::new();
        for v in self.isolated_vertices() {
            let _ = writeln!(out, "v {v}");
        }
        for (u, v) in self.edges() {
            let _ = writeln!(out, "{u} {v}");
        }
        out
    }
}

/// Connected components (or any partition) of a vertex set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexPartition<V = VertexId> {
    blocks: Vec<Vec<V>>,
}

impl<V: Copy + Ord> VertexPartition<V> {
    pub fn blocks(&self) -> &[Vec<V>] {
        &self.blocks
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    /// Index of the block holding `v`.
    pub fn block_of(&self, v: V) -> Option<usize> {
        self.blocks.iter().position(|b| b.binary_search(&v).is_ok())
    }

    /// Block sizes in ascending order; a relabeling-invariant fingerprint.
    pub fn sorted_sizes(&self) -> Vec<usize> {
        let mut sizes: Vec<_> = self.blocks.iter().map(Vec::len).collect();
        sizes.sort_unstable();
        sizes
    }
}

/// Splits a line into tokens, dropping a trailing `#` comment.
pub(crate) fn content_tokens(line: &str) -> Vec<&str> {
    let content = line.split_once('#').map_or(line, |(c, _)| c);
    content.split_whitespace().collect()
}

/// Parses the edge-list format. Lines are `v <id>` (vertex) or `<id> <id>`
/// (edge); `#` starts a comment; duplicate edges collapse.
pub fn parse_edge_list<V: VertexLabel>(text: &str) -> Result<Graph<V>> {
    let mut g = Graph::new();
    for (index, line) in text.lines().enumerate() {
        let line_no = index + 1;
        let err = |message: String| Error::Parse {
            line: line_no,
            message,
        };
        match content_tokens(line).as_slice() {
            [] => {}
            ["v", id] => g.add_vertex(V::parse_label(id).map_err(err)?),
            [a, b] => {
                let u = V::parse_label(a).map_err(err)?;
                let v = V::parse_label(b).map_err(err)?;
                if u == v {
                    return Err(err(format!("self-loop on vertex {u}")));
                }
                g.add_edge(u, v)?;
            }
            other => {
                return Err(err(format!(
                    "expected `v <id>` or `<id> <id>`, found {} token(s)",
                    other.len()
                )))
            }
        }
    }
    Ok(g)
}
