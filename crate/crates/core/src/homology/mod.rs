//! Rational Betti numbers of abstract simplicial complexes of dimension at
//! most two.
//!
//! Simplices are stored as sorted vertex tuples; ascending order is the
//! positive orientation. Boundary matrices are indexed by the sorted simplex
//! lists and their ranks are computed exactly (see [`rank`]).

pub mod rank;

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::error::{Error, Result};
use crate::graph::{content_tokens, Graph, VertexId, VertexLabel};

pub use rank::SparseIntMatrix;

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SimplicialComplex {
    vertices: BTreeSet<VertexId>,
    edges: BTreeSet<[VertexId; 2]>,
    triangles: BTreeSet<[VertexId; 3]>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct BettiVector {
    pub b0: usize,
    pub b1: usize,
    pub b2: usize,
}

impl BettiVector {
    pub fn new(b0: usize, b1: usize, b2: usize) -> Self {
        Self { b0, b1, b2 }
    }

    /// Alternating sum `b0 - b1 + b2`.
    pub fn euler_characteristic(&self) -> i64 {
        self.b0 as i64 - self.b1 as i64 + self.b2 as i64
    }
}

impl fmt::Display for BettiVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.b0, self.b1, self.b2)
    }
}

/// Betti numbers of a chain complex `C2 -> C1 -> C0` from cell counts and
/// boundary ranks.
pub fn betti_from_ranks(cells: [usize; 3], rank_d1: usize, rank_d2: usize) -> BettiVector {
    BettiVector {
        b0: cells[0] - rank_d1,
        b1: cells[1] - rank_d1 - rank_d2,
        b2: cells[2] - rank_d2,
    }
}

impl SimplicialComplex {
    pub fn new() -> Self {
        Self::default()
    }

    /// Adds a simplex of dimension 0, 1 or 2 together with all its faces.
    pub fn add_simplex(&mut self, simplex: &[VertexId]) -> Result<()> {
        let mut s = simplex.to_vec();
        s.sort_unstable();
        if s.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidParameter(format!(
                "simplex {simplex:?} repeats a vertex"
            )));
        }
        match *s.as_slice() {
            [a] => {
                self.vertices.insert(a);
            }
            [a, b] => {
                self.vertices.extend([a, b]);
                self.edges.insert([a, b]);
            }
            [a, b, c] => {
                self.vertices.extend([a, b, c]);
                self.edges.extend([[a, b], [a, c], [b, c]]);
                self.triangles.insert([a, b, c]);
            }
            _ => {
                return Err(Error::InvalidParameter(format!(
                    "simplex {simplex:?} has dimension outside 0..=2"
                )))
            }
        }
        Ok(())
    }

    /// The graph as a 1-dimensional complex.
    pub fn from_graph(graph: &Graph) -> Self {
        Self {
            vertices: graph.vertices().collect(),
            edges: graph.edges().into_iter().map(|(u, v)| [u, v]).collect(),
            triangles: BTreeSet::new(),
        }
    }

    pub fn vertices(&self) -> &BTreeSet<VertexId> {
        &self.vertices
    }

    pub fn edges(&self) -> &BTreeSet<[VertexId; 2]> {
        &self.edges
    }

    pub fn triangles(&self) -> &BTreeSet<[VertexId; 3]> {
        &self.triangles
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// The 1-skeleton as a graph.
    pub fn one_skeleton(&self) -> Graph {
        Graph::from_edges(
            self.vertices.iter().copied(),
            self.edges.iter().map(|&[u, v]| (u, v)),
        )
        .expect("complex edges have distinct endpoints")
    }

    /// Matrix of the boundary map from k-simplices to (k-1)-simplices, one
    /// row per k-simplex.
    pub fn boundary_matrix(&self, k: usize) -> SparseIntMatrix {
        match k {
            1 => {
                let index = index_of(&self.vertices);
                let mut m = SparseIntMatrix::new(self.vertices.len());
                for [a, b] in &self.edges {
                    m.push_row([(index[a], -1), (index[b], 1)]);
                }
                m
            }
            2 => {
                let index = index_of(&self.edges);
                let mut m = SparseIntMatrix::new(self.edges.len());
                for &[a, b, c] in &self.triangles {
                    m.push_row([
                        (index[&[b, c]], 1),
                        (index[&[a, c]], -1),
                        (index[&[a, b]], 1),
                    ]);
                }
                m
            }
            _ => SparseIntMatrix::new(0),
        }
    }

    /// Rank of the k-th boundary operator over the rationals. Operators
    /// outside `1..=2` are zero on a complex of dimension at most two.
    pub fn boundary_rank(&self, k: usize) -> usize {
        self.boundary_matrix(k).rank()
    }

    pub fn betti_numbers(&self) -> BettiVector {
        betti_from_ranks(
            [self.vertices.len(), self.edges.len(), self.triangles.len()],
            self.boundary_rank(1),
            self.boundary_rank(2),
        )
    }

    /// `|V| - |E| + |T|`.
    pub fn euler_characteristic(&self) -> i64 {
        self.vertices.len() as i64 - self.edges.len() as i64 + self.triangles.len() as i64
    }

    pub fn euler_poincare_check(&self) -> EulerPoincare {
        EulerPoincare {
            from_counts: self.euler_characteristic(),
            betti: self.betti_numbers(),
        }
    }

    /// Serializes to the `.sc` format: maximal simplices only, ascending.
    pub fn to_sc(&self) -> String {
        let mut out = String::new();
        let covered_edges: BTreeSet<[VertexId; 2]> = self
            .triangles
            .iter()
            .flat_map(|&[a, b, c]| [[a, b], [a, c], [b, c]])
            .collect();
        let covered_vertices: BTreeSet<VertexId> = self.edges.iter().flatten().copied().collect();
        for v in self.vertices.difference(&covered_vertices) {
            out.push_str(&format!("{v}\n"));
        }
        for [a, b] in self.edges.difference(&covered_edges) {
            out.push_str(&format!("{a} {b}\n"));
        }
        for [a, b, c] in &self.triangles {
            out.push_str(&format!("{a} {b} {c}\n"));
        }
        out
    }
}

fn index_of<K: Ord + Clone>(items: &BTreeSet<K>) -> BTreeMap<K, usize> {
    items.iter().cloned().enumerate().map(|(i, k)| (k, i)).collect()
}

/// Both sides of the Euler-Poincaré identity for one complex.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EulerPoincare {
    pub from_counts: i64,
    pub betti: BettiVector,
}

impl EulerPoincare {
    pub fn holds(&self) -> bool {
        self.from_counts == self.betti.euler_characteristic()
    }
}

/// Parses the `.sc` format: one simplex (1 to 3 distinct ids) per line,
/// `#` comments, closure completed on load.
pub fn parse_complex(text: &str) -> Result<SimplicialComplex> {
    let mut complex = SimplicialComplex::new();
    for (index, line) in text.lines().enumerate() {
        let err = |message: String| Error::Parse {
            line: index + 1,
            message,
        };
        let tokens = content_tokens(line);
        if tokens.is_empty() {
            continue;
        }
        if tokens.len() > 3 {
            return Err(err(format!(
                "simplex of dimension {} exceeds 2",
                tokens.len() - 1
            )));
        }
        let ids = tokens
            .iter()
            .map(|t| VertexId::parse_label(t))
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(err)?;
        complex.add_simplex(&ids).map_err(|e| err(e.to_string()))?;
    }
    Ok(complex)
}
