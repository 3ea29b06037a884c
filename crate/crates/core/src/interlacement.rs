//! The 2-fold interlacement: two twin copies of every spine vertex, each
//! spine edge `vu` replaced by the four edges `v'u'`, `v'u''`, `v''u'` and
//! `v''u''`, twins never adjacent. It is the lexicographic product of the
//! spine with the edgeless graph on two vertices; only this one product is
//! built here.

use std::fmt;

use crate::graph::{Graph, VertexId, VertexLabel};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum TwinCopy {
    /// `v'`, serialized as `<id>.0`.
    Primed,
    /// `v''`, serialized as `<id>.1`.
    DoublePrimed,
}

impl TwinCopy {
    pub fn index(self) -> u8 {
        match self {
            TwinCopy::Primed => 0,
            TwinCopy::DoublePrimed => 1,
        }
    }

    pub fn other(self) -> Self {
        match self {
            TwinCopy::Primed => TwinCopy::DoublePrimed,
            TwinCopy::DoublePrimed => TwinCopy::Primed,
        }
    }
}

/// One of the two copies of a spine vertex. Ordered by spine id, then copy.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TwinVertex {
    pub spine_id: VertexId,
    pub copy: TwinCopy,
}

impl TwinVertex {
    pub fn primed(spine_id: VertexId) -> Self {
        Self {
            spine_id,
            copy: TwinCopy::Primed,
        }
    }

    pub fn double_primed(spine_id: VertexId) -> Self {
        Self {
            spine_id,
            copy: TwinCopy::DoublePrimed,
        }
    }

    pub fn twin(self) -> Self {
        Self {
            spine_id: self.spine_id,
            copy: self.copy.other(),
        }
    }

    /// The spine vertex this twin was copied from.
    pub fn project(self) -> VertexId {
        self.spine_id
    }
}

impl fmt::Display for TwinVertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}.{}", self.spine_id, self.copy.index())
    }
}

impl VertexLabel for TwinVertex {
    fn parse_label(token: &str) -> Result<Self, String> {
        let (id, copy) = token
            .split_once('.')
            .ok_or_else(|| format!("expected twin token `<id>.0` or `<id>.1`, found {token:?}"))?;
        let spine_id = VertexId::parse_label(id)?;
        let copy = match copy {
            "0" => TwinCopy::Primed,
            "1" => TwinCopy::DoublePrimed,
            _ => return Err(format!("twin copy must be 0 or 1 in {token:?}")),
        };
        Ok(Self { spine_id, copy })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Interlacement {
    spine: Graph,
    graph: Graph<TwinVertex>,
}

impl Interlacement {
    pub fn spine(&self) -> &Graph {
        &self.spine
    }

    pub fn graph(&self) -> &Graph<TwinVertex> {
        &self.graph
    }
}

pub fn interlace(spine: &Graph) -> Interlacement {
    let mut graph = Graph::new();
    for v in spine.vertices() {
        graph.add_vertex(TwinVertex::primed(v));
        graph.add_vertex(TwinVertex::double_primed(v));
    }
    for (v, u) in spine.edges() {
        for a in [TwinVertex::primed(v), TwinVertex::double_primed(v)] {
            for b in [TwinVertex::primed(u), TwinVertex::double_primed(u)] {
                graph.add_edge(a, b).expect("spine edges join distinct vertices");
            }
        }
    }
    Interlacement {
        spine: spine.clone(),
        graph,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::parse_edge_list;

    fn complete(n: u32) -> Graph {
        Graph::from_edges(0..n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)))).unwrap()
    }

    #[test]
    fn k2_gives_four_cycle() {
        let il = interlace(&complete(2));
        let g = il.graph();
        assert_eq!(g.vertex_count(), 4);
        assert_eq!(g.edge_count(), 4);
        assert!(g.vertices().all(|v| g.degree(v) == 2));
        assert!(g.is_connected());
        assert!(!g.has_edge(TwinVertex::primed(0), TwinVertex::double_primed(0)));
    }

    #[test]
    fn k3_gives_octahedron() {
        let g = interlace(&complete(3)).graph().clone();
        assert_eq!(g.vertex_count(), 6);
        assert_eq!(g.edge_count(), 12);
        // K_{2,2,2}: every vertex misses exactly its twin.
        for v in g.vertices() {
            assert_eq!(g.degree(v), 4);
            let missing: Vec<_> = g.vertices().filter(|&u| u != v && !g.has_edge(u, v)).collect();
            assert_eq!(missing, vec![v.twin()]);
        }
    }

    #[test]
    fn complete_graphs_give_cocktail_party_graphs() {
        for n in 2..=6u32 {
            let g = interlace(&complete(n)).graph().clone();
            assert_eq!(g.vertex_count(), 2 * n as usize);
            assert_eq!(g.edge_count(), (2 * n * (n - 1)) as usize);
            let all: Vec<_> = g.vertices().collect();
            for &a in &all {
                for &b in &all {
                    let expect = a.spine_id != b.spine_id;
                    assert_eq!(g.has_edge(a, b), expect, "{a} {b}");
                }
            }
        }
    }

    #[test]
    fn projection() {
        assert_eq!(TwinVertex::primed(7).project(), 7);
        assert_eq!(TwinVertex::double_primed(7).project(), 7);
        let spine = Graph::from_edges([], [(0, 1), (1, 2), (2, 5)]).unwrap();
        let il = interlace(&spine);
        for (a, b) in il.graph().edges() {
            assert!(spine.has_edge(a.project(), b.project()));
        }
    }

    #[test]
    fn twin_tokens() {
        assert_eq!(TwinVertex::primed(12).to_string(), "12.0");
        assert_eq!(TwinVertex::parse_label("3.1"), Ok(TwinVertex::double_primed(3)));
        assert!(TwinVertex::parse_label("3.2").is_err());
        assert!(TwinVertex::parse_label("3").is_err());
        assert!(TwinVertex::parse_label("-3.0").is_err());

        let il = interlace(&complete(3));
        let text = il.graph().to_edge_list();
        assert_eq!(parse_edge_list::<TwinVertex>(&text).unwrap(), *il.graph());
    }
}
