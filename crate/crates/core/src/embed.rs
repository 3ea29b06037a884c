//! Spinal quadrangulations: the interlacement of a spine embedded with every
//! face a quadrilateral.
//!
//! Each spine vertex `v` is a sphere carrying the twins `v'` and `v''`; its
//! rotation fixes the cyclic order of the tubes leaving it. Every tube is
//! attached with the same quarter-twist, which yields one face per
//! (vertex, rotation slot):
//!
//! ```text
//! (v', u_i', v'', u_{i+1}'')    source v, indices mod deg v
//! ```
//!
//! For `deg v = 1` this is the single face `(v', u', v'', u'')`. Faces are
//! stored with the primed twin of the source first and sorted by
//! `(source, corners)`, so the output is fully determined by the spine and
//! the rotation system.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::{content_tokens, Graph, VertexId, VertexLabel, VertexPartition};
use crate::interlacement::{interlace, Interlacement, TwinVertex};

/// Cyclic neighbor order at every spine vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RotationSystem {
    rotations: BTreeMap<VertexId, Vec<VertexId>>,
}

impl RotationSystem {
    pub fn from_map(rotations: BTreeMap<VertexId, Vec<VertexId>>) -> Self {
        Self { rotations }
    }

    pub fn rotation(&self, v: VertexId) -> Option<&[VertexId]> {
        self.rotations.get(&v).map(Vec::as_slice)
    }

    pub fn iter(&self) -> impl Iterator<Item = (VertexId, &[VertexId])> {
        self.rotations.iter().map(|(&v, r)| (v, r.as_slice()))
    }

    /// Checks that every spine vertex has a rotation that permutes exactly
    /// its neighbors, and that no other vertex has one.
    pub fn validate(&self, spine: &Graph) -> Result<()> {
        for v in spine.vertices() {
            let Some(rotation) = self.rotations.get(&v) else {
                return Err(Error::RotationMismatch { vertex: v });
            };
            let mut sorted = rotation.clone();
            sorted.sort_unstable();
            if !sorted.iter().copied().eq(spine.neighbors(v)) {
                return Err(Error::RotationMismatch { vertex: v });
            }
        }
        if let Some(&v) = self.rotations.keys().find(|&&v| !spine.contains_vertex(v)) {
            return Err(Error::RotationMismatch { vertex: v });
        }
        Ok(())
    }
}

/// Every vertex's neighbors in ascending order.
pub fn default_rotations(spine: &Graph) -> RotationSystem {
    RotationSystem {
        rotations: spine
            .vertices()
            .map(|v| (v, spine.neighbors(v).collect()))
            .collect(),
    }
}

/// Shuffles every rotation with a ChaCha8 stream seeded by `seed`, visiting
/// vertices in ascending order.
pub fn permute_rotations(rotations: &RotationSystem, seed: u64) -> RotationSystem {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    RotationSystem {
        rotations: rotations
            .rotations
            .iter()
            .map(|(&v, r)| {
                let mut r = r.clone();
                r.shuffle(&mut rng);
                (v, r)
            })
            .collect(),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct QuadFace {
    pub source: VertexId,
    pub corners: [TwinVertex; 4],
}

impl QuadFace {
    /// The four sides as `(from, to)` in boundary order.
    pub fn sides(&self) -> [(TwinVertex, TwinVertex); 4] {
        let c = self.corners;
        [(c[0], c[1]), (c[1], c[2]), (c[2], c[3]), (c[3], c[0])]
    }
}

pub(crate) fn undirected(a: TwinVertex, b: TwinVertex) -> (TwinVertex, TwinVertex) {
    (a.min(b), a.max(b))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct QuadHeader {
    pub vertices: usize,
    pub edges: usize,
    pub faces: usize,
    pub components: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuadEmbedding {
    interlacement: Interlacement,
    faces: Vec<QuadFace>,
    components: VertexPartition,
}

impl QuadEmbedding {
    /// Wraps an arbitrary face list. The spine is recovered by projecting
    /// face corners and sides; nothing is validated here, that is the job of
    /// the surface verifier.
    pub fn from_faces(mut faces: Vec<QuadFace>) -> Self {
        let mut spine = Graph::new();
        for face in &faces {
            spine.add_vertex(face.source);
            for (a, b) in face.sides() {
                spine.add_vertex(a.spine_id);
                spine.add_vertex(b.spine_id);
                if a.spine_id != b.spine_id {
                    spine
                        .add_edge(a.spine_id, b.spine_id)
                        .expect("distinct endpoints");
                }
            }
        }
        faces.sort();
        let components = spine.components();
        Self {
            interlacement: interlace(&spine),
            faces,
            components,
        }
    }

    pub fn interlacement(&self) -> &Interlacement {
        &self.interlacement
    }

    pub fn spine(&self) -> &Graph {
        self.interlacement.spine()
    }

    pub fn faces(&self) -> &[QuadFace] {
        &self.faces
    }

    /// Connected components of the spine.
    pub fn spine_components(&self) -> &VertexPartition {
        &self.components
    }

    /// Index of the spine component the face was built from.
    pub fn face_component(&self, face: usize) -> Option<usize> {
        self.components.block_of(self.faces.get(face)?.source)
    }

    /// Faces meeting each undirected edge, keyed by `(min, max)`.
    pub fn edge_sides(&self) -> BTreeMap<(TwinVertex, TwinVertex), Vec<usize>> {
        let mut sides: BTreeMap<_, Vec<usize>> = BTreeMap::new();
        for (i, face) in self.faces.iter().enumerate() {
            for (a, b) in face.sides() {
                sides.entry(undirected(a, b)).or_default().push(i);
            }
        }
        sides
    }

    pub fn header(&self) -> QuadHeader {
        QuadHeader {
            vertices: self.interlacement.graph().vertex_count(),
            edges: self.interlacement.graph().edge_count(),
            faces: self.faces.len(),
            components: self.components.len(),
        }
    }

    pub fn to_quad_file(&self) -> String {
        let h = self.header();
        let mut out = format!(
            "quad {} {} {} {}\n",
            h.vertices, h.edges, h.faces, h.components
        );
        for f in &self.faces {
            let [a, b, c, d] = f.corners;
            let _ = writeln!(out, "{a} {b} {c} {d} src={}", f.source);
        }
        out
    }
}

/// Builds the spinal quadrangulation of `spine` with the given rotations.
pub fn quadrangulate(spine: &Graph, rotations: &RotationSystem) -> Result<QuadEmbedding> {
    if let Some(v) = spine.isolated_vertices().next() {
        return Err(Error::IsolatedVertex(v));
    }
    rotations.validate(spine)?;

    let mut faces = Vec::with_capacity(2 * spine.edge_count());
    for (v, rotation) in rotations.iter() {
        let d = rotation.len();
        for i in 0..d {
            faces.push(QuadFace {
                source: v,
                corners: [
                    TwinVertex::primed(v),
                    TwinVertex::primed(rotation[i]),
                    TwinVertex::double_primed(v),
                    TwinVertex::double_primed(rotation[(i + 1) % d]),
                ],
            });
        }
    }
    faces.sort();
    Ok(QuadEmbedding {
        interlacement: interlace(spine),
        faces,
        components: spine.components(),
    })
}

/// A `.quad` file as read from disk: the embedding plus the header it claimed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParsedQuad {
    pub embedding: QuadEmbedding,
    pub header: QuadHeader,
}

impl ParsedQuad {
    pub fn header_matches(&self) -> bool {
        self.header == self.embedding.header()
    }
}

pub fn parse_quad(text: &str) -> Result<ParsedQuad> {
    let mut header = None;
    let mut faces = Vec::new();
    for (index, line) in text.lines().enumerate() {
        let err = |message: String| Error::Parse {
            line: index + 1,
            message,
        };
        let tokens = content_tokens(line);
        if tokens.is_empty() {
            continue;
        }
        if header.is_none() {
            let ["quad", v, e, f, c] = tokens.as_slice() else {
                return Err(err("expected header `quad <V> <E> <F> <components>`".into()));
            };
            let num = |t: &str| {
                t.parse::<usize>()
                    .map_err(|_| err(format!("invalid count {t:?} in header")))
            };
            header = Some(QuadHeader {
                vertices: num(v)?,
                edges: num(e)?,
                faces: num(f)?,
                components: num(c)?,
            });
            continue;
        }
        let [a, b, c, d, src] = tokens.as_slice() else {
            return Err(err(format!(
                "expected four corners and `src=<id>`, found {} token(s)",
                tokens.len()
            )));
        };
        let source = src
            .strip_prefix("src=")
            .ok_or_else(|| err(format!("expected `src=<id>`, found {src:?}")))?;
        let source = VertexId::parse_label(source).map_err(err)?;
        let mut corners = [TwinVertex::primed(0); 4];
        for (slot, token) in corners.iter_mut().zip([a, b, c, d]) {
            *slot = TwinVertex::parse_label(token).map_err(err)?;
        }
        faces.push(QuadFace { source, corners });
    }
    let header = header.ok_or(Error::Parse {
        line: text.lines().count().max(1),
        message: "missing `quad` header".into(),
    })?;
    Ok(ParsedQuad {
        embedding: QuadEmbedding::from_faces(faces),
        header,
    })
}
