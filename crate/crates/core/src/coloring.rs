//! Exact vertex chromatic numbers of small graphs, twin lifting of spine
//! colorings to the interlacement, and face colorings of spinal
//! quadrangulations by source.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use crate::embed::QuadEmbedding;
use crate::error::{Error, Result};
use crate::graph::{content_tokens, Graph, VertexId, VertexLabel};
use crate::interlacement::{Interlacement, TwinVertex};

/// Largest vertex count the exact solver accepts unless told otherwise.
pub const DEFAULT_SOLVER_CAP: usize = 24;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexColoring<V = VertexId> {
    colors: BTreeMap<V, usize>,
    palette: usize,
}

impl<V: VertexLabel> VertexColoring<V> {
    pub fn new(colors: BTreeMap<V, usize>, palette: usize) -> Result<Self> {
        if let Some((v, &c)) = colors.iter().find(|(_, &c)| c >= palette) {
            return Err(Error::ColorOutOfPalette {
                item: v.to_string(),
                color: c,
                palette,
            });
        }
        Ok(Self { colors, palette })
    }

    pub fn color(&self, v: V) -> Option<usize> {
        self.colors.get(&v).copied()
    }

    pub fn palette(&self) -> usize {
        self.palette
    }

    pub fn iter(&self) -> impl Iterator<Item = (V, usize)> + '_ {
        self.colors.iter().map(|(&v, &c)| (v, c))
    }

    /// Renumbers colors by first occurrence in ascending vertex order and
    /// shrinks the palette to the colors actually used.
    pub fn canonical(&self) -> Self {
        let mut renumber: BTreeMap<usize, usize> = BTreeMap::new();
        let colors = self
            .colors
            .iter()
            .map(|(&v, &c)| {
                let next = renumber.len();
                (v, *renumber.entry(c).or_insert(next))
            })
            .collect();
        Self {
            colors,
            palette: renumber.len(),
        }
    }

    /// Coloring file: `colors <k>` header, then `<vertex> <color>` lines.
    pub fn to_file(&self) -> String {
        let mut out = format!("colors {}\n", self.palette);
        for (v, c) in self.iter() {
            let _ = writeln!(out, "{v} {c}");
        }
        out
    }
}

/// Reads a coloring file whose tokens are vertex labels.
pub fn parse_vertex_coloring<V: VertexLabel>(text: &str) -> Result<VertexColoring<V>> {
    let (palette, entries) = parse_coloring_lines(text, V::parse_label)?;
    VertexColoring::new(entries.into_iter().collect(), palette)
}

fn parse_coloring_lines<T>(
    text: &str,
    parse: impl Fn(&str) -> std::result::Result<T, String>,
) -> Result<(usize, Vec<(T, usize)>)> {
    let mut palette = None;
    let mut entries = Vec::new();
    for (index, line) in text.lines().enumerate() {
        let err = |message: String| Error::Parse {
            line: index + 1,
            message,
        };
        let tokens = content_tokens(line);
        match (tokens.as_slice(), palette) {
            ([], _) => {}
            (["colors", k], None) => {
                palette = Some(
                    k.parse::<usize>()
                        .map_err(|_| err(format!("invalid palette size {k:?}")))?,
                );
            }
            (_, None) => return Err(err("expected header `colors <k>`".into())),
            ([item, color], Some(_)) => {
                let item = parse(item).map_err(err)?;
                let color = color
                    .parse::<usize>()
                    .map_err(|_| err(format!("invalid color {color:?}")))?;
                entries.push((item, color));
            }
            _ => return Err(err("expected `<token> <color>`".into())),
        }
    }
    let palette = palette.ok_or(Error::Parse {
        line: 1,
        message: "missing `colors <k>` header".into(),
    })?;
    Ok((palette, entries))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FaceColoring {
    colors: Vec<usize>,
    palette: usize,
}

impl FaceColoring {
    pub fn new(colors: Vec<usize>, palette: usize) -> Result<Self> {
        if let Some((i, &c)) = colors.iter().enumerate().find(|(_, &c)| c >= palette) {
            return Err(Error::ColorOutOfPalette {
                item: format!("face {i}"),
                color: c,
                palette,
            });
        }
        Ok(Self { colors, palette })
    }

    pub fn color(&self, face: usize) -> Option<usize> {
        self.colors.get(face).copied()
    }

    pub fn colors(&self) -> &[usize] {
        &self.colors
    }

    pub fn palette(&self) -> usize {
        self.palette
    }

    /// Number of distinct colors actually used.
    pub fn used(&self) -> usize {
        let mut seen = self.colors.clone();
        seen.sort_unstable();
        seen.dedup();
        seen.len()
    }

    /// Same layout as vertex colorings, with face indices as tokens.
    pub fn to_file(&self) -> String {
        let mut out = format!("colors {}\n", self.palette);
        for (i, c) in self.colors.iter().enumerate() {
            let _ = writeln!(out, "{i} {c}");
        }
        out
    }
}

pub fn parse_face_coloring(text: &str) -> Result<FaceColoring> {
    let (palette, mut entries) = parse_coloring_lines(text, |t| {
        t.parse::<usize>()
            .map_err(|_| format!("invalid face index {t:?}"))
    })?;
    entries.sort_unstable();
    for (expected, &(i, _)) in entries.iter().enumerate() {
        if i != expected {
            return Err(Error::MissingColor(format!("face {expected}")));
        }
    }
    FaceColoring::new(entries.into_iter().map(|(_, c)| c).collect(), palette)
}

/// Checks that every vertex is colored and no edge is monochromatic.
pub fn verify_proper_vertices<V: VertexLabel>(g: &Graph<V>, c: &VertexColoring<V>) -> Result<()> {
    for v in g.vertices() {
        if c.color(v).is_none() {
            return Err(Error::MissingColor(v.to_string()));
        }
    }
    for (u, v) in g.edges() {
        let cu = c.color(u).expect("checked above");
        if Some(cu) == c.color(v) {
            return Err(Error::ImproperColoring(u.to_string(), v.to_string(), cu));
        }
    }
    Ok(())
}

/// Checks that every face is colored and faces sharing an edge differ.
pub fn verify_proper_faces(q: &QuadEmbedding, c: &FaceColoring) -> Result<()> {
    if c.colors().len() < q.faces().len() {
        return Err(Error::MissingColor(format!("face {}", c.colors().len())));
    }
    for ((a, b), faces) in q.edge_sides() {
        for (i, &f) in faces.iter().enumerate() {
            for &g in &faces[i + 1..] {
                if f != g && c.colors()[f] == c.colors()[g] {
                    return Err(Error::ImproperColoring(
                        format!("face {f}"),
                        format!("face {g} (shared edge {a}-{b})"),
                        c.colors()[f],
                    ));
                }
            }
        }
    }
    Ok(())
}

/// Dense view of a graph for the search routines.
struct Dense<V> {
    labels: Vec<V>,
    adjacency: Vec<Vec<usize>>,
}

impl<V: VertexLabel> Dense<V> {
    fn new(g: &Graph<V>) -> Self {
        let labels: Vec<V> = g.vertices().collect();
        let adjacency = labels
            .iter()
            .map(|&v| {
                g.neighbors(v)
                    .map(|u| labels.binary_search(&u).expect("neighbor is a vertex"))
                    .collect()
            })
            .collect();
        Self { labels, adjacency }
    }

    fn len(&self) -> usize {
        self.labels.len()
    }

    /// Size of a clique grown greedily from each vertex; a lower bound on
    /// the chromatic number.
    fn greedy_clique(&self) -> usize {
        let n = self.len();
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&v| std::cmp::Reverse(self.adjacency[v].len()));
        let mut best = usize::from(n > 0);
        for &start in &order {
            let mut clique = vec![start];
            for &v in &order {
                if v != start && clique.iter().all(|&c| self.adjacency[c].contains(&v)) {
                    clique.push(v);
                }
            }
            best = best.max(clique.len());
        }
        best
    }

    fn saturation(&self, colors: &[Option<usize>], v: usize) -> usize {
        let mut seen: Vec<usize> = self.adjacency[v].iter().filter_map(|&u| colors[u]).collect();
        seen.sort_unstable();
        seen.dedup();
        seen.len()
    }

    /// Uncolored vertex of maximum saturation, ties by degree then index.
    fn next_vertex(&self, colors: &[Option<usize>]) -> Option<usize> {
        (0..self.len())
            .filter(|&v| colors[v].is_none())
            .max_by_key(|&v| {
                (
                    self.saturation(colors, v),
                    self.adjacency[v].len(),
                    std::cmp::Reverse(v),
                )
            })
    }

    fn dsatur_greedy(&self) -> Vec<usize> {
        let mut colors = vec![None; self.len()];
        while let Some(v) = self.next_vertex(&colors) {
            let c = (0..)
                .find(|c| self.adjacency[v].iter().all(|&u| colors[u] != Some(*c)))
                .expect("some color is free");
            colors[v] = Some(c);
        }
        colors.into_iter().map(|c| c.expect("all colored")).collect()
    }

    /// Backtracking DSATUR search for a coloring with at most `k` colors.
    /// New colors are opened in order, which removes palette symmetry.
    fn color_with(&self, k: usize) -> Option<Vec<usize>> {
        fn search<V: VertexLabel>(
            d: &Dense<V>,
            k: usize,
            colors: &mut Vec<Option<usize>>,
            used: usize,
        ) -> bool {
            let Some(v) = d.next_vertex(colors) else {
                return true;
            };
            for c in 0..k.min(used + 1) {
                if d.adjacency[v].iter().any(|&u| colors[u] == Some(c)) {
                    continue;
                }
                colors[v] = Some(c);
                if search(d, k, colors, used.max(c + 1)) {
                    return true;
                }
            }
            colors[v] = None;
            false
        }
        let mut colors = vec![None; self.len()];
        search(self, k, &mut colors, 0)
            .then(|| colors.into_iter().map(|c| c.expect("all colored")).collect())
    }

    fn to_coloring(&self, colors: &[usize]) -> VertexColoring<V> {
        let palette = colors.iter().max().map_or(0, |m| m + 1);
        VertexColoring {
            colors: self.labels.iter().copied().zip(colors.iter().copied()).collect(),
            palette,
        }
        .canonical()
    }
}

/// The vertex chromatic number of `g` with an optimal coloring as witness.
///
/// The search is exact: a greedy clique bounds it from below, DSATUR from
/// above, and each intermediate palette size is decided by backtracking.
/// Graphs with more than `cap` vertices are refused rather than estimated.
pub fn chromatic_number_exact<V: VertexLabel>(
    g: &Graph<V>,
    cap: usize,
) -> Result<(usize, VertexColoring<V>)> {
    if g.vertex_count() > cap {
        return Err(Error::CapExceeded {
            vertices: g.vertex_count(),
            cap,
        });
    }
    let dense = Dense::new(g);
    let upper = dense.dsatur_greedy();
    let upper_k = upper.iter().max().map_or(0, |m| m + 1);
    let lower_k = dense.greedy_clique();
    for k in lower_k..upper_k {
        if let Some(colors) = dense.color_with(k) {
            return Ok((k, dense.to_coloring(&colors)));
        }
    }
    Ok((upper_k, dense.to_coloring(&upper)))
}

/// Gives both twins of every spine vertex the spine vertex's color.
pub fn lift_coloring(
    il: &Interlacement,
    c: &VertexColoring,
) -> Result<VertexColoring<TwinVertex>> {
    verify_proper_vertices(il.spine(), c)?;
    let colors = il
        .graph()
        .vertices()
        .map(|t| (t, c.color(t.project()).expect("spine coloring is total")))
        .collect();
    VertexColoring::new(colors, c.palette())
}

/// Evidence that the interlacement has the same chromatic number as its
/// spine: an optimal spine coloring lifts to a proper coloring, and the
/// primed copy of the spine sits inside the interlacement.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChromaticEquality {
    pub spine_chromatic: usize,
    pub lifted: VertexColoring<TwinVertex>,
    pub lifted_proper: bool,
    pub contains_spine: bool,
}

impl ChromaticEquality {
    pub fn holds(&self) -> bool {
        self.lifted_proper && self.contains_spine && self.lifted.palette() == self.spine_chromatic
    }
}

pub fn chromatic_equality_check(il: &Interlacement, cap: usize) -> Result<ChromaticEquality> {
    let (chi, witness) = chromatic_number_exact(il.spine(), cap)?;
    let lifted = lift_coloring(il, &witness)?;
    let lifted_proper = verify_proper_vertices(il.graph(), &lifted).is_ok();
    let contains_spine = il.spine().edges().into_iter().all(|(u, v)| {
        il.graph()
            .has_edge(TwinVertex::primed(u), TwinVertex::primed(v))
    });
    Ok(ChromaticEquality {
        spine_chromatic: chi,
        lifted,
        lifted_proper,
        contains_spine,
    })
}

/// Colors every face with the color of its source vertex.
pub fn face_coloring_from_sources(q: &QuadEmbedding, c: &VertexColoring) -> Result<FaceColoring> {
    verify_proper_vertices(q.spine(), c)?;
    let colors = q
        .faces()
        .iter()
        .map(|f| {
            c.color(f.source)
                .ok_or_else(|| Error::MissingColor(f.source.to_string()))
        })
        .collect::<Result<Vec<_>>>()?;
    let fc = FaceColoring::new(colors, c.palette())?;
    verify_proper_faces(q, &fc).map_err(|e| Error::Verification(e.to_string()))?;
    Ok(fc)
}
