//! Certifies that a quadrilateral face list is a closed orientable surface
//! and classifies it by components and genus.
//!
//! Nothing about the construction is trusted: faces, edge multiplicities,
//! vertex links and orientations are all re-derived from the face list.
//! The thickening identities relating the surface to the Betti numbers of
//! the spine are checked on top of the resulting classification.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt::Write as _;

use crate::embed::{default_rotations, quadrangulate, undirected, QuadEmbedding, RotationSystem};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::homology::{betti_from_ranks, BettiVector, SimplicialComplex, SparseIntMatrix};
use crate::interlacement::TwinVertex;

const MAX_ISSUES: usize = 16;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComponentReport {
    pub vertices: usize,
    pub edges: usize,
    pub faces: usize,
    pub euler_characteristic: i64,
    pub closed: bool,
    pub orientable: bool,
    /// Present only for closed orientable components.
    pub genus: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SurfaceReport {
    /// Every face is a 4-cycle of distinct, pairwise adjacent corners.
    pub faces_simple: bool,
    /// Corners 0 and 2 of every face are the twins of its source.
    pub sources_consistent: bool,
    /// Every edge carries exactly two face sides.
    pub edges_two_sided: bool,
    /// Every vertex link is one closed cycle.
    pub links_cyclic: bool,
    pub orientable: bool,
    pub components: Vec<ComponentReport>,
    /// Human-readable descriptions of the first failures found.
    pub issues: Vec<String>,
}

impl SurfaceReport {
    /// Number of surface components.
    pub fn comp(&self) -> usize {
        self.components.len()
    }

    /// Total number of handles, if every component has a genus.
    pub fn hand(&self) -> Option<usize> {
        self.components.iter().map(|c| c.genus).sum()
    }

    pub fn closed(&self) -> bool {
        self.components.iter().all(|c| c.closed)
    }

    pub fn passed(&self) -> bool {
        self.faces_simple
            && self.sources_consistent
            && self.edges_two_sided
            && self.links_cyclic
            && self.orientable
            && self.closed()
            && self.hand().is_some()
    }

    /// Line-oriented `key=value` rendering of every verdict and component.
    /// The overall status is left to the caller, which may fold in checks of
    /// its own.
    pub fn to_key_values(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "faces_simple={}", self.faces_simple);
        let _ = writeln!(out, "sources_consistent={}", self.sources_consistent);
        let _ = writeln!(out, "edges_two_sided={}", self.edges_two_sided);
        let _ = writeln!(out, "links_cyclic={}", self.links_cyclic);
        let _ = writeln!(out, "closed={}", self.closed());
        let _ = writeln!(out, "orientable={}", self.orientable);
        let _ = writeln!(out, "comp={}", self.comp());
        match self.hand() {
            Some(h) => {
                let _ = writeln!(out, "hand={h}");
            }
            None => out.push_str("hand=none\n"),
        }
        for (i, c) in self.components.iter().enumerate() {
            let genus = c.genus.map_or("none".to_string(), |g| g.to_string());
            let _ = writeln!(
                out,
                "component.{i}=vertices:{} edges:{} faces:{} euler:{} closed:{} orientable:{} genus:{genus}",
                c.vertices, c.edges, c.faces, c.euler_characteristic, c.closed, c.orientable
            );
        }
        for issue in &self.issues {
            let _ = writeln!(out, "issue={issue}");
        }
        out
    }
}

struct Issues(Vec<String>);

impl Issues {
    fn push(&mut self, issue: String) {
        if self.0.len() < MAX_ISSUES {
            self.0.push(issue);
        }
    }
}

/// Union-find over vertex indices.
struct Dsu(Vec<usize>);

impl Dsu {
    fn find(&mut self, x: usize) -> usize {
        let mut root = x;
        while self.0[root] != root {
            root = self.0[root];
        }
        let mut x = x;
        while self.0[x] != root {
            let next = self.0[x];
            self.0[x] = root;
            x = next;
        }
        root
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.0[ra.max(rb)] = ra.min(rb);
        }
    }
}

pub fn verify_surface(q: &QuadEmbedding) -> SurfaceReport {
    let graph = q.interlacement().graph();
    let faces = q.faces();
    let mut issues = Issues(Vec::new());

    let mut vertices: BTreeSet<TwinVertex> = graph.vertices().collect();
    vertices.extend(faces.iter().flat_map(|f| f.corners));
    let vertices: Vec<TwinVertex> = vertices.into_iter().collect();
    let index = |v: TwinVertex| vertices.binary_search(&v).expect("collected above");

    // (a) simple 4-cycles, and source bookkeeping
    let mut faces_simple = true;
    let mut sources_consistent = true;
    for (i, f) in faces.iter().enumerate() {
        let distinct: BTreeSet<_> = f.corners.iter().collect();
        if distinct.len() != 4 {
            faces_simple = false;
            issues.push(format!("face {i} repeats a corner"));
        }
        for (a, b) in f.sides() {
            if !graph.has_edge(a, b) {
                faces_simple = false;
                issues.push(format!("face {i} side {a}-{b} is not an interlacement edge"));
            }
        }
        let [c0, _, c2, _] = f.corners;
        let twins = BTreeSet::from([TwinVertex::primed(f.source), TwinVertex::double_primed(f.source)]);
        if BTreeSet::from([c0, c2]) != twins {
            sources_consistent = false;
            issues.push(format!("face {i} does not have both twins of source {} opposite", f.source));
        }
    }

    // (b) two sides per edge
    let mut sides: BTreeMap<(TwinVertex, TwinVertex), Vec<(usize, bool)>> = BTreeMap::new();
    for (i, f) in faces.iter().enumerate() {
        for (a, b) in f.sides() {
            sides.entry(undirected(a, b)).or_default().push((i, a < b));
        }
    }
    for (u, v) in graph.edges() {
        sides.entry((u, v)).or_default();
    }
    let mut edges_two_sided = true;
    let mut bad_edge_vertices = BTreeSet::new();
    for (&(u, v), s) in &sides {
        if s.len() != 2 {
            edges_two_sided = false;
            bad_edge_vertices.extend([u, v]);
            issues.push(format!("edge {u}-{v} meets {} face side(s)", s.len()));
        }
    }

    // (c) vertex links
    let mut link_edges: BTreeMap<TwinVertex, Vec<(TwinVertex, TwinVertex)>> =
        vertices.iter().map(|&v| (v, Vec::new())).collect();
    for f in faces {
        let c = f.corners;
        for k in 0..4 {
            link_edges
                .get_mut(&c[k])
                .expect("corner collected")
                .push((c[(k + 3) % 4], c[(k + 1) % 4]));
        }
    }
    let mut bad_links = BTreeSet::new();
    for (&v, edges) in &link_edges {
        if !is_single_cycle(edges) {
            bad_links.insert(v);
            issues.push(format!("link of {v} is not a single closed cycle"));
        }
    }
    let links_cyclic = bad_links.is_empty();

    // components over faces and edges
    let mut dsu = Dsu((0..vertices.len()).collect());
    for &(u, v) in sides.keys() {
        dsu.union(index(u), index(v));
    }
    let mut roots: BTreeMap<usize, usize> = BTreeMap::new();
    let component_of: Vec<usize> = (0..vertices.len())
        .map(|i| {
            let r = dsu.find(i);
            let next = roots.len();
            *roots.entry(r).or_insert(next)
        })
        .collect();
    let count = roots.len();

    // (d) orientation propagation per component
    let mut face_sides: Vec<Vec<(TwinVertex, TwinVertex)>> = vec![Vec::new(); faces.len()];
    for (&e, s) in &sides {
        for &(f, _) in s {
            face_sides[f].push(e);
        }
    }
    let mut orientation: Vec<Option<bool>> = vec![None; faces.len()];
    let mut non_orientable = vec![false; count];
    for start in 0..faces.len() {
        if orientation[start].is_some() {
            continue;
        }
        orientation[start] = Some(false);
        let comp = component_of[index(faces[start].corners[0])];
        let mut queue = VecDeque::from([start]);
        while let Some(f) = queue.pop_front() {
            for e in &face_sides[f] {
                let s = &sides[e];
                if s.len() > 2 {
                    non_orientable[comp] = true;
                    continue;
                }
                if s.len() < 2 {
                    continue;
                }
                let (this, other) = if s[0].0 == f { (s[0], s[1]) } else { (s[1], s[0]) };
                let this_dir = this.1 ^ orientation[this.0].expect("visited");
                let want = !this_dir ^ other.1;
                match orientation[other.0] {
                    None => {
                        orientation[other.0] = Some(want);
                        queue.push_back(other.0);
                    }
                    Some(flip) if flip != want => non_orientable[comp] = true,
                    Some(_) => {}
                }
            }
        }
    }
    if let Some(c) = non_orientable.iter().position(|&b| b) {
        issues.push(format!("component {c} admits no coherent orientation"));
    }

    let mut components: Vec<ComponentReport> = (0..count)
        .map(|_| ComponentReport {
            vertices: 0,
            edges: 0,
            faces: 0,
            euler_characteristic: 0,
            closed: true,
            orientable: true,
            genus: None,
        })
        .collect();
    for (i, &v) in vertices.iter().enumerate() {
        let c = &mut components[component_of[i]];
        c.vertices += 1;
        if bad_links.contains(&v) || bad_edge_vertices.contains(&v) {
            c.closed = false;
        }
    }
    for &(u, _) in sides.keys() {
        components[component_of[index(u)]].edges += 1;
    }
    let mut simple_by_component = vec![true; count];
    for f in faces {
        let c = component_of[index(f.corners[0])];
        components[c].faces += 1;
        let distinct: BTreeSet<_> = f.corners.iter().collect();
        if distinct.len() != 4 || f.sides().iter().any(|&(a, b)| !graph.has_edge(a, b)) {
            simple_by_component[c] = false;
        }
    }
    for (i, c) in components.iter_mut().enumerate() {
        c.closed &= simple_by_component[i];
        c.orientable = !non_orientable[i];
        c.euler_characteristic = c.vertices as i64 - c.edges as i64 + c.faces as i64;
        let chi = c.euler_characteristic;
        if c.closed && c.orientable && chi <= 2 && chi % 2 == 0 {
            c.genus = Some(((2 - chi) / 2) as usize);
        }
    }

    SurfaceReport {
        faces_simple,
        sources_consistent,
        edges_two_sided,
        links_cyclic,
        orientable: !non_orientable.iter().any(|&b| b),
        components,
        issues: issues.0,
    }
}

/// True when the multigraph given by `edges` is one closed cycle: nonempty,
/// every vertex of degree two, connected. A pair of parallel edges (bigon)
/// qualifies.
fn is_single_cycle(edges: &[(TwinVertex, TwinVertex)]) -> bool {
    if edges.is_empty() {
        return false;
    }
    let mut adjacency: BTreeMap<TwinVertex, Vec<TwinVertex>> = BTreeMap::new();
    for &(a, b) in edges {
        adjacency.entry(a).or_default().push(b);
        adjacency.entry(b).or_default().push(a);
    }
    if adjacency.values().any(|n| n.len() != 2) {
        return false;
    }
    let start = *adjacency.keys().next().expect("nonempty");
    let mut seen = BTreeSet::from([start]);
    let mut stack = vec![start];
    while let Some(v) = stack.pop() {
        for &u in &adjacency[&v] {
            if seen.insert(u) {
                stack.push(u);
            }
        }
    }
    seen.len() == adjacency.len()
}

/// Rational Betti numbers of the face complex, computed as cellular
/// homology with each quadrilateral a 2-cell attached along its boundary.
pub fn surface_betti(q: &QuadEmbedding) -> BettiVector {
    let mut vertices: BTreeSet<TwinVertex> = q.interlacement().graph().vertices().collect();
    let mut edges: BTreeSet<(TwinVertex, TwinVertex)> =
        q.interlacement().graph().edges().into_iter().collect();
    for f in q.faces() {
        vertices.extend(f.corners);
        edges.extend(f.sides().map(|(a, b)| undirected(a, b)));
    }
    let vertex_index: BTreeMap<_, _> = vertices.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let edge_index: BTreeMap<_, _> = edges.iter().enumerate().map(|(i, &e)| (e, i)).collect();

    let mut d1 = SparseIntMatrix::new(vertices.len());
    for &(u, v) in &edges {
        d1.push_row([(vertex_index[&u], -1), (vertex_index[&v], 1)]);
    }
    let mut d2 = SparseIntMatrix::new(edges.len());
    for f in q.faces() {
        d2.push_row(
            f.sides()
                .map(|(a, b)| (edge_index[&undirected(a, b)], if a < b { 1 } else { -1 })),
        );
    }
    betti_from_ranks([vertices.len(), edges.len(), q.faces().len()], d1.rank(), d2.rank())
}

/// Components and handles of the thickened spine, read off its verified
/// spinal quadrangulation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Thickening {
    pub comp: usize,
    pub hand: usize,
    pub embedding: QuadEmbedding,
    pub report: SurfaceReport,
}

pub fn thickening_report(spine: &Graph) -> Result<Thickening> {
    thickening_report_with(spine, &default_rotations(spine))
}

pub fn thickening_report_with(spine: &Graph, rotations: &RotationSystem) -> Result<Thickening> {
    let embedding = quadrangulate(spine, rotations)?;
    let report = verify_surface(&embedding);
    if !report.passed() {
        return Err(Error::Verification(format!(
            "spinal quadrangulation is not a closed orientable surface: {}",
            report.issues.join("; ")
        )));
    }
    Ok(Thickening {
        comp: report.comp(),
        hand: report.hand().expect("passed reports carry a genus"),
        embedding,
        report,
    })
}

/// `comp = b0 + b2` and `hand = b1` for a graph spine.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ComponentHandleCheck {
    pub comp: usize,
    pub hand: usize,
    pub spine_betti: BettiVector,
}

impl ComponentHandleCheck {
    pub fn holds(&self) -> bool {
        self.comp == self.spine_betti.b0 + self.spine_betti.b2 && self.hand == self.spine_betti.b1
    }
}

pub fn check_lemma21(spine: &Graph) -> Result<ComponentHandleCheck> {
    let t = thickening_report(spine)?;
    Ok(ComponentHandleCheck {
        comp: t.comp,
        hand: t.hand,
        spine_betti: SimplicialComplex::from_graph(spine).betti_numbers(),
    })
}

/// `b_k(surface) = b_k(spine) + b_{2-k}(spine)` for k = 0, 1, 2, with the
/// surface side computed two ways: from the classification and from the
/// cellular homology of the face complex.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BoundaryBettiCheck {
    pub from_classification: BettiVector,
    pub from_homology: BettiVector,
    pub spine_betti: BettiVector,
}

impl BoundaryBettiCheck {
    pub fn expected(&self) -> BettiVector {
        let b = self.spine_betti;
        BettiVector::new(b.b0 + b.b2, 2 * b.b1, b.b2 + b.b0)
    }

    pub fn holds(&self) -> bool {
        self.from_classification == self.expected() && self.from_homology == self.expected()
    }
}

pub fn check_remark22(spine: &Graph) -> Result<BoundaryBettiCheck> {
    let t = thickening_report(spine)?;
    Ok(BoundaryBettiCheck {
        from_classification: BettiVector::new(t.comp, 2 * t.hand, t.comp),
        from_homology: surface_betti(&t.embedding),
        spine_betti: SimplicialComplex::from_graph(spine).betti_numbers(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::embed::{permute_rotations, QuadFace};

    fn complete(ids: &[u32]) -> Graph {
        let mut g = Graph::new();
        for (i, &u) in ids.iter().enumerate() {
            for &v in &ids[i + 1..] {
                g.add_edge(u, v).unwrap();
            }
        }
        g
    }

    fn embed(g: &Graph) -> QuadEmbedding {
        quadrangulate(g, &default_rotations(g)).unwrap()
    }

    #[test]
    fn octahedral_torus() {
        let r = verify_surface(&embed(&complete(&[1, 2, 3])));
        assert!(r.passed(), "{}", r.to_key_values());
        assert_eq!(r.comp(), 1);
        assert_eq!(r.hand(), Some(1));
        let c = &r.components[0];
        assert_eq!((c.vertices, c.edges, c.faces, c.euler_characteristic), (6, 12, 6, 0));
    }

    #[test]
    fn k2_is_a_sphere() {
        let r = verify_surface(&embed(&complete(&[0, 1])));
        assert!(r.passed());
        assert_eq!(r.components[0].euler_characteristic, 2);
        assert_eq!(r.hand(), Some(0));
    }

    #[test]
    fn path_is_a_sphere_with_bigon_links() {
        let path = Graph::from_edges([], [(0, 1), (1, 2)]).unwrap();
        let r = verify_surface(&embed(&path));
        assert!(r.passed(), "{}", r.to_key_values());
        assert_eq!(r.components[0].euler_characteristic, 2);
    }

    #[test]
    fn deleting_a_face_opens_the_surface() {
        let q = embed(&complete(&[1, 2, 3]));
        let mut faces = q.faces().to_vec();
        faces.remove(3);
        let r = verify_surface(&QuadEmbedding::from_faces(faces));
        assert!(!r.edges_two_sided);
        assert!(!r.closed());
        assert_eq!(r.hand(), None);
        assert!(!r.passed());
    }

    #[test]
    fn duplicating_a_face_breaks_two_sidedness() {
        let q = embed(&complete(&[0, 1, 2, 3]));
        let mut faces = q.faces().to_vec();
        faces.push(faces[0]);
        let r = verify_surface(&QuadEmbedding::from_faces(faces));
        assert!(!r.edges_two_sided);
        assert!(!r.orientable);
        assert!(!r.passed());
    }

    #[test]
    fn flipping_a_twin_is_detected() {
        let q = embed(&complete(&[0, 1, 2, 3]));
        let mut faces = q.faces().to_vec();
        faces[0].corners[1] = faces[0].corners[1].twin();
        let r = verify_surface(&QuadEmbedding::from_faces(faces));
        assert!(!r.passed());
        assert!(!r.edges_two_sided);
    }

    #[test]
    fn reversed_face_is_absorbed_by_propagation() {
        // Reversing a face keeps the same undirected complex; propagation
        // absorbs it, so the verdict is unchanged.
        let q = embed(&complete(&[0, 1, 2]));
        let mut faces = q.faces().to_vec();
        faces[2].corners.reverse();
        faces[2].corners.rotate_right(1);
        let r = verify_surface(&QuadEmbedding::from_faces(faces));
        assert!(r.orientable);
        assert!(r.passed(), "{}", r.to_key_values());
    }

    #[test]
    fn non_orientable_quadrangulation_is_rejected() {
        // K_4 on vertices 0..3 with one twisted band: the standard
        // orientable torus quadrangulation of the 4x4 grid versus the Klein
        // bottle obtained by gluing one pair of sides with a flip.
        let n = 4u32;
        let id = |i: u32, j: u32| i * n + j;
        let mut torus = Vec::new();
        let mut klein = Vec::new();
        for i in 0..n {
            for j in 0..n {
                let (i1, j1) = ((i + 1) % n, (j + 1) % n);
                torus.push([id(i, j), id(i, j1), id(i1, j1), id(i1, j)]);
                let wrap = |a: u32, b: u32| if i + 1 == n { id(0, (n - b) % n) } else { id(a, b) };
                klein.push([id(i, j), id(i, j1), wrap(i1, j1), wrap(i1, j)]);
            }
        }
        let to_embedding = |quads: &[[u32; 4]]| {
            // Grid vertices become twins of a fake source; verification of
            // orientability does not depend on labels beyond adjacency.
            let faces = quads
                .iter()
                .map(|q| QuadFace {
                    source: q[0] / 2,
                    corners: q.map(|x| TwinVertex {
                        spine_id: x / 2,
                        copy: if x % 2 == 0 {
                            crate::interlacement::TwinCopy::Primed
                        } else {
                            crate::interlacement::TwinCopy::DoublePrimed
                        },
                    }),
                })
                .collect();
            QuadEmbedding::from_faces(faces)
        };
        let torus_report = verify_surface(&to_embedding(&torus));
        let klein_report = verify_surface(&to_embedding(&klein));
        assert!(torus_report.orientable);
        assert!(!klein_report.orientable);
        assert_eq!(klein_report.hand(), None);
    }

    #[test]
    fn pinched_vertex_fails_link_check() {
        // Two octahedral tori sharing the single vertex 0.0.
        let mut faces: Vec<QuadFace> = embed(&complete(&[0, 1, 2])).faces().to_vec();
        let pinched = TwinVertex::primed(0);
        faces.extend(embed(&complete(&[3, 4, 5])).faces().iter().map(|f| QuadFace {
            source: f.source,
            corners: f.corners.map(|c| if c == TwinVertex::primed(3) { pinched } else { c }),
        }));
        let r = verify_surface(&QuadEmbedding::from_faces(faces));
        assert!(!r.links_cyclic);
        assert!(r.issues.iter().any(|i| i.contains("link of 0.0")));
        assert!(!r.passed());
    }

    #[test]
    fn thickening_examples() {
        let tree = Graph::from_edges([], [(0, 1), (1, 2), (1, 3), (3, 4)]).unwrap();
        let t = thickening_report(&tree).unwrap();
        assert_eq!((t.comp, t.hand), (1, 0));

        let t = thickening_report(&complete(&[0, 1, 2, 3])).unwrap();
        assert_eq!((t.comp, t.hand), (1, 3));

        let mut g = complete(&[0, 1, 2]);
        g.add_edge(5, 6).unwrap();
        let t = thickening_report(&g).unwrap();
        assert_eq!((t.comp, t.hand), (2, 1));

        let mut isolated = complete(&[0, 1]);
        isolated.add_vertex(3);
        assert_eq!(thickening_report(&isolated).unwrap_err(), Error::IsolatedVertex(3));
    }

    #[test]
    fn component_handle_examples() {
        let k4 = check_lemma21(&complete(&[0, 1, 2, 3])).unwrap();
        assert_eq!((k4.comp, k4.hand), (1, 3));
        assert_eq!(k4.spine_betti, BettiVector::new(1, 3, 0));
        assert!(k4.holds());
        let tree = Graph::from_edges([], [(0, 1), (0, 2)]).unwrap();
        assert!(check_lemma21(&tree).unwrap().holds());
    }

    #[test]
    fn boundary_betti_examples() {
        let k4 = check_remark22(&complete(&[0, 1, 2, 3])).unwrap();
        assert_eq!(k4.from_homology, BettiVector::new(1, 6, 1));
        assert!(k4.holds());

        let k2 = check_remark22(&complete(&[0, 1])).unwrap();
        assert_eq!(k2.from_homology, BettiVector::new(1, 0, 1));
        assert!(k2.holds());

        let mut two = complete(&[0, 1, 2]);
        for (u, v) in complete(&[3, 4, 5]).edges() {
            two.add_edge(u, v).unwrap();
        }
        let c = check_remark22(&two).unwrap();
        assert_eq!(c.from_homology, BettiVector::new(2, 4, 2));
        assert!(c.holds());
    }

    #[test]
    fn seeds_do_not_change_genus() {
        let g = complete(&[0, 1, 2, 3, 4]);
        for seed in 0..10 {
            let q = quadrangulate(&g, &permute_rotations(&default_rotations(&g), seed)).unwrap();
            let r = verify_surface(&q);
            assert!(r.passed());
            assert_eq!(r.hand(), Some(6));
        }
    }
}
