//! Spine generators and minimality certificates.
//!
//! The genus of a spinal quadrangulation is the cycle rank of its spine and
//! its chromatic number is the spine's, so prescribing a quadrangulation
//! reduces to building a spine with the right vertex count, cycle rank and
//! chromatic number.

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId};

/// `K_n` on vertices `0..n`.
pub fn complete_graph(n: u32) -> Result<Graph> {
    if n < 2 {
        return Err(Error::InvalidParameter(format!("complete graph needs n >= 2, got {n}")));
    }
    Ok(complete_on(n))
}

fn complete_on(n: u32) -> Graph {
    Graph::from_edges(0..n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
        .expect("distinct endpoints")
}

/// `K_n` with the edge `{0, 1}` removed.
pub fn complete_minus_edge(n: u32) -> Result<Graph> {
    if n < 3 {
        return Err(Error::InvalidParameter(format!("K_n - e needs n >= 3, got {n}")));
    }
    Ok(Graph::from_edges(
        0..n,
        complete_on(n).edges().into_iter().filter(|&e| e != (0, 1)),
    )
    .expect("distinct endpoints"))
}

/// `K_n` with every edge inside `{0, .., m-1}` removed; all vertices kept.
pub fn complete_minus_clique(n: u32, m: u32) -> Result<Graph> {
    if n < 2 || m < 1 || m > n - 1 {
        return Err(Error::InvalidParameter(format!(
            "K_n - E(K_m) needs n >= 2 and 1 <= m <= n - 1, got n={n}, m={m}"
        )));
    }
    Ok(Graph::from_edges(
        0..n,
        complete_on(n).edges().into_iter().filter(|&(_, v)| v >= m),
    )
    .expect("distinct endpoints"))
}

/// A tree on `0..vertex_count` where each vertex `i > 0` attaches to a
/// uniformly chosen earlier vertex.
pub fn random_tree(vertex_count: u32, seed: u64) -> Result<Graph> {
    if vertex_count < 2 {
        return Err(Error::InvalidParameter(format!(
            "a non-trivial tree needs at least 2 vertices, got {vertex_count}"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let edges: Vec<_> = (1..vertex_count).map(|i| (rng.gen_range(0..i), i)).collect();
    Ok(Graph::from_edges(0..vertex_count, edges).expect("distinct endpoints"))
}

/// Target genus `g`, chromatic number `k` and quadrangulation order `p`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SpineRecipe {
    genus: u64,
    chromatic: u64,
    vertices: u64,
}

/// Cycle rank of `K_k`.
fn complete_betti1(k: u64) -> u64 {
    (k - 1) * (k.saturating_sub(2)) / 2
}

impl SpineRecipe {
    /// Validates the three hypotheses:
    /// (1) `g = 0` when `k = 2`;
    /// (2) `g >= (k-1)(k-2)/2` when `k >= 3`;
    /// (3) `p` even and `p >= 4g - 2(k^2 - 4k + 2)`;
    /// together with `k >= 2` and `p >= 4`.
    pub fn new(genus: u64, chromatic: u64, vertices: u64) -> Result<Self> {
        if chromatic < 2 {
            return Err(Error::InvalidParameter(format!("k must be at least 2, got {chromatic}")));
        }
        if vertices < 4 {
            return Err(Error::InvalidParameter(format!("p must be at least 4, got {vertices}")));
        }
        if chromatic == 2 && genus != 0 {
            return Err(Error::Recipe {
                hypothesis: 1,
                detail: format!("g must be 0 when k = 2, got g={genus}"),
            });
        }
        if chromatic >= 3 && genus < complete_betti1(chromatic) {
            return Err(Error::Recipe {
                hypothesis: 2,
                detail: format!(
                    "g must be at least (k-1)(k-2)/2 = {} when k = {chromatic}, got g={genus}",
                    complete_betti1(chromatic)
                ),
            });
        }
        let k = chromatic as i128;
        let floor = 4 * genus as i128 - 2 * (k * k - 4 * k + 2);
        if !vertices.is_multiple_of(2) || (vertices as i128) < floor {
            return Err(Error::Recipe {
                hypothesis: 3,
                detail: format!("p must be even and at least 4g - 2(k^2 - 4k + 2) = {floor}, got p={vertices}"),
            });
        }
        Ok(Self {
            genus,
            chromatic,
            vertices,
        })
    }

    pub fn genus(&self) -> u64 {
        self.genus
    }

    pub fn chromatic(&self) -> u64 {
        self.chromatic
    }

    pub fn vertices(&self) -> u64 {
        self.vertices
    }

    /// Vertices of the spine, half those of the quadrangulation.
    pub fn spine_vertices(&self) -> u64 {
        self.vertices / 2
    }
}

/// A spine whose spinal quadrangulation realizes the recipe.
///
/// For `k = 2` this is the path on `p/2` vertices. Otherwise it is `K_k`
/// with one triangle `{0, a, b}` hung at vertex 0 per missing handle (each
/// adds two vertices and one independent cycle), padded with pendant
/// vertices at 0 up to `p/2` vertices.
pub fn spine_for(recipe: &SpineRecipe) -> Graph {
    let n = recipe.spine_vertices() as VertexId;
    if recipe.chromatic == 2 {
        return Graph::from_edges(0..n, (1..n).map(|i| (i - 1, i))).expect("distinct endpoints");
    }
    let k = recipe.chromatic as VertexId;
    let mut g = complete_on(k);
    let mut next = k;
    for _ in 0..recipe.genus - complete_betti1(recipe.chromatic) {
        let (a, b) = (next, next + 1);
        for (u, v) in [(0, a), (a, b), (b, 0)] {
            g.add_edge(u, v).expect("distinct endpoints");
        }
        next += 2;
    }
    while next < n {
        g.add_edge(0, next).expect("distinct endpoints");
        next += 1;
    }
    g
}

/// Least vertex count of any quadrangulation of the orientable surface of
/// genus `g >= 1`: the smallest `V` beyond the axis of `V^2 - 5V + 8 - 8g`
/// at which it is nonnegative.
pub fn eq6_bound(genus: u64) -> Result<u64> {
    if genus == 0 {
        return Err(Error::InvalidParameter(
            "the quadrangulation vertex bound holds only for genus >= 1".into(),
        ));
    }
    let g = genus as i128;
    let mut v: i128 = 3;
    while v * v - 5 * v + 8 - 8 * g < 0 {
        v += 1;
    }
    Ok(v as u64)
}

/// Minimality data for the spinal quadrangulation of `K_n - E(K_m)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MinimalityCertificate {
    pub n: u64,
    pub m: u64,
    pub genus: u64,
    pub quad_vertices: u64,
    pub eq6_bound: u64,
    /// `n >= 4 + 2m(m-1)`.
    pub sufficient_condition_met: bool,
    /// The quadrangulation attains the lower bound.
    pub minimal: bool,
}

impl fmt::Display for MinimalityCertificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "n={} m={} genus={} bound={} vertices={} condition={} minimal={}",
            self.n,
            self.m,
            self.genus,
            self.eq6_bound,
            self.quad_vertices,
            self.sufficient_condition_met,
            self.minimal
        )
    }
}

pub fn minimality_report(n: u64, m: u64) -> Result<MinimalityCertificate> {
    if n < 2 || m < 1 || m > n - 1 {
        return Err(Error::InvalidParameter(format!(
            "need n >= 2 and 1 <= m <= n - 1, got n={n}, m={m}"
        )));
    }
    let genus = ((n - 1) * (n - 2) - m * (m - 1)) / 2;
    if genus == 0 {
        return Err(Error::InvalidParameter(format!(
            "K_{n} - E(K_{m}) has genus 0; the vertex bound holds only for genus >= 1"
        )));
    }
    let (ni, mi, gi) = (n as i128, m as i128, genus as i128);
    if 32 * gi - 7 != 16 * ni * ni - 48 * ni + 25 - 16 * mi * mi + 16 * mi {
        return Err(Error::Verification(format!(
            "32g - 7 disagrees with 16n^2 - 48n + 25 - 16m^2 + 16m at n={n}, m={m}"
        )));
    }
    let bound = eq6_bound(genus)?;
    Ok(MinimalityCertificate {
        n,
        m,
        genus,
        quad_vertices: 2 * n,
        eq6_bound: bound,
        sufficient_condition_met: n >= 4 + 2 * m * (m - 1),
        minimal: 2 * n == bound,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn family_shapes() {
        for n in 2..=7 {
            assert_eq!(complete_minus_clique(n, 1).unwrap(), complete_graph(n).unwrap());
        }
        assert_eq!(complete_minus_edge(5).unwrap().betti1(), 5);
        let g = complete_minus_clique(6, 3).unwrap();
        assert_eq!(g.vertex_count(), 6);
        assert_eq!(g.edge_count(), 15 - 3);
        assert!(complete_graph(1).is_err());
        assert!(complete_minus_edge(2).is_err());
        assert!(complete_minus_clique(4, 4).is_err());
        assert!(complete_minus_clique(4, 0).is_err());
    }

    #[test]
    fn family_cycle_ranks() {
        for n in 2..=12u64 {
            for m in 1..n {
                let g = complete_minus_clique(n as u32, m as u32).unwrap();
                assert_eq!(g.betti1() as u64, ((n - 1) * (n - 2) - m * (m - 1)) / 2);
            }
        }
    }

    #[test]
    fn random_trees() {
        assert_eq!(random_tree(2, 99).unwrap(), complete_graph(2).unwrap());
        for seed in 0..20 {
            let t = random_tree(11, seed).unwrap();
            assert_eq!(t.edge_count(), 10);
            assert!(t.is_connected());
            assert_eq!(t.betti1(), 0);
        }
        assert_eq!(random_tree(9, 4).unwrap().to_edge_list(), random_tree(9, 4).unwrap().to_edge_list());
        assert!(random_tree(1, 0).is_err());
    }

    #[test]
    fn recipe_hypotheses() {
        assert!(matches!(SpineRecipe::new(1, 2, 6), Err(Error::Recipe { hypothesis: 1, .. })));
        assert!(matches!(SpineRecipe::new(2, 4, 20), Err(Error::Recipe { hypothesis: 2, .. })));
        assert!(matches!(SpineRecipe::new(5, 4, 19), Err(Error::Recipe { hypothesis: 3, .. })));
        assert!(matches!(SpineRecipe::new(5, 4, 14), Err(Error::Recipe { hypothesis: 3, .. })));
        assert!(SpineRecipe::new(0, 1, 4).is_err());
        assert!(SpineRecipe::new(0, 2, 2).is_err());
        assert!(SpineRecipe::new(5, 4, 16).is_ok());
        assert!(SpineRecipe::new(5, 4, 20).is_ok());
    }

    #[test]
    fn spine_examples() {
        let g = spine_for(&SpineRecipe::new(5, 4, 20).unwrap());
        assert_eq!(g.vertex_count(), 10);
        assert_eq!(g.betti1(), 5);

        let path = spine_for(&SpineRecipe::new(0, 2, 8).unwrap());
        assert_eq!(path.to_edge_list(), "0 1\n1 2\n2 3\n");

        let k4 = spine_for(&SpineRecipe::new(3, 4, 8).unwrap());
        assert_eq!(k4, complete_graph(4).unwrap());
    }

    #[test]
    fn eq6_examples() {
        assert_eq!(eq6_bound(1), Ok(5));
        assert_eq!(eq6_bound(3), Ok(8));
        assert_eq!(eq6_bound(20), Ok(16));
        assert!(eq6_bound(0).is_err());
    }

    #[test]
    fn eq6_matches_closed_form() {
        // Independent route: the ceiling of the larger root, in floating
        // point, which is exact enough at this range.
        let mut previous = 0;
        for g in 1..=20_000u64 {
            let root = 0.5 * (5.0 + ((32 * g - 7) as f64).sqrt());
            let b = eq6_bound(g).unwrap();
            assert_eq!(b, root.ceil() as u64, "g={g}");
            assert!(b >= previous);
            previous = b;
        }
    }

    #[test]
    fn certificate_examples() {
        let c = minimality_report(4, 1).unwrap();
        assert_eq!((c.genus, c.eq6_bound, c.quad_vertices), (3, 8, 8));
        assert!(c.sufficient_condition_met && c.minimal);

        let c = minimality_report(3, 1).unwrap();
        assert_eq!((c.genus, c.eq6_bound), (1, 5));
        assert!(!c.sufficient_condition_met && !c.minimal);

        let c = minimality_report(8, 2).unwrap();
        assert_eq!((c.genus, c.eq6_bound), (20, 16));
        assert!(c.sufficient_condition_met && c.minimal);
        assert_eq!(c.to_string(), "n=8 m=2 genus=20 bound=16 vertices=16 condition=true minimal=true");

        assert!(minimality_report(3, 2).is_err());
        assert!(minimality_report(3, 3).is_err());
    }
}
