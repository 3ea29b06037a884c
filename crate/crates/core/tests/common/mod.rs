#![allow(dead_code)]

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use spinal_core::{Graph, SimplicialComplex, VertexId};

/// A graph on at most `max_vertices` vertices with no isolated vertex.
/// Odd seeds are split into two halves so disconnected graphs show up
/// regularly.
pub fn random_spine(seed: u64, max_vertices: u32) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = rng.gen_range(2..=max_vertices);
    let density = rng.gen_range(0.2..0.9);
    let split = if seed % 2 == 1 && n >= 4 { n / 2 } else { n };
    let same_side = |u: VertexId, v: VertexId| (u < split) == (v < split);
    let mut g = Graph::new();
    for u in 0..n {
        for v in u + 1..n {
            if same_side(u, v) && rng.gen_bool(density) {
                g.add_edge(u, v).unwrap();
            }
        }
    }
    for v in 0..n {
        if g.degree(v) == 0 {
            let partner = (0..n).find(|&u| u != v && same_side(u, v));
            let partner = partner.unwrap_or(if v == 0 { 1 } else { 0 });
            g.add_edge(v, partner).unwrap();
        }
    }
    g
}

/// A random complex with at most `max_vertices` vertices mixing triangles,
/// edges and loose vertices.
pub fn random_complex(seed: u64, max_vertices: u32) -> SimplicialComplex {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = rng.gen_range(1..=max_vertices);
    let mut c = SimplicialComplex::new();
    c.add_simplex(&[0]).unwrap();
    let p_tri = rng.gen_range(0.0..0.6);
    let p_edge = rng.gen_range(0.0..0.5);
    for a in 0..n {
        if rng.gen_bool(0.3) {
            c.add_simplex(&[a]).unwrap();
        }
        for b in a + 1..n {
            if rng.gen_bool(p_edge) {
                c.add_simplex(&[a, b]).unwrap();
            }
            for t in b + 1..n {
                if rng.gen_bool(p_tri * 0.3) {
                    c.add_simplex(&[a, b, t]).unwrap();
                }
            }
        }
    }
    c
}

pub fn has_triangle<V: spinal_core::VertexLabel>(g: &Graph<V>) -> bool {
    g.edges()
        .iter()
        .any(|&(u, v)| g.neighbors(u).any(|w| w != v && g.has_edge(v, w)))
}
