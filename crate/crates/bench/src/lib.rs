//! Spines shared by the benchmarks.

use spinal_core::{complete_graph, spine_for, Graph, SpineRecipe};

/// `K_n` for each `n` in the sweep used by the pipeline benchmarks.
pub fn complete_spines(sizes: &[u32]) -> Vec<(u32, Graph)> {
    sizes
        .iter()
        .map(|&n| (n, complete_graph(n).expect("n >= 2")))
        .collect()
}

/// The largest spine in the construction sweep: g = 6, k = 5, p = 28.
pub fn largest_recipe_spine() -> Graph {
    spine_for(&SpineRecipe::new(6, 5, 28).expect("valid recipe"))
}
