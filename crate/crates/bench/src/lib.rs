//! Graph generators shared by the benchmarks.

use corona_core::oracle::{generate_with_edges, Pattern};
use corona_core::Graph;

/// Sizes the scaling benchmark runs at.
pub const SIZES: [usize; 3] = [500, 1000, 2000];

/// Long even cycles and trees around two planted odd cycles, with about
/// `3n/2` edges.
pub fn sparse_instance(n: usize, seed: u64) -> Graph {
    generate_with_edges(Pattern::DisjointConnected, n, 3 * n / 2, seed).expect("sizes are valid")
}

/// Two odd cycles of length about `n/2` joined by one edge, so every
/// vertex lands in the 2-bicritical part.
pub fn joined_long_cycles(n: usize) -> Graph {
    let half = if (n / 2) % 2 == 1 { n / 2 } else { n / 2 - 1 };
    let mut edges = Vec::new();
    for (start, len) in [(0, half), (half, n - half)] {
        for i in 0..len {
            edges.push((start + i, start + (i + 1) % len));
        }
    }
    edges.push((0, half));
    Graph::new(n, &edges).expect("edges are in range")
}
