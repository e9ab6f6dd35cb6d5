#![allow(dead_code)]

use std::collections::HashSet;

use cotan_core::complex::{SimplicialComplex, VertexSet};
use cotan_core::graphs1d::enumerate_graphs;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub fn vs(items: &[usize]) -> VertexSet {
    items.iter().copied().collect()
}

/// A random non-void complex on `n` vertices generated by up to six random
/// subsets; loops appear whenever a vertex is not covered.
pub fn random_complex(rng: &mut ChaCha8Rng, n: usize) -> SimplicialComplex {
    let k = rng.gen_range(0..=6);
    let mut gens: Vec<VertexSet> = (0..k).map(|_| VertexSet::from_bits(rng.gen::<u64>() & ((1u64 << n) - 1))).collect();
    gens.push(VertexSet::EMPTY);
    SimplicialComplex::new(n, gens).unwrap()
}

/// At least `count` pairwise non-isomorphic random complexes on 1 to `max_n` vertices.
pub fn random_iso_classes(rng: &mut ChaCha8Rng, max_n: usize, count: usize) -> Vec<SimplicialComplex> {
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    while out.len() < count {
        let n = rng.gen_range(1..=max_n);
        let c = random_complex(rng, n);
        if seen.insert(c.canonical_form().unwrap()) {
            out.push(c);
        }
    }
    out
}

/// Loop-free graphs with at least one edge on 2 to `max_n` vertices, one per
/// isomorphism class.
pub fn graphs_up_to(max_n: usize) -> Vec<SimplicialComplex> {
    (2..=max_n).flat_map(|n| enumerate_graphs(n).unwrap().into_iter().skip(1).flatten()).collect()
}

/// Takes 1-based edge labels.
fn from_one_based(n: usize, edges: &[(usize, usize)]) -> SimplicialComplex {
    let e: Vec<(usize, usize)> = edges.iter().map(|&(u, v)| (u - 1, v - 1)).collect();
    SimplicialComplex::graph(n, &e).unwrap()
}

/// Leafless graphs on 9 and 10 vertices that still fail the graph conditions:
/// a pentagon 1..5, vertices 6..9 attached to 1..4, three chords among 6..9,
/// and for the larger one a tenth vertex joined to 5, 7 and 8.
pub fn nine_vertex_candidate() -> SimplicialComplex {
    from_one_based(9, &NINE_EDGES)
}

pub fn ten_vertex_candidate() -> SimplicialComplex {
    let mut edges = NINE_EDGES.to_vec();
    edges.extend([(5, 10), (7, 10), (8, 10)]);
    from_one_based(10, &edges)
}

const NINE_EDGES: [(usize, usize); 12] =
    [(1, 2), (2, 3), (3, 4), (4, 5), (5, 1), (1, 6), (2, 7), (3, 8), (4, 9), (6, 8), (6, 9), (7, 9)];

/// The cycle (2,7,9,6,8,3) in 0-based labels.
pub const FAR_CYCLE: [usize; 6] = [1, 6, 8, 5, 7, 2];
