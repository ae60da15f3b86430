//! Seedable random graphs for sweeps and property tests.

use rand::seq::index::sample;
use rand::Rng;

use super::{build_named, Graph, GraphName};

/// Erdős–Rényi `G(n, p)`.
pub fn gnp<R: Rng + ?Sized>(rng: &mut R, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if rng.gen_bool(p) {
                edges.push((i, j));
            }
        }
    }
    Graph::from_edges(n, edges).expect("order checked by caller")
}

/// `G(n, p)` conditioned on being connected, by rejection.
pub fn connected_gnp<R: Rng + ?Sized>(rng: &mut R, n: usize, p: f64) -> Graph {
    loop {
        let g = gnp(rng, n, p);
        if g.is_connected() {
            return g;
        }
    }
}

/// A circulant on `n` vertices with a random non-empty jump set; always
/// regular.
pub fn regular_circulant<R: Rng + ?Sized>(rng: &mut R, n: usize) -> Graph {
    if n < 3 {
        return build_named(GraphName::Complete, &[n.max(1)]).expect("small complete graph");
    }
    let half = n / 2;
    let count = rng.gen_range(1..=half);
    let mut params = vec![n];
    params.extend(sample(rng, half, count).into_iter().map(|j| j + 1));
    build_named(GraphName::Circulant, &params).expect("jumps in 1..=n/2")
}
