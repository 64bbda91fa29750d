//! Seeded random graphs and hypergraphs for property suites and examples.

use itertools::Itertools;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::hypercore::{Graph, Hypergraph};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Each pair is an edge independently with probability `p`.
pub fn graph<R: Rng>(n: usize, p: f64, rng: &mut R) -> Graph {
    let mut g = Graph::new(n);
    for (u, v) in (0..n).tuple_combinations() {
        if rng.random_bool(p) {
            g.add_edge(u, v).expect("in range");
        }
    }
    g
}

/// Each `r`-set is a hyperedge independently with probability `p`.
pub fn hypergraph<R: Rng>(n: usize, r: usize, p: f64, rng: &mut R) -> Hypergraph {
    let mut h = Hypergraph::new(n, r).expect("r >= 1");
    for e in (0..n).combinations(r) {
        if rng.random_bool(p) {
            h.insert(&e).expect("in range");
        }
    }
    h
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn seeded_is_reproducible() {
        let a = hypergraph(9, 3, 0.3, &mut rng(7));
        let b = hypergraph(9, 3, 0.3, &mut rng(7));
        assert_eq!(a, b);
        let g = graph(10, 1.0, &mut rng(1));
        assert_eq!(g.edge_count(), 45);
    }
}
