//! Helpers shared by the integration tests.
#![allow(dead_code)]

use itertools::Itertools;

use fan_turan::{Graph, Hypergraph, Pair};

/// Whether some injective placement of `F`'s vertices, with pairwise
/// disjoint added vertices per edge, realizes `F^r` in `h`. Enumerates every
/// placement and every choice of hyperedge per core edge.
pub fn brute_force_contains(h: &Hypergraph, f: &Graph) -> bool {
    let k = f.vertex_count();
    let edges: Vec<Pair> = f.edges().collect();
    (0..h.vertex_count()).permutations(k).any(|place| {
        let mut used: Vec<bool> = vec![false; h.vertex_count()];
        for &v in &place {
            used[v] = true;
        }
        assign(h, &place, &edges, 0, &mut used)
    })
}

fn assign(h: &Hypergraph, place: &[usize], edges: &[Pair], i: usize, used: &mut [bool]) -> bool {
    let Some(e) = edges.get(i) else {
        return true;
    };
    let (a, b) = (place[e.u()], place[e.v()]);
    let candidates: Vec<Vec<usize>> = h
        .edges()
        .filter(|he| he.contains(&a) && he.contains(&b))
        .map(|he| he.without(&[a, b]))
        .collect();
    for rest in candidates {
        if rest.iter().any(|&v| used[v]) {
            continue;
        }
        for &v in &rest {
            used[v] = true;
        }
        let ok = assign(h, place, edges, i + 1, used);
        for &v in &rest {
            used[v] = false;
        }
        if ok {
            return true;
        }
    }
    false
}

/// Size of a maximum matching by exhaustive search over left vertices.
pub fn brute_force_matching(adj: &[Vec<usize>], right: usize) -> usize {
    fn go(adj: &[Vec<usize>], i: usize, taken: &mut Vec<bool>) -> usize {
        if i == adj.len() {
            return 0;
        }
        let mut best = go(adj, i + 1, taken);
        for &b in &adj[i] {
            if !taken[b] {
                taken[b] = true;
                best = best.max(1 + go(adj, i + 1, taken));
                taken[b] = false;
            }
        }
        best
    }
    go(adj, 0, &mut vec![false; right])
}
