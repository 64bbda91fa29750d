use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::hypercore::Pair;

/// A bipartite graph with labelled sides; adjacency is stored by index.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BipartiteGraph<L = Pair, R = usize> {
    pub left: Vec<L>,
    pub right: Vec<R>,
    adj: Vec<Vec<usize>>,
}

impl<L, R> BipartiteGraph<L, R> {
    pub fn new(left: Vec<L>, right: Vec<R>) -> Self {
        let adj = vec![Vec::new(); left.len()];
        BipartiteGraph { left, right, adj }
    }

    /// Joins left vertex `a` to right vertex `b` (both indices).
    pub fn add_edge(&mut self, a: usize, b: usize) -> Result<()> {
        if a >= self.left.len() || b >= self.right.len() {
            return Err(Error::input(format!("bipartite edge ({a}, {b}) out of range")));
        }
        if let Err(pos) = self.adj[a].binary_search(&b) {
            self.adj[a].insert(pos, b);
        }
        Ok(())
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.adj.get(a).is_some_and(|nb| nb.binary_search(&b).is_ok())
    }

    pub fn neighbors(&self, a: usize) -> &[usize] {
        &self.adj[a]
    }

    pub fn degree(&self, a: usize) -> usize {
        self.adj[a].len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum()
    }
}

/// Disjoint `(left, right)` index pairs.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Matching {
    pub pairs: Vec<(usize, usize)>,
}

impl Matching {
    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn is_valid<L, R>(&self, g: &BipartiteGraph<L, R>) -> bool {
        let mut l = vec![false; g.left.len()];
        let mut r = vec![false; g.right.len()];
        self.pairs.iter().all(|&(a, b)| {
            g.has_edge(a, b) && !std::mem::replace(&mut l[a], true) && !std::mem::replace(&mut r[b], true)
        })
    }
}

/// Maximum-cardinality matching (Hopcroft–Karp), pairs sorted by left index.
pub fn max_matching<L, R>(g: &BipartiteGraph<L, R>) -> Matching {
    const FREE: usize = usize::MAX;
    let nl = g.left.len();
    let mut match_l = vec![FREE; nl];
    let mut match_r = vec![FREE; g.right.len()];
    let mut dist = vec![0usize; nl];

    loop {
        // layered BFS from free left vertices
        let mut queue = VecDeque::new();
        for a in 0..nl {
            if match_l[a] == FREE {
                dist[a] = 0;
                queue.push_back(a);
            } else {
                dist[a] = usize::MAX;
            }
        }
        let mut found = false;
        while let Some(a) = queue.pop_front() {
            for &b in g.neighbors(a) {
                let next = match_r[b];
                if next == FREE {
                    found = true;
                } else if dist[next] == usize::MAX {
                    dist[next] = dist[a] + 1;
                    queue.push_back(next);
                }
            }
        }
        if !found {
            break;
        }
        for a in 0..nl {
            if match_l[a] == FREE {
                augment(g, a, &mut match_l, &mut match_r, &mut dist);
            }
        }
    }

    Matching {
        pairs: match_l
            .iter()
            .enumerate()
            .filter(|&(_, &b)| b != FREE)
            .map(|(a, &b)| (a, b))
            .collect(),
    }
}

fn augment<L, R>(
    g: &BipartiteGraph<L, R>,
    a: usize,
    match_l: &mut [usize],
    match_r: &mut [usize],
    dist: &mut [usize],
) -> bool {
    for &b in g.neighbors(a) {
        let next = match_r[b];
        let ok = next == usize::MAX
            || (dist[next] == dist[a] + 1 && augment(g, next, match_l, match_r, dist));
        if ok {
            match_l[a] = b;
            match_r[b] = a;
            return true;
        }
    }
    dist[a] = usize::MAX;
    false
}

/// Why the common-neighbourhood conclusion could not be drawn.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum HallFailure {
    /// Fewer than `k` left vertices.
    TooFewLeft { left: usize, k: usize },
    /// A left vertex of degree below `k - 1`.
    LowDegree { vertex: usize, degree: usize, required: usize },
    /// Hypotheses hold, no `k`-matching, yet neighbourhoods differ. Never
    /// produced for a correct matching routine.
    Inconsistent { vertex: usize },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum HallOutcome {
    /// A matching with exactly `k` pairs.
    Matching(Matching),
    /// The `k - 1` right vertices (indices) forming the neighbourhood of
    /// every left vertex.
    CommonNeighborhood(Vec<usize>),
    Failed(HallFailure),
}

/// Either a `k`-matching, or the common `(k-1)`-neighbourhood that the
/// absence of a `k`-matching forces when `|A| >= k` and every left vertex
/// has degree at least `k - 1`.
pub fn hall_analysis<L, R>(g: &BipartiteGraph<L, R>, k: usize) -> HallOutcome {
    let mut m = max_matching(g);
    if m.len() >= k {
        m.pairs.truncate(k);
        return HallOutcome::Matching(m);
    }
    if g.left.len() < k {
        return HallOutcome::Failed(HallFailure::TooFewLeft {
            left: g.left.len(),
            k,
        });
    }
    let required = k.saturating_sub(1);
    if let Some(a) = (0..g.left.len()).find(|&a| g.degree(a) < required) {
        return HallOutcome::Failed(HallFailure::LowDegree {
            vertex: a,
            degree: g.degree(a),
            required,
        });
    }
    let common = g.neighbors(0).to_vec();
    if common.len() != required {
        return HallOutcome::Failed(HallFailure::Inconsistent { vertex: 0 });
    }
    match (1..g.left.len()).find(|&a| g.neighbors(a) != common.as_slice()) {
        Some(a) => HallOutcome::Failed(HallFailure::Inconsistent { vertex: a }),
        None => HallOutcome::CommonNeighborhood(common),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bip(nl: usize, nr: usize, edges: &[(usize, usize)]) -> BipartiteGraph<usize, usize> {
        let mut g = BipartiteGraph::new((0..nl).collect(), (0..nr).collect());
        for &(a, b) in edges {
            g.add_edge(a, b).unwrap();
        }
        g
    }

    #[test]
    fn small_matchings() {
        let full = bip(3, 2, &[(0, 0), (0, 1), (1, 0), (1, 1), (2, 0), (2, 1)]);
        let m = max_matching(&full);
        assert_eq!(m.len(), 2);
        assert!(m.is_valid(&full));

        let perfect = bip(3, 3, &[(0, 0), (1, 1), (2, 2)]);
        assert_eq!(max_matching(&perfect).pairs, vec![(0, 0), (1, 1), (2, 2)]);

        assert!(max_matching(&bip(3, 3, &[])).is_empty());
    }

    #[test]
    fn needs_augmenting_path() {
        // greedy on left order would match 0-0 and block 1
        let g = bip(2, 2, &[(0, 0), (0, 1), (1, 0)]);
        assert_eq!(max_matching(&g).len(), 2);
    }

    #[test]
    fn hall_common_neighborhood() {
        let g = bip(3, 2, &[(0, 0), (0, 1), (1, 0), (1, 1), (2, 0), (2, 1)]);
        assert_eq!(hall_analysis(&g, 3), HallOutcome::CommonNeighborhood(vec![0, 1]));
    }

    #[test]
    fn hall_matching() {
        let g = bip(3, 3, &[(0, 0), (1, 1), (2, 2)]);
        match hall_analysis(&g, 3) {
            HallOutcome::Matching(m) => assert_eq!(m.len(), 3),
            other => panic!("unexpected {other:?}"),
        }
        match hall_analysis(&g, 2) {
            HallOutcome::Matching(m) => assert_eq!(m.len(), 2),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn hall_failures() {
        let g = bip(3, 3, &[(0, 0), (0, 1), (1, 0), (1, 1), (2, 0)]);
        assert_eq!(
            hall_analysis(&g, 3),
            HallOutcome::Failed(HallFailure::LowDegree { vertex: 2, degree: 1, required: 2 })
        );
        let g = bip(2, 3, &[(0, 0), (1, 0)]);
        assert_eq!(
            hall_analysis(&g, 3),
            HallOutcome::Failed(HallFailure::TooFewLeft { left: 2, k: 3 })
        );
    }

    #[test]
    fn add_edge_range_check() {
        let mut g = bip(1, 1, &[]);
        assert!(g.add_edge(1, 0).is_err());
        assert!(g.add_edge(0, 1).is_err());
    }
}
