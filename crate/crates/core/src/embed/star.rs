use std::collections::{BTreeMap, BTreeSet};

use petgraph::algo::maximum_matching;
use petgraph::graph::{NodeIndex, UnGraph};

use super::BipartiteGraph;
use crate::error::{Error, Result};
use crate::hypercore::{Graph, Hypergraph, Pair};

/// An expanded star `S_q^3`: hyperedges `{center, a_i, b_i}` meeting only
/// in the center.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Star {
    pub center: usize,
    pub petals: Vec<[usize; 2]>,
}

impl Star {
    pub fn new(center: usize, petals: Vec<[usize; 2]>) -> Result<Self> {
        let mut seen = BTreeSet::from([center]);
        for p in &petals {
            for &v in p {
                if !seen.insert(v) {
                    return Err(Error::input(format!(
                        "vertex {v} appears twice in the star"
                    )));
                }
            }
        }
        Ok(Star { center, petals })
    }

    pub fn len(&self) -> usize {
        self.petals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.petals.is_empty()
    }

    pub fn vertices(&self) -> BTreeSet<usize> {
        std::iter::once(self.center)
            .chain(self.petals.iter().flatten().copied())
            .collect()
    }

    pub fn hyperedge(&self, i: usize) -> [usize; 3] {
        let [a, b] = self.petals[i];
        let mut e = [self.center, a, b];
        e.sort_unstable();
        e
    }

    /// The two close pairs and the far pair of petal `i`.
    pub fn petal_pairs(&self, i: usize) -> [Pair; 3] {
        let [a, b] = self.petals[i];
        [
            Pair::of(self.center, a),
            Pair::of(self.center, b),
            Pair::of(a, b),
        ]
    }

    /// All `3q` pairs inside the star's hyperedges, petal by petal.
    pub fn inside_pairs(&self) -> Vec<Pair> {
        (0..self.len()).flat_map(|i| self.petal_pairs(i)).collect()
    }

    fn check_in(&self, h: &Hypergraph) -> Result<()> {
        h.require_uniformity(3)?;
        for i in 0..self.len() {
            let e = self.hyperedge(i);
            if !h.contains(&e) {
                return Err(Error::input(format!("star hyperedge {e:?} is not in the host")));
            }
        }
        Ok(())
    }
}

/// Input to [`find_nice_star`].
#[derive(Debug, Clone)]
pub struct NiceStarSpec {
    /// The large star `S_q^3`.
    pub star: Star,
    /// Required outside link vertices per inside pair; absent pairs weigh 0.
    pub weights: BTreeMap<Pair, usize>,
    /// Upper bound on every weight.
    pub k: usize,
    /// Size of the nice sub-star wanted.
    pub r: usize,
}

fn weight(w: &BTreeMap<Pair, usize>, p: Pair) -> usize {
    w.get(&p).copied().unwrap_or(0)
}

/// Whether every inside pair `e` of `star` has at least `w(e)` link
/// vertices outside the star.
pub fn is_nice(h: &Hypergraph, star: &Star, w: &BTreeMap<Pair, usize>) -> Result<bool> {
    star.check_in(h)?;
    let verts = star.vertices();
    for p in star.inside_pairs() {
        let outside = h.link_set(p)?.difference(&verts).count();
        if outside < weight(w, p) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Extracts a nice `S_r^3` from a large star whose inside pairs are
/// `(w(e)+1)`-heavy.
///
/// For every inside pair, the first `w(e)` link vertices (ascending) other
/// than the pair's own petal vertex are fixed. Two petals conflict when a
/// vertex fixed for one lies in the other; a minimum-degree greedy
/// independent set in the conflict graph gives pairwise compatible petals,
/// and the first `r` of them (by petal index) are returned. Success is
/// guaranteed when `q > (1 + 6k) r`.
pub fn find_nice_star(h: &Hypergraph, spec: &NiceStarSpec) -> Result<Option<Star>> {
    let star = &spec.star;
    star.check_in(h)?;
    let q = star.len();
    let mut owner = BTreeMap::new();
    for (i, p) in star.petals.iter().enumerate() {
        owner.insert(p[0], i);
        owner.insert(p[1], i);
    }

    let mut conflicts = Graph::new(q);
    for i in 0..q {
        let petal_verts = star.hyperedge(i);
        for p in star.petal_pairs(i) {
            let w = weight(&spec.weights, p);
            if w > spec.k {
                return Err(Error::Precondition {
                    pair: p,
                    reason: format!("weight {w} exceeds the bound {}", spec.k),
                });
            }
            let heaviness = h.heaviness(p)?;
            if heaviness < w + 1 {
                return Err(Error::Precondition {
                    pair: p,
                    reason: format!("heaviness {heaviness} below weight {w} + 1"),
                });
            }
            let own = petal_verts
                .iter()
                .copied()
                .find(|&v| !p.contains(v))
                .expect("petal has three vertices");
            let fixed = h.link_set(p)?.into_iter().filter(|&z| z != own).take(w);
            for z in fixed {
                if let Some(&j) = owner.get(&z) {
                    if j != i {
                        conflicts.add_edge(i, j)?;
                    }
                }
            }
        }
    }

    let chosen = greedy_independent_set(&conflicts);
    if chosen.len() < spec.r {
        return Ok(None);
    }
    let petals = chosen[..spec.r].iter().map(|&i| star.petals[i]).collect();
    Ok(Some(Star {
        center: star.center,
        petals,
    }))
}

/// Repeatedly takes a vertex of minimum remaining degree (smallest index on
/// ties) and deletes its closed neighbourhood. Returns the chosen vertices
/// in ascending order; the result has at least [`caro_wei_bound`] vertices.
pub fn greedy_independent_set(g: &Graph) -> Vec<usize> {
    let n = g.vertex_count();
    let mut alive = vec![true; n];
    let mut deg: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut chosen = Vec::new();
    while let Some(v) = (0..n).filter(|&v| alive[v]).min_by_key(|&v| (deg[v], v)) {
        chosen.push(v);
        let mut removed: Vec<usize> = g.neighbors(v).filter(|&u| alive[u]).collect();
        removed.push(v);
        for &u in &removed {
            alive[u] = false;
        }
        for &u in &removed {
            for x in g.neighbors(u) {
                if alive[x] {
                    deg[x] -= 1;
                }
            }
        }
    }
    chosen.sort_unstable();
    chosen
}

/// `ceil(n / (1 + average degree))`, computed exactly as `ceil(n² / (n + 2m))`.
pub fn caro_wei_bound(g: &Graph) -> usize {
    let n = g.vertex_count();
    if n == 0 {
        return 0;
    }
    let denom = n + 2 * g.edge_count();
    (n * n).div_ceil(denom)
}

/// Left side: inside pairs of `star` that are `(5t-1)`-light. Right side:
/// vertices outside the star. A pair is joined to `x` when together they
/// form a hyperedge.
pub fn auxiliary_bipartite(
    h: &Hypergraph,
    star: &Star,
    t: usize,
) -> Result<BipartiteGraph<Pair, usize>> {
    star.check_in(h)?;
    let verts = star.vertices();
    let mut left = Vec::new();
    if t > 0 {
        for p in star.inside_pairs() {
            if h.heaviness(p)? < 5 * t {
                left.push(p);
            }
        }
    }
    let right: Vec<usize> = (0..h.vertex_count()).filter(|v| !verts.contains(v)).collect();
    let pos: BTreeMap<usize, usize> = right.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let links: Vec<BTreeSet<usize>> = left
        .iter()
        .map(|&p| h.link_set(p))
        .collect::<Result<_>>()?;
    let mut g = BipartiteGraph::new(left, right);
    for (a, link) in links.iter().enumerate() {
        for x in link {
            if let Some(&b) = pos.get(x) {
                g.add_edge(a, b)?;
            }
        }
    }
    Ok(g)
}

/// An `S_q^3` in `h`, found by maximum matching in each vertex's link
/// graph. `None` means `h` contains no `S_q^3` at all.
pub fn find_disjoint_star(h: &Hypergraph, q: usize) -> Result<Option<Star>> {
    h.require_uniformity(3)?;
    let n = h.vertex_count();
    for v in 0..n {
        if q == 0 {
            return Ok(Some(Star::new(v, Vec::new())?));
        }
        let link = h.link_graph(v)?;
        if link.edge_count() < q {
            continue;
        }
        let mut g = UnGraph::<(), ()>::with_capacity(n, link.edge_count());
        for _ in 0..n {
            g.add_node(());
        }
        for p in link.edges() {
            g.add_edge(NodeIndex::new(p.u()), NodeIndex::new(p.v()), ());
        }
        let m = maximum_matching(&g);
        if m.len() >= q {
            let mut petals: Vec<[usize; 2]> = m
                .edges()
                .map(|(a, b)| {
                    let (a, b) = (a.index(), b.index());
                    [a.min(b), a.max(b)]
                })
                .collect();
            petals.sort_unstable();
            petals.truncate(q);
            return Ok(Some(Star::new(v, petals)?));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gallery::{complete_graph, path_graph, star_expansion};

    fn star3(q: usize) -> (Hypergraph, Star) {
        let (h, _) = star_expansion(q, 3).unwrap();
        let petals = (0..q).map(|i| [2 * i + 1, 2 * i + 2]).collect();
        (h, Star::new(0, petals).unwrap())
    }

    fn grow(h: &Hypergraph, n: usize, extra: &[[usize; 3]]) -> Hypergraph {
        let mut g = Hypergraph::new(n, 3).unwrap();
        for e in h.edges().map(|e| e.to_vec()).chain(extra.iter().map(|e| e.to_vec())) {
            g.insert(&e).unwrap();
        }
        g
    }

    #[test]
    fn star_rejects_overlap() {
        assert!(Star::new(0, vec![[1, 2], [2, 3]]).is_err());
        assert!(Star::new(0, vec![[0, 2]]).is_err());
    }

    #[test]
    fn nice_with_zero_weights() {
        let (h, s) = star3(3);
        assert!(is_nice(&h, &s, &BTreeMap::new()).unwrap());
    }

    #[test]
    fn nice_with_one_outside_vertex() {
        let (h, s) = star3(2);
        // pair (1, 2) gains outside link vertex 5
        let h = grow(&h, 6, &[[1, 2, 5]]);
        let e = Pair::of(1, 2);
        assert!(is_nice(&h, &s, &BTreeMap::from([(e, 1)])).unwrap());
        assert!(!is_nice(&h, &s, &BTreeMap::from([(e, 2)])).unwrap());
    }

    #[test]
    fn nice_requires_star_in_host() {
        let (h, _) = star3(2);
        let bogus = Star::new(0, vec![[1, 3]]).unwrap();
        assert!(is_nice(&h, &bogus, &BTreeMap::new()).is_err());
    }

    #[test]
    fn nice_star_zero_weights_takes_prefix() {
        let (h, s) = star3(5);
        let spec = NiceStarSpec { star: s.clone(), weights: BTreeMap::new(), k: 0, r: 3 };
        let got = find_nice_star(&h, &spec).unwrap().unwrap();
        assert_eq!(got.petals, s.petals[..3]);
        let spec = NiceStarSpec { star: s.clone(), weights: BTreeMap::new(), k: 0, r: 5 };
        assert_eq!(find_nice_star(&h, &spec).unwrap().unwrap(), s);
    }

    #[test]
    fn nice_star_reports_light_pair() {
        let (h, s) = star3(3);
        let e = Pair::of(0, 1);
        let spec = NiceStarSpec { star: s, weights: BTreeMap::from([(e, 1)]), k: 1, r: 1 };
        match find_nice_star(&h, &spec) {
            Err(Error::Precondition { pair, .. }) => assert_eq!(pair, e),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn independent_sets() {
        assert_eq!(greedy_independent_set(&Graph::new(5)), vec![0, 1, 2, 3, 4]);
        let k4 = complete_graph(4);
        assert_eq!(greedy_independent_set(&k4).len(), 1);
        assert_eq!(caro_wei_bound(&k4), 1);
        let p4 = path_graph(4);
        let s = greedy_independent_set(&p4);
        assert_eq!(s, vec![0, 2]);
        assert_eq!(caro_wei_bound(&p4), 2);
        assert_eq!(caro_wei_bound(&Graph::new(0)), 0);
    }

    #[test]
    fn auxiliary_graph_cases() {
        let (h, s) = star3(2);
        let h6 = grow(&h, 7, &[]);
        let b = auxiliary_bipartite(&h6, &s, 1).unwrap();
        assert_eq!(b.right, vec![5, 6]);
        assert_eq!(b.left.len(), 6);
        assert_eq!(b.edge_count(), 0);

        let h = grow(&h, 6, &[[1, 2, 5]]);
        let b = auxiliary_bipartite(&h, &s, 1).unwrap();
        let a = b.left.iter().position(|&p| p == Pair::of(1, 2)).unwrap();
        assert!(b.has_edge(a, 0));
        assert_eq!(b.edge_count(), 1);
    }

    #[test]
    fn disjoint_stars() {
        let (h, _) = star3(4);
        let s = find_disjoint_star(&h, 4).unwrap().unwrap();
        assert_eq!(s.center, 0);
        assert_eq!(s.len(), 4);

        let single = Hypergraph::from_edges(3, 3, &[[0, 1, 2]]).unwrap();
        assert!(find_disjoint_star(&single, 2).unwrap().is_none());

        let k7 = Hypergraph::complete(7, 3).unwrap();
        let s = find_disjoint_star(&k7, 3).unwrap().unwrap();
        assert_eq!(s.len(), 3);
        for i in 0..3 {
            assert!(k7.contains(&s.hyperedge(i)));
        }
    }

    #[test]
    fn disjoint_star_needs_blossoms() {
        // link graph of 0 is a 5-cycle plus a pendant edge: matching 3
        let mut h = Hypergraph::new(7, 3).unwrap();
        for (a, b) in [(1, 2), (2, 3), (3, 4), (4, 5), (5, 1), (1, 6)] {
            h.insert(&[0, a, b]).unwrap();
        }
        assert_eq!(find_disjoint_star(&h, 3).unwrap().unwrap().len(), 3);
        assert!(find_disjoint_star(&h, 4).unwrap().is_none());
    }
}
