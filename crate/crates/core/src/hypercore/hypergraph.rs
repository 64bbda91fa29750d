use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::Deref;

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

use super::{Graph, Pair};

/// A hyperedge: a strictly increasing list of vertex indices.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct HyperEdge(Box<[usize]>);

impl HyperEdge {
    /// Sorts the given vertices; fails on repeated vertices.
    pub fn new(vertices: &[usize]) -> Result<Self> {
        let mut v = vertices.to_vec();
        v.sort_unstable();
        if v.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::input(format!("repeated vertex in {vertices:?}")));
        }
        Ok(HyperEdge(v.into_boxed_slice()))
    }

    pub fn vertices(&self) -> &[usize] {
        &self.0
    }

    /// The vertices of this hyperedge other than those in `drop`.
    pub fn without(&self, drop: &[usize]) -> Vec<usize> {
        self.0.iter().copied().filter(|x| !drop.contains(x)).collect()
    }

    /// All vertex pairs inside the hyperedge, lexicographically.
    pub fn pairs(&self) -> impl Iterator<Item = Pair> + '_ {
        self.0
            .iter()
            .tuple_combinations()
            .map(|(&a, &b)| Pair::of(a, b))
    }
}

impl Deref for HyperEdge {
    type Target = [usize];

    fn deref(&self) -> &[usize] {
        &self.0
    }
}

impl AsRef<[usize]> for HyperEdge {
    fn as_ref(&self) -> &[usize] {
        &self.0
    }
}

impl fmt::Display for HyperEdge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}", self.0.iter().join(","))
    }
}

/// All `s`-subsets of `edge`, each sorted, in lexicographic order.
pub fn subedges(edge: &[usize], s: usize) -> Vec<Vec<usize>> {
    let mut sorted = edge.to_vec();
    sorted.sort_unstable();
    sorted.into_iter().combinations(s).collect()
}

/// An `r`-uniform hypergraph on `0..n` with a pair → hyperedge index.
#[derive(Debug, Clone)]
pub struct Hypergraph {
    n: usize,
    r: usize,
    edges: BTreeSet<HyperEdge>,
    pair_index: BTreeMap<Pair, Vec<HyperEdge>>,
}

impl PartialEq for Hypergraph {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.r == other.r && self.edges == other.edges
    }
}

impl Eq for Hypergraph {}

impl Hypergraph {
    pub fn new(n: usize, r: usize) -> Result<Self> {
        if r == 0 {
            return Err(Error::input("uniformity must be at least 1"));
        }
        Ok(Hypergraph {
            n,
            r,
            edges: BTreeSet::new(),
            pair_index: BTreeMap::new(),
        })
    }

    /// Builds a hypergraph from an edge list, rejecting duplicates.
    pub fn from_edges<E: AsRef<[usize]>>(n: usize, r: usize, edges: &[E]) -> Result<Self> {
        let mut h = Hypergraph::new(n, r)?;
        for e in edges {
            if !h.insert(e.as_ref())? {
                return Err(Error::input(format!(
                    "duplicate hyperedge {:?}",
                    e.as_ref()
                )));
            }
        }
        Ok(h)
    }

    /// The complete `r`-graph on `n` vertices.
    pub fn complete(n: usize, r: usize) -> Result<Self> {
        let mut h = Hypergraph::new(n, r)?;
        for e in (0..n).combinations(r) {
            h.insert(&e)?;
        }
        Ok(h)
    }

    pub fn from_graph(g: &Graph) -> Self {
        let mut h = Hypergraph::new(g.vertex_count(), 2).expect("r = 2");
        for p in g.edges() {
            h.insert(&[p.u(), p.v()]).expect("graph edges are valid");
        }
        h
    }

    /// The underlying graph of a 2-uniform hypergraph.
    pub fn to_graph(&self) -> Result<Graph> {
        self.require_uniformity(2)?;
        let mut g = Graph::new(self.n);
        for e in &self.edges {
            g.add_edge(e[0], e[1])?;
        }
        Ok(g)
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn uniformity(&self) -> usize {
        self.r
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn edges(&self) -> impl Iterator<Item = &HyperEdge> + '_ {
        self.edges.iter()
    }

    pub(crate) fn require_uniformity(&self, r: usize) -> Result<()> {
        if self.r != r {
            Err(Error::UnsupportedUniformity {
                expected: r,
                found: self.r,
            })
        } else {
            Ok(())
        }
    }

    pub(crate) fn check_vertex(&self, v: usize) -> Result<()> {
        if v >= self.n {
            Err(Error::VertexOutOfRange {
                vertex: v,
                n: self.n,
            })
        } else {
            Ok(())
        }
    }

    fn normalize(&self, vertices: &[usize]) -> Result<HyperEdge> {
        if vertices.len() != self.r {
            return Err(Error::input(format!(
                "hyperedge {vertices:?} has {} vertices, expected {}",
                vertices.len(),
                self.r
            )));
        }
        for &v in vertices {
            self.check_vertex(v)?;
        }
        HyperEdge::new(vertices)
    }

    /// Inserts a hyperedge. Returns `false` (and changes nothing) if it was
    /// already present.
    pub fn insert(&mut self, vertices: &[usize]) -> Result<bool> {
        let e = self.normalize(vertices)?;
        if self.edges.contains(&e) {
            return Ok(false);
        }
        for p in e.pairs() {
            let list = self.pair_index.entry(p).or_default();
            let pos = list.binary_search(&e).unwrap_err();
            list.insert(pos, e.clone());
        }
        self.edges.insert(e);
        Ok(true)
    }

    /// Removes a hyperedge; returns whether it was present.
    pub fn remove(&mut self, vertices: &[usize]) -> bool {
        let Ok(e) = self.normalize(vertices) else {
            return false;
        };
        if !self.edges.remove(&e) {
            return false;
        }
        for p in e.pairs() {
            if let Some(list) = self.pair_index.get_mut(&p) {
                if let Ok(pos) = list.binary_search(&e) {
                    list.remove(pos);
                }
                if list.is_empty() {
                    self.pair_index.remove(&p);
                }
            }
        }
        true
    }

    pub fn contains(&self, vertices: &[usize]) -> bool {
        match self.normalize(vertices) {
            Ok(e) => self.edges.contains(&e),
            Err(_) => false,
        }
    }

    /// Number of hyperedges containing both endpoints of `p`.
    pub fn heaviness(&self, p: Pair) -> Result<usize> {
        self.check_vertex(p.v())?;
        Ok(self.pair_index.get(&p).map_or(0, Vec::len))
    }

    /// At least `q` hyperedges contain `p`.
    pub fn is_heavy(&self, p: Pair, q: usize) -> Result<bool> {
        Ok(self.heaviness(p)? >= q)
    }

    /// At most `q` hyperedges contain `p`.
    pub fn is_light(&self, p: Pair, q: usize) -> Result<bool> {
        Ok(self.heaviness(p)? <= q)
    }

    /// Hyperedges containing `p`, sorted.
    pub fn edges_through(&self, p: Pair) -> &[HyperEdge] {
        self.pair_index.get(&p).map_or(&[], Vec::as_slice)
    }

    /// Pairs with positive heaviness, sorted.
    pub fn shadow(&self) -> impl Iterator<Item = Pair> + '_ {
        self.pair_index.keys().copied()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.edges.iter().filter(|e| e.contains(&v)).count()
    }

    /// `{w : p ∪ {w} ∈ H}` for a 3-graph.
    pub fn link_set(&self, p: Pair) -> Result<BTreeSet<usize>> {
        self.require_uniformity(3)?;
        self.check_vertex(p.v())?;
        Ok(self
            .edges_through(p)
            .iter()
            .map(|e| e.without(&[p.u(), p.v()])[0])
            .collect())
    }

    /// The link graph of `v` in a 3-graph.
    pub fn link_graph(&self, v: usize) -> Result<Graph> {
        self.require_uniformity(3)?;
        self.check_vertex(v)?;
        let mut g = Graph::new(self.n);
        for e in self.edges.iter().filter(|e| e.contains(&v)) {
            let rest = e.without(&[v]);
            g.add_edge(rest[0], rest[1])?;
        }
        Ok(g)
    }

    /// The `(r - |S|)`-graph of hyperedges containing `S`, with `S` removed.
    pub fn link_hypergraph(&self, s: &[usize]) -> Result<Hypergraph> {
        let set: BTreeSet<usize> = s.iter().copied().collect();
        if set.len() >= self.r {
            return Err(Error::input(format!(
                "link of a {}-set in a {}-graph is undefined",
                set.len(),
                self.r
            )));
        }
        for &v in &set {
            self.check_vertex(v)?;
        }
        let drop: Vec<usize> = set.iter().copied().collect();
        let mut link = Hypergraph::new(self.n, self.r - drop.len())?;
        let mut add = |e: &HyperEdge| -> Result<()> {
            if drop.iter().all(|x| e.contains(x)) {
                link.insert(&e.without(&drop))?;
            }
            Ok(())
        };
        if drop.len() >= 2 {
            for e in self.edges_through(Pair::of(drop[0], drop[1])) {
                add(e)?;
            }
        } else {
            for e in &self.edges {
                add(e)?;
            }
        }
        Ok(link)
    }

    /// Recomputes the pair index from the hyperedge set.
    pub fn rebuild_pair_index(&mut self) {
        self.pair_index = Self::index_of(&self.edges);
    }

    fn index_of(edges: &BTreeSet<HyperEdge>) -> BTreeMap<Pair, Vec<HyperEdge>> {
        let mut index: BTreeMap<Pair, Vec<HyperEdge>> = BTreeMap::new();
        for e in edges {
            for p in e.pairs() {
                index.entry(p).or_default().push(e.clone());
            }
        }
        index
    }

    /// True if the maintained pair index agrees with a full rescan.
    pub fn pair_index_consistent(&self) -> bool {
        Self::index_of(&self.edges) == self.pair_index
    }

    /// Relabels vertices through `map` (old → new) onto `n` vertices.
    pub fn relabel(&self, map: &[usize], n: usize) -> Result<Hypergraph> {
        let mut h = Hypergraph::new(n, self.r)?;
        for e in &self.edges {
            let img: Vec<usize> = e.iter().map(|&v| map[v]).collect();
            if !h.insert(&img)? {
                return Err(Error::input("relabelling is not injective"));
            }
        }
        Ok(h)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn pair(a: usize, b: usize) -> Pair {
        Pair::new(a, b).unwrap()
    }

    #[test]
    fn heaviness_single_edge() {
        let h = Hypergraph::from_edges(3, 3, &[[0, 1, 2]]).unwrap();
        assert_eq!(h.heaviness(pair(0, 1)).unwrap(), 1);
        assert!(h.is_heavy(pair(0, 1), 1).unwrap());
        assert!(h.is_light(pair(0, 1), 1).unwrap());
        assert!(!h.is_heavy(pair(0, 1), 2).unwrap());
    }

    #[test]
    fn heaviness_complete() {
        let h = Hypergraph::complete(7, 3).unwrap();
        for p in (0..7).tuple_combinations().map(|(a, b)| pair(a, b)) {
            assert_eq!(h.heaviness(p).unwrap(), 5);
        }
    }

    #[test]
    fn heaviness_out_of_range() {
        let h = Hypergraph::new(4, 3).unwrap();
        assert!(matches!(
            h.heaviness(pair(1, 9)),
            Err(Error::VertexOutOfRange { vertex: 9, .. })
        ));
    }

    #[test]
    fn insert_is_idempotent_and_validated() {
        let mut h = Hypergraph::new(5, 3).unwrap();
        assert!(h.insert(&[2, 0, 1]).unwrap());
        assert!(!h.insert(&[0, 1, 2]).unwrap());
        assert_eq!(h.edge_count(), 1);
        assert!(h.insert(&[0, 1]).is_err());
        assert!(h.insert(&[0, 1, 1]).is_err());
        assert!(h.insert(&[0, 1, 5]).is_err());
        assert!(h.remove(&[1, 2, 0]));
        assert!(!h.remove(&[1, 2, 0]));
        assert_eq!(h.heaviness(pair(0, 1)).unwrap(), 0);
        assert!(h.pair_index_consistent());
    }

    #[test]
    fn link_sets() {
        let h = Hypergraph::from_edges(4, 3, &[[0, 1, 2], [0, 1, 3]]).unwrap();
        assert_eq!(
            h.link_set(pair(0, 1)).unwrap(),
            BTreeSet::from([2, 3])
        );
        let h = Hypergraph::from_edges(3, 3, &[[0, 1, 2]]).unwrap();
        assert_eq!(h.link_set(pair(1, 2)).unwrap(), BTreeSet::from([0]));
        let h4 = Hypergraph::from_edges(4, 4, &[[0, 1, 2, 3]]).unwrap();
        assert!(matches!(
            h4.link_set(pair(0, 1)),
            Err(Error::UnsupportedUniformity { expected: 3, found: 4 })
        ));
    }

    #[test]
    fn link_graph_single_edge() {
        let h = Hypergraph::from_edges(3, 3, &[[0, 1, 2]]).unwrap();
        let g = h.link_graph(0).unwrap();
        assert_eq!(g.edge_count(), 1);
        assert!(g.has_edge(1, 2));
    }

    #[test]
    fn link_hypergraph_cases() {
        let h4 = Hypergraph::from_edges(4, 4, &[[0, 1, 2, 3]]).unwrap();
        let l = h4.link_hypergraph(&[0, 1]).unwrap();
        assert_eq!(l.uniformity(), 2);
        assert!(l.contains(&[2, 3]));
        assert_eq!(l.edge_count(), 1);

        let h = Hypergraph::from_edges(5, 3, &[[0, 1, 2], [0, 3, 4], [1, 2, 3]]).unwrap();
        assert_eq!(h.link_hypergraph(&[]).unwrap(), h);
        let l0 = h.link_hypergraph(&[0]).unwrap();
        assert_eq!(l0.to_graph().unwrap(), h.link_graph(0).unwrap());
        assert!(h.link_hypergraph(&[0, 1, 2]).is_err());
    }

    #[test]
    fn subedges_lex() {
        assert_eq!(
            subedges(&[0, 1, 2], 2),
            vec![vec![0, 1], vec![0, 2], vec![1, 2]]
        );
        assert_eq!(subedges(&[0, 1, 2, 3], 3).len(), 4);
        assert_eq!(subedges(&[2, 0, 1], 3), vec![vec![0, 1, 2]]);
    }

    fn arb_hypergraph(max_n: usize) -> impl Strategy<Value = Hypergraph> {
        (3..=max_n, 2usize..=4).prop_flat_map(|(n, r)| {
            let all: Vec<Vec<usize>> = (0..n).combinations(r.min(n)).collect();
            let len = all.len();
            proptest::collection::vec(any::<bool>(), len).prop_map(move |mask| {
                let mut h = Hypergraph::new(n, r.min(n)).unwrap();
                for (e, keep) in all.iter().zip(mask) {
                    if keep {
                        h.insert(e).unwrap();
                    }
                }
                h
            })
        })
    }

    proptest! {
        #[test]
        fn index_matches_rescan(h in arb_hypergraph(8)) {
            prop_assert!(h.pair_index_consistent());
            for p in (0..h.vertex_count()).tuple_combinations().map(|(a, b)| pair(a, b)) {
                let rescan = h.edges().filter(|e| e.contains(&p.u()) && e.contains(&p.v())).count();
                prop_assert_eq!(h.heaviness(p).unwrap(), rescan);
            }
        }

        #[test]
        fn heaviness_sum(h in arb_hypergraph(8)) {
            let r = h.uniformity();
            let total: usize = h.shadow().map(|p| h.heaviness(p).unwrap()).sum();
            prop_assert_eq!(total, r * (r - 1) / 2 * h.edge_count());
        }

        #[test]
        fn link_set_membership(h in arb_hypergraph(8)) {
            if h.uniformity() == 3 {
                let n = h.vertex_count();
                for (a, b) in (0..n).tuple_combinations() {
                    let link = h.link_set(pair(a, b)).unwrap();
                    prop_assert_eq!(link.len(), h.heaviness(pair(a, b)).unwrap());
                    for w in 0..n {
                        let member = w != a && w != b && h.contains(&[a, b, w]);
                        prop_assert_eq!(link.contains(&w), member);
                    }
                }
            }
        }

        #[test]
        fn link_hypergraph_uniformity(h in arb_hypergraph(7), v in 0usize..3) {
            let l = h.link_hypergraph(&[v]).unwrap();
            prop_assert_eq!(l.uniformity(), h.uniformity() - 1);
            prop_assert_eq!(l.edge_count(), h.degree(v));
        }

        #[test]
        fn removal_keeps_index(h in arb_hypergraph(7), k in 0usize..10) {
            let mut h = h;
            let victims: Vec<HyperEdge> = h.edges().step_by(k + 1).cloned().collect();
            for e in &victims {
                prop_assert!(h.remove(e));
            }
            prop_assert!(h.pair_index_consistent());
        }
    }
}
