//! Exhaustive search for copies of `F^r`.
//!
//! Core vertices are placed one at a time, most constrained first; every
//! placed core edge must have positive heaviness. For `r = 3` the extension
//! vertices form a system of distinct representatives over the link sets of
//! the placed core edges, maintained as a bipartite matching that is
//! repaired by augmenting paths after each placement. For other `r` each
//! placed edge must keep at least one usable extension set, and the disjoint
//! extension sets are chosen by backtracking once the core is complete.

use std::collections::BTreeMap;

use super::Embedding;
use crate::hypercore::{Graph, Hypergraph, Pair};

const NONE: usize = usize::MAX;

/// Heaviness counts and extension options per vertex pair, updated as
/// hyperedges are added and removed.
#[derive(Debug, Clone)]
struct LinkTables {
    n: usize,
    heaviness: Vec<u32>,
    options: Vec<Vec<Box<[usize]>>>,
}

impl LinkTables {
    fn new(n: usize) -> Self {
        LinkTables {
            n,
            heaviness: vec![0; n * n],
            options: vec![Vec::new(); n * n],
        }
    }

    #[inline]
    fn id(&self, a: usize, b: usize) -> usize {
        if a < b {
            a * self.n + b
        } else {
            b * self.n + a
        }
    }

    #[inline]
    fn adjacent(&self, a: usize, b: usize) -> bool {
        self.heaviness[a * self.n + b] > 0
    }

    fn insert(&mut self, edge: &[usize]) {
        for (i, &a) in edge.iter().enumerate() {
            for &b in &edge[i + 1..] {
                let rest: Box<[usize]> = edge.iter().copied().filter(|&x| x != a && x != b).collect();
                let id = self.id(a, b);
                self.options[id].push(rest);
                self.heaviness[a * self.n + b] += 1;
                self.heaviness[b * self.n + a] += 1;
            }
        }
    }

    fn remove(&mut self, edge: &[usize]) {
        for (i, &a) in edge.iter().enumerate() {
            for &b in &edge[i + 1..] {
                let id = self.id(a, b);
                let list = &mut self.options[id];
                if let Some(pos) = list
                    .iter()
                    .rposition(|o| o.iter().all(|x| edge.contains(x)))
                {
                    list.remove(pos);
                    self.heaviness[a * self.n + b] -= 1;
                    self.heaviness[b * self.n + a] -= 1;
                }
            }
        }
    }
}

/// Placement order and the bookkeeping derived from it.
#[derive(Debug, Clone)]
struct Plan {
    order: Vec<usize>,
    /// Core neighbours of `order[i]` placed before it.
    earlier: Vec<Vec<usize>>,
    /// Core edges (indices) whose second endpoint is `order[i]`.
    completes: Vec<Vec<usize>>,
    /// Core edge pre-assigned to a fixed hyperedge, with its endpoints at
    /// `order[0]` and `order[1]`.
    forced: Option<usize>,
}

impl Plan {
    fn new(f: &Graph, edges: &[Pair], forced: Option<usize>) -> Self {
        let k = f.vertex_count();
        let mut placed = vec![false; k];
        let mut order = Vec::with_capacity(k);
        if let Some(e) = forced {
            order.extend([edges[e].u(), edges[e].v()]);
            placed[edges[e].u()] = true;
            placed[edges[e].v()] = true;
        }
        while order.len() < k {
            let next = (0..k)
                .filter(|&x| !placed[x])
                .max_by_key(|&x| {
                    let back = f.neighbors(x).filter(|&y| placed[y]).count();
                    (back, f.degree(x), std::cmp::Reverse(x))
                })
                .expect("unplaced vertex remains");
            placed[next] = true;
            order.push(next);
        }
        let mut pos = vec![0; k];
        for (i, &x) in order.iter().enumerate() {
            pos[x] = i;
        }
        let earlier = order
            .iter()
            .map(|&x| {
                let mut nb: Vec<usize> = f.neighbors(x).filter(|&y| pos[y] < pos[x]).collect();
                nb.sort_by_key(|&y| pos[y]);
                nb
            })
            .collect();
        let mut completes = vec![Vec::new(); k];
        for (idx, e) in edges.iter().enumerate() {
            if Some(idx) == forced {
                continue;
            }
            completes[pos[e.u()].max(pos[e.v()])].push(idx);
        }
        Plan {
            order,
            earlier,
            completes,
            forced,
        }
    }
}

/// Mutable search state, reused across searches.
#[derive(Debug, Clone, Default)]
struct State {
    img: Vec<usize>,
    core_used: Vec<bool>,
    blocked: Vec<bool>,
    ext_of: Vec<usize>,
    owner: Vec<usize>,
    seen: Vec<u32>,
    stamp: u32,
    snapshots: Vec<Vec<usize>>,
    nodes: u64,
}

impl State {
    fn reset(&mut self, k: usize, n: usize, m: usize) {
        self.img.clear();
        self.img.resize(k, NONE);
        self.core_used.clear();
        self.core_used.resize(n, false);
        self.blocked.clear();
        self.blocked.resize(n, false);
        self.ext_of.clear();
        self.ext_of.resize(m, NONE);
        self.owner.clear();
        self.owner.resize(n, NONE);
        if self.seen.len() != n {
            self.seen = vec![0; n];
            self.stamp = 0;
        }
        self.snapshots.resize(k, Vec::new());
    }
}

struct Search<'a> {
    tables: &'a LinkTables,
    plan: &'a Plan,
    edges: &'a [Pair],
    r: usize,
    st: &'a mut State,
}

impl Search<'_> {
    fn run(&mut self, depth: usize) -> bool {
        self.st.nodes += 1;
        if depth == self.plan.order.len() {
            return self.r == 3 || self.assign_general();
        }
        let x = self.plan.order[depth];
        let anchor = self.plan.earlier[depth].first().map(|&y| self.st.img[y]);
        for h in 0..self.tables.n {
            if self.st.core_used[h] || self.st.blocked[h] {
                continue;
            }
            if let Some(a) = anchor {
                if !self.tables.adjacent(a, h) {
                    continue;
                }
            }
            if !self.plan.earlier[depth]
                .iter()
                .skip(1)
                .all(|&y| self.tables.adjacent(self.st.img[y], h))
            {
                continue;
            }
            if self.place(depth, x, h) && self.run(depth + 1) {
                return true;
            }
            self.unplace(depth, x, h);
        }
        false
    }

    fn place(&mut self, depth: usize, x: usize, h: usize) -> bool {
        let st = &mut *self.st;
        st.img[x] = h;
        st.core_used[h] = true;
        if self.r != 3 {
            return self.plan.completes[depth].iter().all(|&e| {
                let (a, b) = self.endpoints(e);
                self.tables.options[self.tables.id(a, b)]
                    .iter()
                    .any(|o| o.iter().all(|&v| !self.st.core_used[v] && !self.st.blocked[v]))
            });
        }
        st.snapshots[depth].clone_from(&st.ext_of);
        let displaced = st.owner[h];
        if displaced != NONE {
            st.owner[h] = NONE;
            st.ext_of[displaced] = NONE;
            if !self.augment_fresh(displaced) {
                return false;
            }
        }
        let plan = self.plan;
        plan.completes[depth].iter().all(|&e| self.augment_fresh(e))
    }

    fn unplace(&mut self, depth: usize, x: usize, h: usize) {
        let st = &mut *self.st;
        st.img[x] = NONE;
        st.core_used[h] = false;
        if self.r != 3 {
            return;
        }
        for &w in &st.ext_of {
            if w != NONE {
                st.owner[w] = NONE;
            }
        }
        std::mem::swap(&mut st.ext_of, &mut st.snapshots[depth]);
        for (e, &w) in st.ext_of.iter().enumerate() {
            if w != NONE {
                st.owner[w] = e;
            }
        }
    }

    fn endpoints(&self, e: usize) -> (usize, usize) {
        let p = self.edges[e];
        (self.st.img[p.u()], self.st.img[p.v()])
    }

    fn augment_fresh(&mut self, e: usize) -> bool {
        self.st.stamp = self.st.stamp.wrapping_add(1);
        if self.st.stamp == 0 {
            self.st.seen.iter_mut().for_each(|s| *s = 0);
            self.st.stamp = 1;
        }
        self.augment(e)
    }

    fn augment(&mut self, e: usize) -> bool {
        let (a, b) = self.endpoints(e);
        let tables = self.tables;
        for opt in &tables.options[tables.id(a, b)] {
            let w = opt[0];
            if self.st.core_used[w] || self.st.blocked[w] || self.st.seen[w] == self.st.stamp {
                continue;
            }
            self.st.seen[w] = self.st.stamp;
            let prev = self.st.owner[w];
            if prev == NONE || self.augment(prev) {
                self.st.owner[w] = e;
                self.st.ext_of[e] = w;
                return true;
            }
        }
        false
    }

    /// Chooses pairwise disjoint extension sets for every unforced core edge.
    fn assign_general(&mut self) -> bool {
        let todo: Vec<usize> = (0..self.edges.len())
            .filter(|&e| Some(e) != self.plan.forced)
            .collect();
        let mut chosen = vec![NONE; self.edges.len()];
        let mut ext_used = vec![false; self.tables.n];
        if self.assign_from(&todo, 0, &mut chosen, &mut ext_used) {
            self.st.ext_of = chosen;
            true
        } else {
            false
        }
    }

    fn assign_from(
        &mut self,
        todo: &[usize],
        i: usize,
        chosen: &mut [usize],
        ext_used: &mut [bool],
    ) -> bool {
        let Some(&e) = todo.get(i) else {
            return true;
        };
        let (a, b) = self.endpoints(e);
        let tables = self.tables;
        let opts = &tables.options[tables.id(a, b)];
        for (k, opt) in opts.iter().enumerate() {
            let free = opt
                .iter()
                .all(|&v| !self.st.core_used[v] && !self.st.blocked[v] && !ext_used[v]);
            if !free {
                continue;
            }
            opt.iter().for_each(|&v| ext_used[v] = true);
            chosen[e] = k;
            if self.assign_from(todo, i + 1, chosen, ext_used) {
                return true;
            }
            opt.iter().for_each(|&v| ext_used[v] = false);
        }
        chosen[e] = NONE;
        false
    }

    fn embedding(&self, forced_ext: &[usize]) -> Embedding {
        let mut extension_map = BTreeMap::new();
        for (idx, &e) in self.edges.iter().enumerate() {
            let ext = if Some(idx) == self.plan.forced {
                forced_ext.to_vec()
            } else if self.r == 3 {
                vec![self.st.ext_of[idx]]
            } else {
                let (a, b) = self.endpoints(idx);
                let mut v = self.tables.options[self.tables.id(a, b)][self.st.ext_of[idx]].to_vec();
                v.sort_unstable();
                v
            };
            extension_map.insert(e, ext);
        }
        Embedding {
            core_map: self.st.img.clone(),
            extension_map,
        }
    }
}

/// Reusable containment tester for a fixed core graph `F` and uniformity
/// `r`, over a host hypergraph that can grow and shrink.
#[derive(Debug, Clone)]
pub struct ExpansionChecker {
    f: Graph,
    edges: Vec<Pair>,
    r: usize,
    tables: LinkTables,
    free_plan: Plan,
    forced_plans: Vec<Plan>,
    state: State,
}

impl ExpansionChecker {
    /// A checker over the empty host on `n` vertices.
    pub fn new(f: &Graph, n: usize, r: usize) -> Self {
        let edges: Vec<Pair> = f.edges().collect();
        let forced_plans = (0..edges.len())
            .map(|e| Plan::new(f, &edges, Some(e)))
            .collect();
        ExpansionChecker {
            free_plan: Plan::new(f, &edges, None),
            forced_plans,
            f: f.clone(),
            edges,
            r,
            tables: LinkTables::new(n),
            state: State::default(),
        }
    }

    pub fn for_host(f: &Graph, h: &Hypergraph) -> Self {
        let mut c = ExpansionChecker::new(f, h.vertex_count(), h.uniformity());
        for e in h.edges() {
            c.insert(e);
        }
        c
    }

    pub fn insert(&mut self, edge: &[usize]) {
        self.tables.insert(edge);
    }

    /// Removes a hyperedge previously passed to [`Self::insert`].
    pub fn remove(&mut self, edge: &[usize]) {
        self.tables.remove(edge);
    }

    /// Search nodes visited since construction.
    pub fn nodes(&self) -> u64 {
        self.state.nodes
    }

    fn fits(&self) -> bool {
        let need = self.f.vertex_count() + self.edges.len() * self.r.saturating_sub(2);
        need <= self.tables.n
    }

    /// Any copy of `F^r` in the current host.
    pub fn find(&mut self) -> Option<Embedding> {
        if !self.fits() {
            return None;
        }
        let n = self.tables.n;
        self.state.reset(self.f.vertex_count(), n, self.edges.len());
        let mut s = Search {
            tables: &self.tables,
            plan: &self.free_plan,
            edges: &self.edges,
            r: self.r,
            st: &mut self.state,
        };
        if s.run(0) {
            Some(s.embedding(&[]))
        } else {
            None
        }
    }

    /// A copy of `F^r` that uses `edge` (already inserted) as the image of
    /// some core edge.
    pub fn find_through(&mut self, edge: &[usize]) -> Option<Embedding> {
        if !self.fits() || edge.len() != self.r || self.r < 2 {
            return None;
        }
        let n = self.tables.n;
        let k = self.f.vertex_count();
        for (idx, plan) in self.forced_plans.iter().enumerate() {
            let (x, y) = (self.edges[idx].u(), self.edges[idx].v());
            for (i, &a) in edge.iter().enumerate() {
                for (j, &b) in edge.iter().enumerate() {
                    if i == j {
                        continue;
                    }
                    self.state.reset(k, n, self.edges.len());
                    let rest: Vec<usize> =
                        edge.iter().copied().filter(|&v| v != a && v != b).collect();
                    for &v in &rest {
                        self.state.blocked[v] = true;
                    }
                    self.state.img[x] = a;
                    self.state.img[y] = b;
                    self.state.core_used[a] = true;
                    self.state.core_used[b] = true;
                    let mut s = Search {
                        tables: &self.tables,
                        plan,
                        edges: &self.edges,
                        r: self.r,
                        st: &mut self.state,
                    };
                    if s.run(2) {
                        return Some(s.embedding(&rest));
                    }
                }
            }
        }
        None
    }
}

/// A copy of `F^r` in `h` (with `r` the uniformity of `h`), or `None` if
/// `h` is `F^r`-free. The search is exhaustive.
pub fn contains_expansion(h: &Hypergraph, f: &Graph) -> Option<Embedding> {
    ExpansionChecker::for_host(f, h).find()
}

/// A copy of `F^r` in `h` in which the hyperedge `edge` of `h` plays the
/// role of some core edge.
pub fn contains_expansion_through(h: &Hypergraph, f: &Graph, edge: &[usize]) -> Option<Embedding> {
    if !h.contains(edge) {
        return None;
    }
    let mut sorted = edge.to_vec();
    sorted.sort_unstable();
    ExpansionChecker::for_host(f, h).find_through(&sorted)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gallery::{expand, path_graph, star_cover, t_fan, triangle};

    #[test]
    fn finds_identity_copy() {
        let f = t_fan(2).unwrap().graph;
        let (h, _) = expand(&f, 3).unwrap();
        let emb = contains_expansion(&h, &f).expect("copy exists");
        emb.validate(&h, &f).unwrap();
    }

    #[test]
    fn star_cover_is_free() {
        let f = t_fan(2).unwrap().graph;
        let h = star_cover(11, 2, 3).unwrap();
        assert!(contains_expansion(&h, &f).is_none());
    }

    #[test]
    fn complete_host_contains() {
        let f = t_fan(2).unwrap().graph;
        let h = Hypergraph::complete(11, 3).unwrap();
        let emb = contains_expansion(&h, &f).unwrap();
        emb.validate(&h, &f).unwrap();
        assert!(contains_expansion(&Hypergraph::complete(10, 3).unwrap(), &f).is_none());
    }

    #[test]
    fn general_uniformity() {
        for r in [2, 4, 5] {
            let f = path_graph(3);
            let (h, _) = expand(&f, r).unwrap();
            let emb = contains_expansion(&h, &f).unwrap();
            emb.validate(&h, &f).unwrap();
            let (k3, _) = expand(&triangle(), r).unwrap();
            assert!(contains_expansion(&k3, &f).is_some());
            assert!(contains_expansion(&h, &triangle()).is_none());
        }
    }

    #[test]
    fn through_edge() {
        let f = triangle();
        let mut h = Hypergraph::from_edges(9, 3, &[[0, 1, 3], [0, 2, 4], [1, 2, 5]]).unwrap();
        h.insert(&[6, 7, 8]).unwrap();
        // core {2, 4, 5} with added vertices {0, 1, 6}
        h.insert(&[4, 5, 6]).unwrap();
        assert!(contains_expansion_through(&h, &f, &[0, 1, 3]).is_some());
        let emb = contains_expansion_through(&h, &f, &[4, 5, 6]).unwrap();
        emb.validate(&h, &f).unwrap();
        assert!(contains_expansion_through(&h, &f, &[6, 7, 8]).is_none());
        assert!(contains_expansion_through(&h, &f, &[0, 1, 2]).is_none());
    }

    #[test]
    fn checker_tracks_removals() {
        let f = triangle();
        let mut c = ExpansionChecker::new(&f, 6, 3);
        for e in [[0, 1, 3], [0, 2, 4], [1, 2, 5]] {
            c.insert(&e);
        }
        assert!(c.find().is_some());
        c.remove(&[0, 2, 4]);
        assert!(c.find().is_none());
        c.insert(&[0, 2, 4]);
        assert!(c.find_through(&[0, 2, 4]).is_some());
    }
}
