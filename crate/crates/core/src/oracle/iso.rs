//! Isomorphism testing and canonical forms for small hypergraphs.

use std::collections::BTreeMap;

use itertools::Itertools;
use serde::Serialize;

use crate::hypercore::Hypergraph;

/// Backtracking nodes allowed before an isomorphism test on more than
/// [`EXACT_LIMIT`] vertices gives up.
pub const DEFAULT_NODE_LIMIT: u64 = 20_000_000;

/// Largest vertex count for which isomorphism tests always run to completion.
pub const EXACT_LIMIT: usize = 12;

/// Stable vertex colours from iterated refinement, as dense ranks.
///
/// The starting colour is the degree together with the multiset of pair
/// heavinesses at the vertex; each round appends the multiset of colour
/// patterns of the hyperedges through the vertex.
pub fn refine_colours(h: &Hypergraph) -> Vec<usize> {
    let n = h.vertex_count();
    let mut pair_heaviness: Vec<BTreeMap<usize, usize>> = vec![BTreeMap::new(); n];
    let mut incident: Vec<Vec<&[usize]>> = vec![Vec::new(); n];
    for e in h.edges() {
        for &v in e.iter() {
            incident[v].push(e);
            for &w in e.iter().filter(|&&w| w != v) {
                *pair_heaviness[v].entry(w).or_default() += 1;
            }
        }
    }
    let start: Vec<(usize, Vec<usize>)> = (0..n)
        .map(|v| {
            let mut hv: Vec<usize> = pair_heaviness[v].values().copied().collect();
            hv.sort_unstable();
            (incident[v].len(), hv)
        })
        .collect();
    let mut colours = ranks(&start);
    loop {
        let classes = colours.iter().unique().count();
        let sig: Vec<(usize, Vec<Vec<usize>>)> = (0..n)
            .map(|v| {
                let mut around: Vec<Vec<usize>> = incident[v]
                    .iter()
                    .map(|e| {
                        let mut c: Vec<usize> =
                            e.iter().filter(|&&w| w != v).map(|&w| colours[w]).collect();
                        c.sort_unstable();
                        c
                    })
                    .collect();
                around.sort_unstable();
                (colours[v], around)
            })
            .collect();
        let next = ranks(&sig);
        if next.iter().unique().count() == classes {
            return colours;
        }
        colours = next;
    }
}

fn ranks<T: Ord>(keys: &[T]) -> Vec<usize> {
    let sorted: Vec<&T> = keys.iter().sorted().dedup().collect();
    keys.iter()
        .map(|k| sorted.binary_search(&k).expect("key present"))
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IsoVerdict {
    pub isomorphic: bool,
    /// `mapping[v]` is the image in the second hypergraph of vertex `v` of
    /// the first.
    pub mapping: Option<Vec<usize>>,
    /// False when the search stopped at its node limit; `isomorphic` is
    /// then `false` without proof.
    pub exact: bool,
}

impl IsoVerdict {
    fn no() -> Self {
        IsoVerdict {
            isomorphic: false,
            mapping: None,
            exact: true,
        }
    }
}

struct IsoSearch<'a> {
    b: &'a Hypergraph,
    ca: Vec<usize>,
    cb: Vec<usize>,
    order: Vec<usize>,
    closes: Vec<Vec<Vec<usize>>>,
    map: Vec<usize>,
    used: Vec<bool>,
    nodes: u64,
    limit: Option<u64>,
    stopped: bool,
}

impl IsoSearch<'_> {
    fn run(&mut self, depth: usize) -> bool {
        if depth == self.order.len() {
            return true;
        }
        let u = self.order[depth];
        for x in 0..self.b.vertex_count() {
            if self.used[x] || self.cb[x] != self.ca[u] {
                continue;
            }
            self.nodes += 1;
            if self.limit.is_some_and(|l| self.nodes > l) {
                self.stopped = true;
                return false;
            }
            self.map[u] = x;
            self.used[x] = true;
            let ok = self.closes[depth].iter().all(|e| {
                let mut img: Vec<usize> = e.iter().map(|&v| self.map[v]).collect();
                img.sort_unstable();
                self.b.contains(&img)
            });
            if ok && self.run(depth + 1) {
                return true;
            }
            self.used[x] = false;
            if self.stopped {
                return false;
            }
        }
        false
    }
}

/// Decides whether some bijection carries the hyperedges of `a` onto those
/// of `b`. Searches on more than [`EXACT_LIMIT`] vertices stop after
/// [`DEFAULT_NODE_LIMIT`] nodes.
pub fn is_isomorphic(a: &Hypergraph, b: &Hypergraph) -> IsoVerdict {
    let limit = (a.vertex_count() > EXACT_LIMIT).then_some(DEFAULT_NODE_LIMIT);
    is_isomorphic_with_limit(a, b, limit)
}

pub fn is_isomorphic_with_limit(a: &Hypergraph, b: &Hypergraph, limit: Option<u64>) -> IsoVerdict {
    let n = a.vertex_count();
    if n != b.vertex_count()
        || a.uniformity() != b.uniformity()
        || a.edge_count() != b.edge_count()
    {
        return IsoVerdict::no();
    }
    let ca = refine_colours(a);
    let cb = refine_colours(b);
    if ca.iter().sorted().collect_vec() != cb.iter().sorted().collect_vec() {
        return IsoVerdict::no();
    }
    let class_size = ca.iter().counts();
    let mut order: Vec<usize> = Vec::with_capacity(n);
    let mut placed = vec![false; n];
    let edges: Vec<&[usize]> = a.edges().map(|e| &**e).collect();
    while order.len() < n {
        let next = (0..n)
            .filter(|&v| !placed[v])
            .max_by_key(|&v| {
                let touching = edges
                    .iter()
                    .filter(|e| e.contains(&v) && e.iter().any(|&u| placed[u]))
                    .count();
                (touching, std::cmp::Reverse(class_size[&ca[v]]), std::cmp::Reverse(v))
            })
            .expect("vertex remains");
        placed[next] = true;
        order.push(next);
    }
    let mut pos = vec![0; n];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    let mut closes = vec![Vec::new(); n];
    for e in &edges {
        if let Some(last) = e.iter().map(|&v| pos[v]).max() {
            closes[last].push(e.to_vec());
        }
    }
    let mut s = IsoSearch {
        b,
        ca,
        cb,
        order,
        closes,
        map: vec![usize::MAX; n],
        used: vec![false; n],
        nodes: 0,
        limit,
        stopped: false,
    };
    if s.run(0) {
        IsoVerdict {
            isomorphic: true,
            mapping: Some(s.map),
            exact: true,
        }
    } else {
        IsoVerdict {
            isomorphic: false,
            mapping: None,
            exact: !s.stopped,
        }
    }
}

/// A key that is equal for two hypergraphs exactly when they are
/// isomorphic.
///
/// `edges` is the hypergraph relabelled by the labelling that, among those
/// listing the refined colour classes in order, maximizes the incidence
/// vector of `r`-sets in colexicographic order.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct CanonicalForm {
    pub n: usize,
    pub r: usize,
    /// Sorted degree sequence.
    pub degrees: Vec<usize>,
    pub edges: Vec<Vec<usize>>,
}

struct Canon<'a> {
    h: &'a Hypergraph,
    r: usize,
    /// Vertices in colour order, grouped into cells.
    cells: Vec<Vec<usize>>,
    twin_class: Vec<usize>,
    labels: Vec<usize>,
    labelled: Vec<bool>,
    cur: Vec<bool>,
    best: Option<Vec<bool>>,
    best_labels: Vec<usize>,
}

impl Canon<'_> {
    fn cell_of_level(&self, k: usize) -> usize {
        let mut acc = 0;
        for (i, c) in self.cells.iter().enumerate() {
            acc += c.len();
            if k < acc {
                return i;
            }
        }
        unreachable!("level within vertex count")
    }

    /// Bits for the `r`-sets whose largest label is `k`, in colex order.
    fn bits_for(&self, k: usize, v: usize) -> Vec<bool> {
        if self.r == 0 || k + 1 < self.r {
            return Vec::new();
        }
        let mut out = Vec::new();
        let mut sets: Vec<Vec<usize>> = (0..k).combinations(self.r - 1).collect();
        sets.sort_by(|a, b| a.iter().rev().cmp(b.iter().rev()));
        for s in sets {
            let mut e: Vec<usize> = s.iter().map(|&l| self.labels[l]).collect();
            e.push(v);
            e.sort_unstable();
            out.push(self.h.contains(&e));
        }
        out
    }

    fn run(&mut self, k: usize, ahead: bool) {
        let n = self.h.vertex_count();
        if k == n {
            if ahead || self.best.is_none() {
                self.best = Some(self.cur.clone());
                self.best_labels = self.labels.clone();
            }
            return;
        }
        let cell = self.cell_of_level(k);
        let mut tried: Vec<usize> = Vec::new();
        for i in 0..self.cells[cell].len() {
            let v = self.cells[cell][i];
            if self.labelled[v] || tried.contains(&self.twin_class[v]) {
                continue;
            }
            tried.push(self.twin_class[v]);
            let bits = self.bits_for(k, v);
            let start = self.cur.len();
            self.cur.extend(&bits);
            let mut now_ahead = ahead;
            if !ahead {
                if let Some(best) = &self.best {
                    match self.cur[start..].cmp(&best[start..self.cur.len()]) {
                        std::cmp::Ordering::Less => {
                            self.cur.truncate(start);
                            continue;
                        }
                        std::cmp::Ordering::Greater => now_ahead = true,
                        std::cmp::Ordering::Equal => {}
                    }
                }
            }
            self.labels.push(v);
            self.labelled[v] = true;
            self.run(k + 1, now_ahead);
            self.labelled[v] = false;
            self.labels.pop();
            self.cur.truncate(start);
        }
    }
}

/// Whether swapping `x` and `y` maps `h` onto itself.
fn swap_is_automorphism(h: &Hypergraph, x: usize, y: usize) -> bool {
    h.edges().all(|e| {
        let has_x = e.contains(&x);
        let has_y = e.contains(&y);
        if has_x == has_y {
            return true;
        }
        let mut img: Vec<usize> = e
            .iter()
            .map(|&v| if v == x { y } else if v == y { x } else { v })
            .collect();
        img.sort_unstable();
        h.contains(&img)
    })
}

pub fn canonical_form(h: &Hypergraph) -> CanonicalForm {
    let n = h.vertex_count();
    let colours = refine_colours(h);
    let mut cells: Vec<Vec<usize>> = Vec::new();
    for (_, group) in &(0..n).sorted_by_key(|&v| (colours[v], v)).chunk_by(|&v| colours[v]) {
        cells.push(group.collect());
    }
    let mut twin_class: Vec<usize> = (0..n).collect();
    for cell in &cells {
        for (i, &x) in cell.iter().enumerate() {
            if let Some(&y) = cell[..i]
                .iter()
                .find(|&&y| twin_class[y] == y && swap_is_automorphism(h, x, y))
            {
                twin_class[x] = y;
            }
        }
    }
    let mut c = Canon {
        h,
        r: h.uniformity(),
        cells,
        twin_class,
        labels: Vec::with_capacity(n),
        labelled: vec![false; n],
        cur: Vec::new(),
        best: None,
        best_labels: Vec::new(),
    };
    c.run(0, false);
    let mut new_label = vec![0; n];
    for (l, &v) in c.best_labels.iter().enumerate() {
        new_label[v] = l;
    }
    let edges: Vec<Vec<usize>> = h
        .edges()
        .map(|e| {
            let mut img: Vec<usize> = e.iter().map(|&v| new_label[v]).collect();
            img.sort_unstable();
            img
        })
        .sorted()
        .collect();
    let mut degrees: Vec<usize> = (0..n).map(|v| h.degree(v)).collect();
    degrees.sort_unstable();
    CanonicalForm {
        n,
        r: h.uniformity(),
        degrees,
        edges,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gallery::{expand, hyperfan, random, star_cover, t_fan};

    fn shuffled(h: &Hypergraph, seed: u64) -> Hypergraph {
        use rand::seq::SliceRandom;
        let mut perm: Vec<usize> = (0..h.vertex_count()).collect();
        perm.shuffle(&mut random::rng(seed));
        h.relabel(&perm, h.vertex_count()).unwrap()
    }

    #[test]
    fn self_and_relabelled() {
        let h = star_cover(8, 2, 3).unwrap();
        assert!(is_isomorphic(&h, &h).isomorphic);
        let g = shuffled(&h, 3);
        let v = is_isomorphic(&h, &g);
        assert!(v.isomorphic && v.exact);
        let m = v.mapping.unwrap();
        assert_eq!(h.relabel(&m, 8).unwrap(), g);
    }

    #[test]
    fn different_counts() {
        let a = Hypergraph::from_edges(5, 3, &[[0, 1, 2]]).unwrap();
        let b = Hypergraph::from_edges(5, 3, &[[0, 1, 2], [2, 3, 4]]).unwrap();
        let v = is_isomorphic(&a, &b);
        assert!(!v.isomorphic && v.exact);
    }

    #[test]
    fn hyperfan_specializes() {
        for t in 1..=3 {
            let (f, _) = expand(&t_fan(t).unwrap().graph, 3).unwrap();
            assert!(is_isomorphic(&hyperfan(t, 3).unwrap(), &f).isomorphic, "t={t}");
        }
    }

    #[test]
    fn canonical_form_matches_isomorphism() {
        let mut rng = random::rng(5);
        for seed in 0..60 {
            let a = random::hypergraph(7, 3, 0.25, &mut rng);
            let b = if seed % 2 == 0 {
                shuffled(&a, seed)
            } else {
                random::hypergraph(7, 3, 0.25, &mut rng)
            };
            let same = canonical_form(&a) == canonical_form(&b);
            assert_eq!(same, is_isomorphic(&a, &b).isomorphic, "seed {seed}");
        }
    }

    #[test]
    fn canonical_form_of_symmetric() {
        let h = star_cover(12, 3, 3).unwrap();
        let c = canonical_form(&h);
        assert_eq!(c, canonical_form(&shuffled(&h, 9)));
        assert_eq!(c.edges.len(), h.edge_count());
    }
}
