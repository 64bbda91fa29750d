//! Injective copies of an arbitrary hypergraph pattern in a host.

use itertools::Itertools;

use crate::hypercore::Hypergraph;

const UNSET: usize = usize::MAX;

struct Mono<'a> {
    host: &'a Hypergraph,
    order: Vec<usize>,
    /// Pattern edges whose last vertex in `order` sits at each depth.
    closes: Vec<Vec<usize>>,
    pattern_edges: Vec<Vec<usize>>,
    map: Vec<usize>,
    used: Vec<bool>,
    host_degree: Vec<usize>,
    pattern_degree: Vec<usize>,
}

fn degrees(h: &Hypergraph) -> Vec<usize> {
    let mut d = vec![0; h.vertex_count()];
    for e in h.edges() {
        for &v in e.iter() {
            d[v] += 1;
        }
    }
    d
}

impl<'a> Mono<'a> {
    fn new(host: &'a Hypergraph, pattern: &'a Hypergraph, prefix: &[usize]) -> Self {
        let k = pattern.vertex_count();
        let pattern_edges: Vec<Vec<usize>> = pattern.edges().map(|e| e.to_vec()).collect();
        let pattern_degree = degrees(pattern);
        let mut order: Vec<usize> = prefix.to_vec();
        let mut placed = vec![false; k];
        for &v in prefix {
            placed[v] = true;
        }
        while order.len() < k {
            let next = (0..k)
                .filter(|&v| !placed[v])
                .max_by_key(|&v| {
                    let touching = pattern_edges
                        .iter()
                        .filter(|e| e.contains(&v) && e.iter().any(|&u| placed[u]))
                        .count();
                    (touching, pattern_degree[v], std::cmp::Reverse(v))
                })
                .expect("unplaced vertex remains");
            placed[next] = true;
            order.push(next);
        }
        let mut pos = vec![0; k];
        for (i, &v) in order.iter().enumerate() {
            pos[v] = i;
        }
        let mut closes = vec![Vec::new(); k];
        for (i, e) in pattern_edges.iter().enumerate() {
            if let Some(last) = e.iter().map(|&v| pos[v]).max() {
                closes[last].push(i);
            }
        }
        Mono {
            host,
            order,
            closes,
            pattern_edges,
            map: vec![UNSET; k],
            used: vec![false; host.vertex_count()],
            host_degree: degrees(host),
            pattern_degree,
        }
    }

    fn closes_ok(&self, depth: usize) -> bool {
        self.closes[depth].iter().all(|&i| {
            let mut img: Vec<usize> = self.pattern_edges[i].iter().map(|&v| self.map[v]).collect();
            img.sort_unstable();
            self.host.contains(&img)
        })
    }

    fn run(&mut self, depth: usize) -> bool {
        if depth == self.order.len() {
            return true;
        }
        let u = self.order[depth];
        let need = self.pattern_degree[u];
        for x in 0..self.host.vertex_count() {
            if self.used[x] || self.host_degree[x] < need {
                continue;
            }
            self.map[u] = x;
            self.used[x] = true;
            if self.closes_ok(depth) && self.run(depth + 1) {
                return true;
            }
            self.used[x] = false;
        }
        self.map[u] = UNSET;
        false
    }
}

/// An injective vertex map taking every hyperedge of `pattern` to a
/// hyperedge of `host`, indexed by pattern vertex.
pub fn find_subhypergraph(host: &Hypergraph, pattern: &Hypergraph) -> Option<Vec<usize>> {
    if pattern.uniformity() != host.uniformity() || pattern.vertex_count() > host.vertex_count() {
        return None;
    }
    let mut m = Mono::new(host, pattern, &[]);
    m.run(0).then_some(m.map)
}

/// As [`find_subhypergraph`], restricted to copies that use the host
/// hyperedge `edge`.
pub fn find_subhypergraph_through(
    host: &Hypergraph,
    pattern: &Hypergraph,
    edge: &[usize],
) -> Option<Vec<usize>> {
    if pattern.uniformity() != host.uniformity()
        || pattern.vertex_count() > host.vertex_count()
        || !host.contains(edge)
    {
        return None;
    }
    for pe in pattern.edges() {
        let mut m = Mono::new(host, pattern, pe);
        for image in edge.iter().copied().permutations(edge.len()) {
            for (&u, &x) in pe.iter().zip(&image) {
                m.map[u] = x;
                m.used[x] = true;
            }
            let ok = (0..pe.len()).all(|d| m.closes_ok(d));
            if ok && m.run(pe.len()) {
                return Some(m.map);
            }
            for (&u, &x) in pe.iter().zip(&image) {
                m.map[u] = UNSET;
                m.used[x] = false;
            }
        }
    }
    None
}
