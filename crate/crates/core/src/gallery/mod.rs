//! Deterministic constructors for the graph and hypergraph families used
//! throughout the crate.
//!
//! Labelings are fixed so that outputs are reproducible:
//! * fans and `(t,k)`-fans have center `0`; clique `j` (1-based) occupies
//!   the next `k - 1` labels, so triangle `j` of the `t`-fan is `{0, 2j-1, 2j}`;
//! * expansions keep the core vertices `0..|V(F)|` and append extension
//!   vertices in lexicographic edge order;
//! * the star-cover construction uses `U = {0, .., t-1}`.

mod family;
pub mod random;

use std::collections::BTreeMap;

use itertools::Itertools;
use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::hypercore::{Graph, HyperEdge, Hypergraph, Pair};

pub use family::FamilySpec;

/// A graph with a designated center vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CenteredGraph {
    pub graph: Graph,
    pub center: usize,
}

/// Records how a core graph sits inside its (partial) expansion.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct CoreMap {
    /// Image of each core vertex, indexed by core vertex.
    pub core_vertices: Vec<usize>,
    /// Added vertices of every enlarged core edge, keyed by the core edge.
    pub edge_extensions: BTreeMap<Pair, Vec<usize>>,
    pub center: Option<usize>,
}

impl CoreMap {
    /// Checks the disjointness invariants for `r`-expansions.
    pub fn validate(&self, r: usize) -> Result<()> {
        let mut seen = std::collections::BTreeSet::new();
        for &v in &self.core_vertices {
            if !seen.insert(v) {
                return Err(Error::input(format!("core vertex image {v} repeated")));
            }
        }
        for (e, ext) in &self.edge_extensions {
            if ext.len() + 2 != r {
                return Err(Error::input(format!(
                    "edge {e} has {} added vertices, expected {}",
                    ext.len(),
                    r - 2
                )));
            }
            for &v in ext {
                if !seen.insert(v) {
                    return Err(Error::input(format!("added vertex {v} reused")));
                }
            }
        }
        Ok(())
    }
}

/// A copy of a graph in which only some edges have been enlarged.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartialExpansion {
    pub vertex_count: usize,
    pub r: usize,
    pub hyperedges: Vec<HyperEdge>,
    /// Core edges left as plain pairs.
    pub bare: Vec<Pair>,
    pub core: CoreMap,
}

pub fn triangle() -> Graph {
    Graph::from_edges(3, &[(0, 1), (0, 2), (1, 2)]).expect("static edges")
}

/// Path on `k` vertices `0 - 1 - .. - (k-1)`.
pub fn path_graph(k: usize) -> Graph {
    let edges: Vec<_> = (1..k).map(|i| (i - 1, i)).collect();
    Graph::from_edges(k, &edges).expect("path edges")
}

pub fn complete_graph(k: usize) -> Graph {
    let edges: Vec<_> = (0..k).tuple_combinations().collect();
    Graph::from_edges(k, &edges).expect("clique edges")
}

/// The star `K_{1,t}` with center `0` and leaves `1..=t`.
pub fn star_graph(t: usize) -> CenteredGraph {
    let edges: Vec<_> = (1..=t).map(|i| (0, i)).collect();
    CenteredGraph {
        graph: Graph::from_edges(t + 1, &edges).expect("star edges"),
        center: 0,
    }
}

/// The `t`-fan: `t` triangles `{0, 2j-1, 2j}` sharing vertex `0`.
pub fn t_fan(t: usize) -> Result<CenteredGraph> {
    if t == 0 {
        return Err(Error::input("a fan needs at least one triangle"));
    }
    k_fan(t, 3)
}

/// `t` copies of `K_k` pairwise meeting only in vertex `0`.
pub fn k_fan(t: usize, k: usize) -> Result<CenteredGraph> {
    if t == 0 || k < 3 {
        return Err(Error::input(format!("k-fan needs t >= 1 and k >= 3, got t={t}, k={k}")));
    }
    let n = (k - 1) * t + 1;
    let mut g = Graph::new(n);
    for j in 0..t {
        let block: Vec<usize> = std::iter::once(0)
            .chain((1..k).map(|i| j * (k - 1) + i))
            .collect();
        for (a, b) in block.iter().tuple_combinations() {
            g.add_edge(*a, *b)?;
        }
    }
    Ok(CenteredGraph { graph: g, center: 0 })
}

/// The `r`-expansion of `f`. For `r = 2` this is `f` itself.
pub fn expand(f: &Graph, r: usize) -> Result<(Hypergraph, CoreMap)> {
    let all: Vec<Pair> = f.edges().collect();
    let part = partial_expand(f, &all, r)?;
    let mut h = Hypergraph::new(part.vertex_count, r)?;
    for e in &part.hyperedges {
        h.insert(e)?;
    }
    Ok((h, part.core))
}

pub fn expand_centered(f: &CenteredGraph, r: usize) -> Result<(Hypergraph, CoreMap)> {
    let (h, mut core) = expand(&f.graph, r)?;
    core.center = Some(f.center);
    Ok((h, core))
}

/// Enlarges only the edges in `enlarged`; the remaining edges stay bare.
pub fn partial_expand(f: &Graph, enlarged: &[Pair], r: usize) -> Result<PartialExpansion> {
    if r < 2 {
        return Err(Error::input("expansion uniformity must be at least 2"));
    }
    for e in enlarged {
        if !f.has_edge(e.u(), e.v()) {
            return Err(Error::input(format!("{e} is not an edge of the core graph")));
        }
    }
    let mut next = f.vertex_count();
    let mut hyperedges = Vec::new();
    let mut bare = Vec::new();
    let mut core = CoreMap {
        core_vertices: (0..f.vertex_count()).collect(),
        ..CoreMap::default()
    };
    for e in f.edges() {
        if enlarged.contains(&e) {
            let ext: Vec<usize> = (next..next + r - 2).collect();
            next += r - 2;
            let mut verts = vec![e.u(), e.v()];
            verts.extend(&ext);
            hyperedges.push(HyperEdge::new(&verts)?);
            core.edge_extensions.insert(e, ext);
        } else {
            bare.push(e);
        }
    }
    Ok(PartialExpansion {
        vertex_count: next,
        r,
        hyperedges,
        bare,
        core,
    })
}

/// The expanded star `S_t^r`: petal `j` is `{0} ∪ {(r-1)(j-1)+1, .., (r-1)j}`.
pub fn star_expansion(t: usize, r: usize) -> Result<(Hypergraph, CoreMap)> {
    if t == 0 || r < 2 {
        return Err(Error::input(format!("star needs t >= 1 and r >= 2, got t={t}, r={r}")));
    }
    let n = t * (r - 1) + 1;
    let mut h = Hypergraph::new(n, r)?;
    let mut core = CoreMap {
        core_vertices: vec![0],
        center: Some(0),
        ..CoreMap::default()
    };
    for j in 0..t {
        let first = j * (r - 1) + 1;
        let mut petal = vec![0];
        petal.extend(first..first + r - 1);
        h.insert(&petal)?;
        core.core_vertices.push(first);
        core.edge_extensions
            .insert(Pair::of(0, j + 1), (first + 1..first + r - 1).collect());
    }
    Ok((h, core))
}

/// `F_t^3(i)`: the 3-expansion of the `t`-fan plus its first `i` core triangles.
pub fn fan_plus(t: usize, i: usize) -> Result<Hypergraph> {
    if i > t {
        return Err(Error::input(format!("cannot add {i} of {t} core triangles")));
    }
    let (mut h, _) = expand_centered(&t_fan(t)?, 3)?;
    for j in 1..=i {
        h.insert(&[0, 2 * j - 1, 2 * j])?;
    }
    Ok(h)
}

/// Every `r`-graph made of three hyperedges that pairwise intersect but
/// have no common vertex, one per choice of intersection sizes.
pub fn set_triangles(r: usize) -> Result<Vec<Hypergraph>> {
    if r < 2 {
        return Err(Error::input(format!("set triangles need r >= 2, got {r}")));
    }
    let mut out = Vec::new();
    for x in 1..r {
        for y in x..r {
            for z in y..r {
                if x + y > r || x + z > r || y + z > r {
                    continue;
                }
                let n = 3 * r - x - y - z;
                let mut next = 0;
                let mut take = |k: usize| {
                    let block: Vec<usize> = (next..next + k).collect();
                    next += k;
                    block
                };
                let (ab, bc, ca) = (take(x), take(y), take(z));
                let a = [ab.clone(), ca.clone(), take(r - x - z)].concat();
                let b = [ab, bc.clone(), take(r - x - y)].concat();
                let c = [bc, ca, take(r - y - z)].concat();
                out.push(Hypergraph::from_edges(n, r, &[a, b, c])?);
            }
        }
    }
    Ok(out)
}

/// `F(t, r)`: `t` copies of the `(r-1)`-uniform `r`-clique sharing vertex `0`,
/// each `(r-1)`-edge then enlarged by its own new vertex.
pub fn hyperfan(t: usize, r: usize) -> Result<Hypergraph> {
    if t == 0 || r < 3 {
        return Err(Error::input(format!("hyperfan needs t >= 1 and r >= 3, got t={t}, r={r}")));
    }
    let base = t * (r - 1) + 1;
    let mut h = Hypergraph::new(base + t * r, r)?;
    let mut next = base;
    for j in 0..t {
        let clique: Vec<usize> = std::iter::once(0)
            .chain((1..r).map(|i| j * (r - 1) + i))
            .collect();
        for mut sub in clique.into_iter().combinations(r - 1) {
            sub.push(next);
            next += 1;
            h.insert(&sub)?;
        }
    }
    Ok(h)
}

/// All `r`-subsets of `0..n` meeting `U = {0, .., t-1}`.
pub fn star_cover(n: usize, t: usize, r: usize) -> Result<Hypergraph> {
    if t > n || r > n {
        return Err(Error::input(format!(
            "star cover needs t <= n and r <= n, got n={n}, t={t}, r={r}"
        )));
    }
    let mut h = Hypergraph::new(n, r)?;
    for e in (0..n).combinations(r) {
        if e[0] < t {
            h.insert(&e)?;
        }
    }
    Ok(h)
}

pub fn binomial(n: usize, k: usize) -> BigUint {
    if k > n {
        return BigUint::ZERO;
    }
    let k = k.min(n - k);
    (0..k).fold(BigUint::from(1u32), |acc, i| acc * (n - i) / (i + 1))
}

/// `C(n, r) - C(n - t, r)`, the size of [`star_cover`].
pub fn star_cover_count(n: usize, t: usize, r: usize) -> BigUint {
    binomial(n, r) - binomial(n.saturating_sub(t), r)
}
