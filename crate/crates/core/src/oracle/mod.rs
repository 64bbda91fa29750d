//! Turán numbers on small vertex sets, by exhaustive branch and bound, plus
//! isomorphism utilities.
//!
//! The forbidden configuration is either the `r`-expansion of a core graph
//! or an explicit `r`-uniform pattern.

mod iso;
mod pattern;

use std::time::{Duration, Instant};

use itertools::Itertools;
use rand::seq::SliceRandom;
use serde::{Deserialize, Serialize};

use crate::embed::ExpansionChecker;
use crate::error::{Error, Result};
use crate::gallery::{binomial, random, set_triangles, FamilySpec};
use crate::hypercore::{Graph, HyperEdge, Hypergraph, Pair};

pub use iso::{
    canonical_form, is_isomorphic, is_isomorphic_with_limit, refine_colours, CanonicalForm,
    IsoVerdict, DEFAULT_NODE_LIMIT, EXACT_LIMIT,
};
pub use pattern::{find_subhypergraph, find_subhypergraph_through};

pub const CERTIFICATE_SCHEMA: u32 = 1;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Forbidden {
    /// `F^r` for the core graph `F`.
    Expansion(Graph),
    /// Fixed `r`-graphs, all of them forbidden.
    Patterns(Vec<Hypergraph>),
}

impl Forbidden {
    /// Graph families forbid their `r`-expansion; hypergraph families forbid
    /// themselves. A graph family carrying its own `r` must agree with `r`.
    pub fn from_family(spec: &FamilySpec, r: usize) -> Result<Self> {
        if let FamilySpec::SetTriangle { r: own } = *spec {
            if own != r {
                return Err(Error::UnsupportedUniformity { expected: r, found: own });
            }
            return Ok(Forbidden::Patterns(set_triangles(r)?));
        }
        if let Ok(f) = spec.core_graph() {
            if let Some(own) = spec.expansion_uniformity().filter(|&own| own != r) {
                return Err(Error::UnsupportedUniformity { expected: r, found: own });
            }
            return Ok(Forbidden::Expansion(f));
        }
        Ok(Forbidden::Patterns(vec![spec.hypergraph()?]))
    }

    /// Fewest vertices a copy occupies at uniformity `r`.
    pub fn footprint(&self, r: usize) -> usize {
        match self {
            Forbidden::Expansion(f) => f.vertex_count() + f.edge_count() * r.saturating_sub(2),
            Forbidden::Patterns(ps) => ps.iter().map(Hypergraph::vertex_count).min().unwrap_or(0),
        }
    }

    fn check(&self, r: usize) -> Result<()> {
        let empty = match self {
            Forbidden::Expansion(f) => f.edge_count() == 0,
            Forbidden::Patterns(ps) => {
                if let Some(p) = ps.iter().find(|p| p.uniformity() != r) {
                    return Err(Error::UnsupportedUniformity {
                        expected: r,
                        found: p.uniformity(),
                    });
                }
                ps.is_empty() || ps.iter().any(Hypergraph::is_empty)
            }
        };
        if empty {
            return Err(Error::input("the forbidden configuration has no edges"));
        }
        Ok(())
    }

    /// Whether `h` contains a copy.
    pub fn occurs_in(&self, h: &Hypergraph) -> bool {
        match self {
            Forbidden::Expansion(f) => crate::embed::contains_expansion(h, f).is_some(),
            Forbidden::Patterns(ps) => ps.iter().any(|p| find_subhypergraph(h, p).is_some()),
        }
    }

    pub fn record(&self, family: Option<String>) -> ForbiddenRecord {
        match self {
            Forbidden::Expansion(f) => ForbiddenRecord::Expansion {
                family,
                vertices: f.vertex_count(),
                edges: f.edges().map(|p| [p.u(), p.v()]).collect(),
            },
            Forbidden::Patterns(ps) => ForbiddenRecord::Patterns {
                family,
                patterns: ps
                    .iter()
                    .map(|p| PatternRecord {
                        vertices: p.vertex_count(),
                        edges: p.edges().cloned().collect(),
                    })
                    .collect(),
            },
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PatternRecord {
    pub vertices: usize,
    pub edges: Vec<HyperEdge>,
}

/// The forbidden configuration as stored in a certificate. `family` is the
/// family spec it was built from, when known.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum ForbiddenRecord {
    Expansion {
        family: Option<String>,
        vertices: usize,
        edges: Vec<[usize; 2]>,
    },
    Patterns {
        family: Option<String>,
        patterns: Vec<PatternRecord>,
    },
}

impl ForbiddenRecord {
    pub fn family(&self) -> Option<&str> {
        match self {
            ForbiddenRecord::Expansion { family, .. } | ForbiddenRecord::Patterns { family, .. } => {
                family.as_deref()
            }
        }
    }

    pub fn to_forbidden(&self, r: usize) -> Result<Forbidden> {
        Ok(match self {
            ForbiddenRecord::Expansion { vertices, edges, .. } => {
                let mut g = Graph::new(*vertices);
                for &[u, v] in edges {
                    let p = Pair::new(u, v)?;
                    if !g.add_edge(p.u(), p.v())? {
                        return Err(Error::input(format!("duplicate core edge {p}")));
                    }
                }
                Forbidden::Expansion(g)
            }
            ForbiddenRecord::Patterns { patterns, .. } => Forbidden::Patterns(
                patterns
                    .iter()
                    .map(|p| Hypergraph::from_edges(p.vertices, r, &p.edges))
                    .collect::<Result<_>>()?,
            ),
        })
    }
}

/// Limits on an exact search. Unset fields are unlimited.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Budget {
    pub nodes: Option<u64>,
    pub time: Option<Duration>,
}

impl Budget {
    pub fn unlimited() -> Self {
        Budget::default()
    }

    pub fn seconds(s: f64) -> Self {
        Budget {
            nodes: None,
            time: Some(Duration::from_secs_f64(s.max(0.0))),
        }
    }

    pub fn nodes(k: u64) -> Self {
        Budget {
            nodes: Some(k),
            time: None,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.nodes == Some(0) || self.time == Some(Duration::ZERO)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TuranOptions {
    pub budget: Budget,
    /// Fix the first included hyperedge to `{0, .., r-1}`.
    pub symmetry: bool,
    /// Seed for the greedy incumbent.
    pub seed: u64,
}

impl Default for TuranOptions {
    fn default() -> Self {
        TuranOptions {
            budget: Budget::unlimited(),
            symmetry: true,
            seed: 0,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TuranCertificate {
    pub schema: u32,
    pub n: usize,
    pub r: usize,
    pub forbidden: ForbiddenRecord,
    /// Hyperedges in the witness.
    pub value: usize,
    pub witness: Vec<HyperEdge>,
    /// The search tree was exhausted, so `value` is the Turán number.
    pub exact: bool,
    pub nodes_explored: u64,
    /// Seconds.
    pub elapsed: f64,
    pub symmetry: bool,
}

/// Outcome of re-checking a certificate.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CertificateCheck {
    pub witness_free: bool,
    pub value_matches: bool,
    pub within_total: bool,
}

impl CertificateCheck {
    pub fn holds(&self) -> bool {
        self.witness_free && self.value_matches && self.within_total
    }
}

impl TuranCertificate {
    pub fn witness_hypergraph(&self) -> Result<Hypergraph> {
        Hypergraph::from_edges(self.n, self.r, &self.witness)
    }

    /// Rebuilds the witness and re-runs the containment search on it.
    /// Malformed certificates are errors; failed claims are reported in the
    /// returned check.
    pub fn verify(&self) -> Result<CertificateCheck> {
        if self.schema != CERTIFICATE_SCHEMA {
            return Err(Error::input(format!("unknown certificate schema {}", self.schema)));
        }
        let h = self.witness_hypergraph()?;
        let forbidden = self.forbidden.to_forbidden(self.r)?;
        Ok(CertificateCheck {
            witness_free: !forbidden.occurs_in(&h),
            value_matches: h.edge_count() == self.value,
            within_total: binomial(self.n, self.r) >= self.value.into(),
        })
    }
}

enum Tester {
    Expansion(Box<ExpansionChecker>),
    Patterns { patterns: Vec<Hypergraph>, host: Hypergraph },
}

impl Tester {
    fn new(forbidden: &Forbidden, n: usize, r: usize) -> Result<Self> {
        Ok(match forbidden {
            Forbidden::Expansion(f) => Tester::Expansion(Box::new(ExpansionChecker::new(f, n, r))),
            Forbidden::Patterns(ps) => Tester::Patterns {
                patterns: ps.iter().filter(|p| p.vertex_count() <= n).cloned().collect(),
                host: Hypergraph::new(n, r)?,
            },
        })
    }

    fn insert(&mut self, e: &[usize]) {
        match self {
            Tester::Expansion(c) => c.insert(e),
            Tester::Patterns { host, .. } => {
                host.insert(e).expect("candidate in range");
            }
        }
    }

    fn remove(&mut self, e: &[usize]) {
        match self {
            Tester::Expansion(c) => c.remove(e),
            Tester::Patterns { host, .. } => {
                host.remove(e);
            }
        }
    }

    /// Whether the (inserted) hyperedge `e` completes a copy.
    fn completes(&mut self, e: &[usize]) -> bool {
        match self {
            Tester::Expansion(c) => c.find_through(e).is_some(),
            Tester::Patterns { patterns, host } => patterns
                .iter()
                .any(|p| find_subhypergraph_through(host, p, e).is_some()),
        }
    }

    /// Inserts `e` unless it completes a copy; reports whether it stayed.
    fn try_insert(&mut self, e: &[usize]) -> bool {
        self.insert(e);
        if self.completes(e) {
            self.remove(e);
            false
        } else {
            true
        }
    }
}

/// A maximal hypergraph on `n` vertices free of the forbidden
/// configuration, built by inserting `r`-sets in a seeded random order.
pub fn greedy_lower_bound(n: usize, r: usize, forbidden: &Forbidden, seed: u64) -> Result<Hypergraph> {
    forbidden.check(r)?;
    if forbidden.footprint(r) > n {
        return Hypergraph::complete(n, r);
    }
    let mut order: Vec<Vec<usize>> = (0..n).combinations(r).collect();
    order.shuffle(&mut random::rng(seed));
    let mut tester = Tester::new(forbidden, n, r)?;
    let mut h = Hypergraph::new(n, r)?;
    for e in order {
        if tester.try_insert(&e) {
            h.insert(&e)?;
        }
    }
    Ok(h)
}

struct Bnb {
    cands: Vec<Vec<usize>>,
    tester: Tester,
    chosen: Vec<usize>,
    best: Vec<usize>,
    nodes: u64,
    budget: Budget,
    start: Instant,
    stopped: bool,
}

impl Bnb {
    fn out_of_budget(&mut self) -> bool {
        if self.budget.nodes.is_some_and(|k| self.nodes >= k) {
            return true;
        }
        match self.budget.time {
            Some(t) if self.nodes.is_multiple_of(256) => self.start.elapsed() >= t,
            _ => false,
        }
    }

    fn dfs(&mut self, idx: usize) {
        if self.stopped {
            return;
        }
        if self.out_of_budget() {
            self.stopped = true;
            return;
        }
        self.nodes += 1;
        if self.chosen.len() > self.best.len() {
            self.best = self.chosen.clone();
        }
        let m = self.cands.len();
        if idx == m || self.chosen.len() + (m - idx) <= self.best.len() {
            return;
        }
        let e = std::mem::take(&mut self.cands[idx]);
        if self.tester.try_insert(&e) {
            self.chosen.push(idx);
            self.dfs(idx + 1);
            self.chosen.pop();
            self.tester.remove(&e);
        }
        self.cands[idx] = e;
        if self.chosen.len() + (m - idx - 1) > self.best.len() {
            self.dfs(idx + 1);
        }
    }
}

/// The largest number of hyperedges in an `r`-graph on `n` vertices with no
/// copy of the forbidden configuration, by depth-first include/exclude
/// search over the `r`-sets in lexicographic order.
///
/// `family` is recorded in the certificate. A zero budget returns the greedy
/// bound; an exhausted budget returns the incumbent with `exact = false`.
pub fn exact_turan(
    n: usize,
    r: usize,
    forbidden: &Forbidden,
    family: Option<String>,
    options: &TuranOptions,
) -> Result<TuranCertificate> {
    forbidden.check(r)?;
    let start = Instant::now();
    let finish = |witness: Hypergraph, exact: bool, nodes: u64| TuranCertificate {
        schema: CERTIFICATE_SCHEMA,
        n,
        r,
        forbidden: forbidden.record(family.clone()),
        value: witness.edge_count(),
        witness: witness.edges().cloned().collect(),
        exact,
        nodes_explored: nodes,
        elapsed: start.elapsed().as_secs_f64(),
        symmetry: options.symmetry,
    };
    if forbidden.footprint(r) > n {
        return Ok(finish(Hypergraph::complete(n, r)?, true, 0));
    }
    let greedy = greedy_lower_bound(n, r, forbidden, options.seed)?;
    if options.budget.is_zero() {
        return Ok(finish(greedy, false, 0));
    }
    let cands: Vec<Vec<usize>> = (0..n).combinations(r).collect();
    let index_of = |e: &HyperEdge| cands.binary_search_by(|c| c.as_slice().cmp(e)).expect("r-set");
    let best: Vec<usize> = greedy.edges().map(index_of).collect();
    let mut bnb = Bnb {
        tester: Tester::new(forbidden, n, r)?,
        cands,
        chosen: Vec::new(),
        best,
        nodes: 0,
        budget: options.budget,
        start,
        stopped: false,
    };
    if options.symmetry && !bnb.cands.is_empty() {
        let first = bnb.cands[0].clone();
        bnb.nodes += 1;
        if bnb.tester.try_insert(&first) {
            bnb.chosen.push(0);
            bnb.dfs(1);
        }
    } else {
        bnb.dfs(0);
    }
    let mut witness = Hypergraph::new(n, r)?;
    for &i in &bnb.best {
        witness.insert(&bnb.cands[i])?;
    }
    Ok(finish(witness, !bnb.stopped, bnb.nodes))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gallery::{expand, path_graph, t_fan, triangle};

    fn expansion(f: Graph) -> Forbidden {
        Forbidden::Expansion(f)
    }

    #[test]
    fn too_small_host_is_complete() {
        let f = expansion(t_fan(2).unwrap().graph);
        let c = exact_turan(5, 3, &f, None, &TuranOptions::default()).unwrap();
        assert_eq!((c.value, c.exact, c.nodes_explored), (10, true, 0));
    }

    #[test]
    fn triangle_expansion_small_n() {
        let f = expansion(triangle());
        for (n, want) in [(5, 10), (6, 10)] {
            let c = exact_turan(n, 3, &f, None, &TuranOptions::default()).unwrap();
            assert_eq!((c.value, c.exact), (want, true), "n={n}");
        }
    }

    #[test]
    fn set_triangle_small_n() {
        let f = Forbidden::from_family(&"set-triangle r=3".parse().unwrap(), 3).unwrap();
        for (n, want) in [(5, 6), (6, 10)] {
            for symmetry in [true, false] {
                let opts = TuranOptions {
                    symmetry,
                    ..TuranOptions::default()
                };
                let c = exact_turan(n, 3, &f, None, &opts).unwrap();
                assert_eq!((c.value, c.exact), (want, true), "n={n} sym={symmetry}");
                assert!(c.verify().unwrap().holds());
            }
        }
    }

    #[test]
    fn pattern_matches_expansion() {
        let (k3, _) = expand(&triangle(), 3).unwrap();
        let c = exact_turan(6, 3, &Forbidden::Patterns(vec![k3]), None, &TuranOptions::default()).unwrap();
        assert_eq!((c.value, c.exact), (10, true));
    }

    #[test]
    fn path_graph_values() {
        // two hyperedges sharing exactly one vertex are forbidden
        let f = expansion(path_graph(3));
        let c = exact_turan(6, 3, &f, None, &TuranOptions::default()).unwrap();
        assert!(c.exact);
        assert!(c.verify().unwrap().holds());
    }

    #[test]
    fn families_resolve() {
        let fan: FamilySpec = "fan t=2".parse().unwrap();
        assert!(matches!(Forbidden::from_family(&fan, 3).unwrap(), Forbidden::Expansion(_)));
        let fan3: FamilySpec = "fan t=2 r=3".parse().unwrap();
        assert!(Forbidden::from_family(&fan3, 4).is_err());
        let hf: FamilySpec = "hyperfan t=1 r=4".parse().unwrap();
        assert!(matches!(Forbidden::from_family(&hf, 4).unwrap(), Forbidden::Patterns(p) if p.len() == 1));
    }

    #[test]
    fn zero_budget_is_greedy() {
        let f = expansion(triangle());
        let opts = TuranOptions {
            budget: Budget::nodes(0),
            ..TuranOptions::default()
        };
        let c = exact_turan(6, 3, &f, None, &opts).unwrap();
        assert!(!c.exact);
        let g = greedy_lower_bound(6, 3, &f, 0).unwrap();
        assert_eq!(c.value, g.edge_count());
    }

    #[test]
    fn greedy_is_maximal_and_seeded() {
        let f = expansion(triangle());
        let g = greedy_lower_bound(7, 3, &f, 4).unwrap();
        assert_eq!(g, greedy_lower_bound(7, 3, &f, 4).unwrap());
        assert!(!f.occurs_in(&g));
        for e in (0..7).combinations(3) {
            if !g.contains(&e) {
                let mut bigger = g.clone();
                bigger.insert(&e).unwrap();
                assert!(f.occurs_in(&bigger), "{e:?} could be added");
            }
        }
    }

    #[test]
    fn certificate_round_trip() {
        let f = expansion(triangle());
        let c = exact_turan(5, 3, &f, Some("triangle".into()), &TuranOptions::default()).unwrap();
        let json = serde_json::to_string(&c).unwrap();
        let back: TuranCertificate = serde_json::from_str(&json).unwrap();
        assert_eq!(back, c);
        let mut bad = back.clone();
        bad.value += 1;
        assert!(!bad.verify().unwrap().holds());
    }
}
