//! Heaviness classes of `(r-1)`-subedges and hyperedges, and the pair
//! counting inequalities that hold between them.
//!
//! With threshold `t`, a subedge of heaviness `x` lies in `E_i` when
//! `(i-1)t + 1 <= x <= it` (`1 <= i <= r`); heavier subedges form a separate
//! `heavy_rest` bucket. Hyperedges are then split into disjoint classes by
//! first match in priority order:
//!
//! * `r = 3`: `H_3`, `H_2`, `H_4` (one `E_2` and two `E_3` pairs), `H_1`, `H'`;
//! * general `r`: `H_r`, ..., `H_1`, `H'`, then cells keyed by how many
//!   subedges fall in each `E_i`.
//!
//! `H_i` holds hyperedges with at least `i` subedges in `E_i`; `H'` holds
//! hyperedges whose subedges, sorted by heaviness, have the `i`-th at least
//! `(it+1)`-heavy.

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::gallery::binomial;
use crate::hypercore::{HyperEdge, Hypergraph};

/// A sorted `(r-1)`-subset of a hyperedge.
pub type SubEdge = Vec<usize>;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SubEdgeClass {
    /// `E_i`, 1-based.
    Light(usize),
    /// Heavier than `rt`.
    Heavy,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeClasses {
    pub t: usize,
    pub r: usize,
    /// `classes[i - 1]` is `E_i`.
    pub classes: Vec<BTreeSet<SubEdge>>,
    pub heavy_rest: BTreeSet<SubEdge>,
    heaviness: BTreeMap<SubEdge, usize>,
}

impl EdgeClasses {
    /// `e_i = |E_i|` for `i = 1..=r`.
    pub fn counts(&self) -> Vec<usize> {
        self.classes.iter().map(BTreeSet::len).collect()
    }

    pub fn heaviness_of(&self, sub: &[usize]) -> usize {
        self.heaviness.get(sub).copied().unwrap_or(0)
    }

    pub fn class_of(&self, sub: &[usize]) -> Option<SubEdgeClass> {
        self.heaviness.get(sub).map(|&x| classify_heaviness(x, self.t, self.r))
    }

    /// Every occurring subedge with its heaviness.
    pub fn subedges(&self) -> impl Iterator<Item = (&SubEdge, usize)> + '_ {
        self.heaviness.iter().map(|(s, &x)| (s, x))
    }
}

fn classify_heaviness(x: usize, t: usize, r: usize) -> SubEdgeClass {
    if x <= r * t {
        SubEdgeClass::Light(x.div_ceil(t).max(1))
    } else {
        SubEdgeClass::Heavy
    }
}

fn drop_one(e: &[usize], i: usize) -> SubEdge {
    e.iter()
        .enumerate()
        .filter(|&(j, _)| j != i)
        .map(|(_, &v)| v)
        .collect()
}

/// Assigns every occurring `(r-1)`-subedge to its heaviness class.
pub fn classify_pairs(h: &Hypergraph, t: usize) -> Result<EdgeClasses> {
    if t == 0 {
        return Err(Error::input("threshold t must be at least 1"));
    }
    let r = h.uniformity();
    if r < 2 {
        return Err(Error::input("classification needs uniformity at least 2"));
    }
    let mut heaviness: BTreeMap<SubEdge, usize> = BTreeMap::new();
    for e in h.edges() {
        for i in 0..r {
            *heaviness.entry(drop_one(e, i)).or_default() += 1;
        }
    }
    let mut classes = vec![BTreeSet::new(); r];
    let mut heavy_rest = BTreeSet::new();
    for (sub, &x) in &heaviness {
        match classify_heaviness(x, t, r) {
            SubEdgeClass::Light(i) => classes[i - 1].insert(sub.clone()),
            SubEdgeClass::Heavy => heavy_rest.insert(sub.clone()),
        };
    }
    Ok(EdgeClasses {
        t,
        r,
        classes,
        heavy_rest,
        heaviness,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HyperedgeClasses {
    pub t: usize,
    pub r: usize,
    /// `h[i - 1]` is `H_i`.
    pub h: Vec<Vec<HyperEdge>>,
    /// `H_4` in the 3-uniform classification; empty in the general one.
    pub mixed: Vec<HyperEdge>,
    pub prime: Vec<HyperEdge>,
    /// General classification only: remaining hyperedges by the number of
    /// subedges in each `E_i`.
    pub cells: BTreeMap<Vec<usize>, Vec<HyperEdge>>,
    pub edge_classes: EdgeClasses,
}

impl HyperedgeClasses {
    pub fn counts(&self) -> Vec<usize> {
        self.h.iter().map(Vec::len).collect()
    }

    /// `|H_0|`, the total size of the cells.
    pub fn cell_mass(&self) -> usize {
        self.cells.values().map(Vec::len).sum()
    }

    pub fn total(&self) -> usize {
        self.counts().iter().sum::<usize>() + self.mixed.len() + self.prime.len() + self.cell_mass()
    }

    /// Sorted subedge heavinesses of a hyperedge.
    pub fn profile(&self, e: &[usize]) -> Vec<usize> {
        let mut hv: Vec<usize> = (0..e.len())
            .map(|i| self.edge_classes.heaviness_of(&drop_one(e, i)))
            .collect();
        hv.sort_unstable();
        hv
    }

    /// Members of `H'` whose sorted profile fails `c_i >= it + 1`.
    pub fn prime_violations(&self) -> Vec<&HyperEdge> {
        self.prime
            .iter()
            .filter(|e| !has_prime_profile(&self.profile(e), self.t))
            .collect()
    }

    /// Cells with no prefix `a_1 + .. + a_i >= i`.
    pub fn cells_without_prefix(&self) -> Vec<&Vec<usize>> {
        self.cells
            .keys()
            .filter(|key| {
                !key.iter()
                    .scan(0, |acc, &a| {
                        *acc += a;
                        Some(*acc)
                    })
                    .enumerate()
                    .any(|(i, s)| s > i)
            })
            .collect()
    }
}

fn has_prime_profile(sorted: &[usize], t: usize) -> bool {
    sorted.iter().enumerate().all(|(i, &c)| c > (i + 1) * t)
}

/// How many subedges of `e` fall in each `E_i`.
fn exponents(ec: &EdgeClasses, e: &[usize]) -> Vec<usize> {
    let mut a = vec![0; ec.r];
    for i in 0..e.len() {
        if let Some(SubEdgeClass::Light(c)) = ec.class_of(&drop_one(e, i)) {
            a[c - 1] += 1;
        }
    }
    a
}

/// The 3-uniform classification with priority `H_3, H_2, H_4, H_1, H'`.
pub fn classify_hyperedges_3(h: &Hypergraph, t: usize) -> Result<HyperedgeClasses> {
    h.require_uniformity(3)?;
    let ec = classify_pairs(h, t)?;
    let mut classes = vec![Vec::new(); 3];
    let mut mixed = Vec::new();
    let mut prime = Vec::new();
    for e in h.edges() {
        let a = exponents(&ec, e);
        let target = if a[2] >= 3 {
            &mut classes[2]
        } else if a[1] >= 2 {
            &mut classes[1]
        } else if a[1] >= 1 && a[2] >= 2 {
            &mut mixed
        } else if a[0] >= 1 {
            &mut classes[0]
        } else {
            &mut prime
        };
        target.push(e.clone());
    }
    Ok(HyperedgeClasses {
        t,
        r: 3,
        h: classes,
        mixed,
        prime,
        cells: BTreeMap::new(),
        edge_classes: ec,
    })
}

/// The general classification with priority `H_r, .., H_1, H'`, cells last.
pub fn classify_hyperedges_general(h: &Hypergraph, t: usize) -> Result<HyperedgeClasses> {
    let r = h.uniformity();
    if r < 3 {
        return Err(Error::UnsupportedUniformity { expected: 3, found: r });
    }
    let ec = classify_pairs(h, t)?;
    let mut classes = vec![Vec::new(); r];
    let mut prime = Vec::new();
    let mut cells: BTreeMap<Vec<usize>, Vec<HyperEdge>> = BTreeMap::new();
    for e in h.edges() {
        let a = exponents(&ec, e);
        if let Some(i) = (1..=r).rev().find(|&i| a[i - 1] >= i) {
            classes[i - 1].push(e.clone());
            continue;
        }
        let mut hv: Vec<usize> = (0..r).map(|i| ec.heaviness_of(&drop_one(e, i))).collect();
        hv.sort_unstable();
        if has_prime_profile(&hv, t) {
            prime.push(e.clone());
        } else {
            cells.entry(a).or_default().push(e.clone());
        }
    }
    Ok(HyperedgeClasses {
        t,
        r,
        h: classes,
        mixed: Vec::new(),
        prime,
        cells,
        edge_classes: ec,
    })
}

/// The three pair-counting inequalities for 3-graphs, as slacks
/// (right-hand side minus left-hand side; negative means violated).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Audit3 {
    pub t: usize,
    /// `[e_1, e_2, e_3]`.
    pub e: [usize; 3],
    /// `[h_1, h_2, h_3, h_4]`.
    pub h: [usize; 4],
    pub prime: usize,
    pub heavy_rest: usize,
    /// `t e_1 - h_1`.
    pub slack_e1: i64,
    /// `2t e_2 - (2 h_2 + h_4)`.
    pub slack_e2: i64,
    /// `3t e_3 - (3 h_3 + 2 h_4)`.
    pub slack_e3: i64,
    /// `t (e_1 + e_2 + e_3) - (h_1 + h_2 + h_3 + h_4)`.
    pub slack_sum: i64,
    /// `6t (e_1 + e_2 + e_3) - (6 h_1 + 6 h_2 + 6 h_3 + 7 h_4)`, i.e. six
    /// times the slack of the combined bound with the `7/6` weight on `h_4`.
    pub slack_combined_x6: i64,
    pub prime_violations: usize,
    pub violations: Vec<String>,
}

impl Audit3 {
    pub fn holds(&self) -> bool {
        self.violations.is_empty()
    }
}

pub fn counting_audit_3(h: &Hypergraph, t: usize) -> Result<Audit3> {
    let hc = classify_hyperedges_3(h, t)?;
    Ok(audit3_from(&hc))
}

fn audit3_from(hc: &HyperedgeClasses) -> Audit3 {
    let t = hc.t as i64;
    let e = hc.edge_classes.counts();
    let e = [e[0], e[1], e[2]];
    let hs = hc.counts();
    let hh = [hs[0], hs[1], hs[2], hc.mixed.len()];
    let [e1, e2, e3] = e.map(|x| x as i64);
    let [h1, h2, h3, h4] = hh.map(|x| x as i64);
    let prime_violations = hc.prime_violations().len();
    let mut audit = Audit3 {
        t: hc.t,
        e,
        h: hh,
        prime: hc.prime.len(),
        heavy_rest: hc.edge_classes.heavy_rest.len(),
        slack_e1: t * e1 - h1,
        slack_e2: 2 * t * e2 - (2 * h2 + h4),
        slack_e3: 3 * t * e3 - (3 * h3 + 2 * h4),
        slack_sum: t * (e1 + e2 + e3) - (h1 + h2 + h3 + h4),
        slack_combined_x6: 6 * t * (e1 + e2 + e3) - (6 * (h1 + h2 + h3) + 7 * h4),
        prime_violations,
        violations: Vec::new(),
    };
    for (name, s) in [
        ("h1 <= t e1", audit.slack_e1),
        ("2h2 + h4 <= 2t e2", audit.slack_e2),
        ("3h3 + 2h4 <= 3t e3", audit.slack_e3),
        ("h1 + h2 + h3 + h4 <= t(e1 + e2 + e3)", audit.slack_sum),
        ("h1 + h2 + h3 + 7h4/6 <= t(e1 + e2 + e3)", audit.slack_combined_x6),
    ] {
        if s < 0 {
            audit.violations.push(format!("{name} fails by {}", -s));
        }
    }
    if prime_violations > 0 {
        audit
            .violations
            .push(format!("{prime_violations} members of H' lack the heaviness profile"));
    }
    audit
}

/// Per-class counting inequalities and the summed chain for general `r`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AuditGeneral {
    pub t: usize,
    pub r: usize,
    pub n: usize,
    /// `|E_1|, .., |E_r|`.
    pub e: Vec<usize>,
    /// `|H_1|, .., |H_r|`.
    pub h: Vec<usize>,
    pub prime: usize,
    /// `|H_0|`.
    pub cell_mass: usize,
    /// Non-empty cells as `(a_1..a_r, size)`.
    pub cells: Vec<(Vec<usize>, usize)>,
    /// For each `i`: `it|E_i| - (i|H_i| + Σ a_i |cell|)`.
    pub class_slack: Vec<i64>,
    /// `t C(n, r-1) - t Σ|E_i|`.
    pub binomial_slack: i128,
    /// `t Σ|E_i| - (Σ|H_i| + |H_0|)`.
    pub chain_slack: i64,
    pub cells_without_prefix: usize,
    pub prime_violations: usize,
    pub violations: Vec<String>,
}

impl AuditGeneral {
    pub fn holds(&self) -> bool {
        self.violations.is_empty()
    }
}

pub fn counting_audit_general(h: &Hypergraph, t: usize) -> Result<AuditGeneral> {
    let hc = classify_hyperedges_general(h, t)?;
    let r = hc.r;
    let ti = t as i64;
    let e = hc.edge_classes.counts();
    let hs = hc.counts();
    let class_slack: Vec<i64> = (1..=r)
        .map(|i| {
            let cell_part: i64 = hc
                .cells
                .iter()
                .map(|(a, members)| (a[i - 1] * members.len()) as i64)
                .sum();
            (i as i64) * ti * e[i - 1] as i64 - ((i * hs[i - 1]) as i64 + cell_part)
        })
        .collect();
    let e_total: i64 = e.iter().sum::<usize>() as i64;
    let shadow_bound = i128::try_from(binomial(h.vertex_count(), r - 1) * t)
        .expect("binomial fits in i128 at this scale");
    let binomial_slack = shadow_bound - (ti * e_total) as i128;
    let cell_mass = hc.cell_mass();
    let chain_slack = ti * e_total - (hs.iter().sum::<usize>() + cell_mass) as i64;
    let mut audit = AuditGeneral {
        t,
        r,
        n: h.vertex_count(),
        e,
        h: hs,
        prime: hc.prime.len(),
        cell_mass,
        cells: hc.cells.iter().map(|(k, v)| (k.clone(), v.len())).collect(),
        class_slack,
        binomial_slack,
        chain_slack,
        cells_without_prefix: hc.cells_without_prefix().len(),
        prime_violations: hc.prime_violations().len(),
        violations: Vec::new(),
    };
    for (i, &s) in audit.class_slack.iter().enumerate() {
        if s < 0 {
            audit.violations.push(format!("class {} inequality fails by {}", i + 1, -s));
        }
    }
    if audit.binomial_slack < 0 {
        audit.violations.push("t C(n, r-1) >= t Σ|E_i| fails".into());
    }
    if audit.chain_slack < 0 {
        audit.violations.push("t Σ|E_i| >= Σ|H_i| + |H_0| fails".into());
    }
    if audit.cells_without_prefix > 0 {
        audit.violations.push(format!(
            "{} cells have no prefix a_1 + .. + a_i >= i",
            audit.cells_without_prefix
        ));
    }
    if audit.prime_violations > 0 {
        audit.violations.push(format!(
            "{} members of H' lack the heaviness profile",
            audit.prime_violations
        ));
    }
    Ok(audit)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gallery::{random, star_cover};

    /// Builds a 3-graph in which `base` has pair heavinesses `(x, y, z)` for
    /// its pairs `(0,1)`, `(0,2)`, `(1,2)` by padding with private vertices.
    fn padded(x: usize, y: usize, z: usize) -> Hypergraph {
        let n = 3 + x + y + z;
        let mut h = Hypergraph::new(n, 3).unwrap();
        h.insert(&[0, 1, 2]).unwrap();
        let mut next = 3;
        for (a, b, count) in [(0, 1, x), (0, 2, y), (1, 2, z)] {
            for _ in 1..count {
                h.insert(&[a, b, next]).unwrap();
                next += 1;
            }
        }
        h
    }

    fn class_of_base(hc: &HyperedgeClasses) -> &'static str {
        let base = HyperEdge::new(&[0, 1, 2]).unwrap();
        if hc.h[0].contains(&base) {
            "H1"
        } else if hc.h[1].contains(&base) {
            "H2"
        } else if hc.h[2].contains(&base) {
            "H3"
        } else if hc.mixed.contains(&base) {
            "H4"
        } else if hc.prime.contains(&base) {
            "H'"
        } else {
            "cell"
        }
    }

    #[test]
    fn single_edge_pairs_light() {
        let h = Hypergraph::from_edges(3, 3, &[[0, 1, 2]]).unwrap();
        let ec = classify_pairs(&h, 1).unwrap();
        assert_eq!(ec.counts(), vec![3, 0, 0]);
        let big = classify_pairs(&h, 10).unwrap();
        assert_eq!(big.counts(), vec![3, 0, 0]);
        assert!(classify_pairs(&h, 0).is_err());
    }

    #[test]
    fn star_cover_pair_classes() {
        let h = star_cover(8, 1, 3).unwrap();
        let ec = classify_pairs(&h, 1).unwrap();
        assert_eq!(ec.heaviness_of(&[1, 2]), 1);
        assert_eq!(ec.class_of(&[1, 2]), Some(SubEdgeClass::Light(1)));
        assert_eq!(ec.heaviness_of(&[0, 1]), 6);
        assert_eq!(ec.class_of(&[0, 1]), Some(SubEdgeClass::Heavy));
        assert!(ec.heavy_rest.contains(&vec![0, 1]));
    }

    #[test]
    fn hyperedge_classes_3() {
        let h = Hypergraph::from_edges(3, 3, &[[0, 1, 2]]).unwrap();
        assert_eq!(class_of_base(&classify_hyperedges_3(&h, 1).unwrap()), "H1");
        for t in 1..4 {
            let hc = classify_hyperedges_3(&padded(t, 2 * t, 3 * t), t).unwrap();
            assert_eq!(class_of_base(&hc), "H1", "t={t}");
            let hc = classify_hyperedges_3(&padded(t + 1, 2 * t + 1, 3 * t + 1), t).unwrap();
            assert_eq!(class_of_base(&hc), "H'", "t={t}");
            let hc = classify_hyperedges_3(&padded(2 * t, 3 * t, 3 * t), t).unwrap();
            assert_eq!(class_of_base(&hc), "H4", "t={t}");
            assert!(hc.prime_violations().is_empty());
        }
        let h4 = Hypergraph::from_edges(4, 4, &[[0, 1, 2, 3]]).unwrap();
        assert!(classify_hyperedges_3(&h4, 1).is_err());
    }

    #[test]
    fn general_r4() {
        let h = Hypergraph::from_edges(4, 4, &[[0, 1, 2, 3]]).unwrap();
        let hc = classify_hyperedges_general(&h, 1).unwrap();
        assert_eq!(hc.counts(), vec![1, 0, 0, 0]);

        // subedge heavinesses (t+1, 2t+1, 3t+1, 4t+1) via private padding
        let t = 2;
        let subs = [[1, 2, 3], [0, 2, 3], [0, 1, 3], [0, 1, 2]];
        let wants = [t + 1, 2 * t + 1, 3 * t + 1, 4 * t + 1];
        let n = 4 + wants.iter().map(|w| w - 1).sum::<usize>();
        let mut h = Hypergraph::new(n, 4).unwrap();
        h.insert(&[0, 1, 2, 3]).unwrap();
        let mut next = 4;
        for (s, &w) in subs.iter().zip(&wants) {
            for _ in 1..w {
                h.insert(&[s[0], s[1], s[2], next]).unwrap();
                next += 1;
            }
        }
        let hc = classify_hyperedges_general(&h, t).unwrap();
        assert!(hc.prime.contains(&HyperEdge::new(&[0, 1, 2, 3]).unwrap()));
        assert!(hc.prime_violations().is_empty());
    }

    #[test]
    fn general_reduces_to_three() {
        let mut rng = random::rng(11);
        for _ in 0..40 {
            let h = random::hypergraph(12, 3, 0.35, &mut rng);
            for t in 1..=3 {
                let a = classify_hyperedges_3(&h, t).unwrap();
                let b = classify_hyperedges_general(&h, t).unwrap();
                assert_eq!(a.h, b.h);
                assert_eq!(a.prime, b.prime);
                let h4 = b.cells.get(&vec![0, 1, 2]).cloned().unwrap_or_default();
                assert_eq!(a.mixed, h4);
                assert_eq!(b.cell_mass(), h4.len());
            }
        }
    }

    #[test]
    fn audits_small_cases() {
        let one = Hypergraph::from_edges(3, 3, &[[0, 1, 2]]).unwrap();
        let a = counting_audit_3(&one, 1).unwrap();
        assert_eq!((a.h[0], a.e[0], a.slack_e1), (1, 3, 2));
        assert!(a.holds());

        let empty = Hypergraph::new(6, 3).unwrap();
        let a = counting_audit_3(&empty, 2).unwrap();
        assert_eq!((a.e, a.h), ([0; 3], [0; 4]));
        assert!(a.holds());
        let g = counting_audit_general(&empty, 2).unwrap();
        assert_eq!(g.chain_slack, 0);
        assert!(g.holds());
    }

    #[test]
    fn star_cover_audits() {
        let a = counting_audit_3(&star_cover(10, 2, 3).unwrap(), 2).unwrap();
        // pairs inside {2..9} have link {0, 1}; pairs meeting U are 8- or 9-heavy
        assert_eq!(a.e, [28, 0, 0]);
        assert_eq!(a.h, [56, 0, 0, 0]);
        assert_eq!(a.prime, 8);
        assert!(a.holds());

        let g = counting_audit_general(&star_cover(12, 2, 4).unwrap(), 2).unwrap();
        assert!(g.holds(), "{:?}", g.violations);
        assert!(g.binomial_slack >= 0 && g.chain_slack >= 0);
    }
}
