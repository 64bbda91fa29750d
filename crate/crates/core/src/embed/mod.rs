//! Finding expansion copies, and the constructive steps built around them:
//! greedy completion of partial copies, nice sub-stars, auxiliary bipartite
//! graphs with Hall analysis, and expanded-star detection.

mod greedy;
mod matching;
mod search;
mod star;

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hypercore::{Graph, Hypergraph, Pair};

pub use greedy::greedy_complete;
pub use matching::{
    hall_analysis, max_matching, BipartiteGraph, HallFailure, HallOutcome, Matching,
};
pub use search::{contains_expansion, contains_expansion_through, ExpansionChecker};
pub use star::{
    auxiliary_bipartite, caro_wei_bound, find_disjoint_star, find_nice_star,
    greedy_independent_set, is_nice, NiceStarSpec, Star,
};

/// A copy of `F^r` (or, while being built, of a partial expansion of `F`)
/// inside a hypergraph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Embedding {
    /// Host vertex of each core vertex, indexed by core vertex.
    pub core_map: Vec<usize>,
    /// Host vertices added to each enlarged core edge, keyed by the core
    /// edge in core labels. Serialized with `"u-v"` keys.
    #[serde(with = "edge_keys")]
    pub extension_map: BTreeMap<Pair, Vec<usize>>,
}

impl Embedding {
    /// All host vertices used, core first.
    pub fn vertices(&self) -> Vec<usize> {
        let mut v = self.core_map.clone();
        v.extend(self.extension_map.values().flatten());
        v
    }

    /// Host hyperedge realizing core edge `e`, if `e` is enlarged.
    pub fn hyperedge_of(&self, e: Pair) -> Option<Vec<usize>> {
        let ext = self.extension_map.get(&e)?;
        let mut verts = vec![self.core_map[e.u()], self.core_map[e.v()]];
        verts.extend(ext);
        verts.sort_unstable();
        Some(verts)
    }

    /// Checks injectivity and that every enlarged edge is a hyperedge of `h`;
    /// core edges may be left bare.
    pub fn validate_partial(&self, h: &Hypergraph, f: &Graph) -> Result<()> {
        if self.core_map.len() != f.vertex_count() {
            return Err(Error::input(format!(
                "core map has {} entries for {} core vertices",
                self.core_map.len(),
                f.vertex_count()
            )));
        }
        let mut used = BTreeSet::new();
        for &v in &self.core_map {
            h.check_vertex(v)?;
            if !used.insert(v) {
                return Err(Error::input(format!("host vertex {v} used twice")));
            }
        }
        let r = h.uniformity();
        for (&e, ext) in &self.extension_map {
            if !f.has_edge(e.u(), e.v()) {
                return Err(Error::input(format!("{e} is not a core edge")));
            }
            if ext.len() + 2 != r {
                return Err(Error::input(format!(
                    "edge {e} carries {} added vertices, expected {}",
                    ext.len(),
                    r.saturating_sub(2)
                )));
            }
            for &v in ext {
                h.check_vertex(v)?;
                if !used.insert(v) {
                    return Err(Error::input(format!("host vertex {v} used twice")));
                }
            }
            let verts = self.hyperedge_of(e).expect("present");
            if !h.contains(&verts) {
                return Err(Error::input(format!(
                    "edge {e} maps to {verts:?}, which is not a hyperedge"
                )));
            }
        }
        Ok(())
    }

    /// [`Self::validate_partial`] plus: every core edge is enlarged.
    pub fn validate(&self, h: &Hypergraph, f: &Graph) -> Result<()> {
        self.validate_partial(h, f)?;
        if let Some(e) = f.edges().find(|e| !self.extension_map.contains_key(e)) {
            return Err(Error::input(format!("core edge {e} is not enlarged")));
        }
        Ok(())
    }
}

mod edge_keys {
    use std::collections::BTreeMap;

    use serde::de::Error as _;
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    use crate::hypercore::Pair;

    pub fn serialize<S: Serializer>(
        map: &BTreeMap<Pair, Vec<usize>>,
        s: S,
    ) -> Result<S::Ok, S::Error> {
        map.iter()
            .map(|(p, v)| (format!("{}-{}", p.u(), p.v()), v))
            .collect::<BTreeMap<_, _>>()
            .serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(
        d: D,
    ) -> Result<BTreeMap<Pair, Vec<usize>>, D::Error> {
        let raw = BTreeMap::<String, Vec<usize>>::deserialize(d)?;
        raw.into_iter()
            .map(|(k, v)| {
                let (a, b) = k
                    .split_once('-')
                    .ok_or_else(|| D::Error::custom(format!("bad edge key `{k}`")))?;
                let a = a.parse().map_err(D::Error::custom)?;
                let b = b.parse().map_err(D::Error::custom)?;
                Ok((Pair::new(a, b).map_err(D::Error::custom)?, v))
            })
            .collect()
    }
}
