use std::collections::BTreeSet;

use super::Embedding;
use crate::error::Result;
use crate::hypercore::{Graph, Hypergraph, Pair};

/// Completes a partial copy of `F^r` by enlarging each bare core edge, in
/// lexicographic order, with the first hyperedge through its image whose
/// remaining vertices are all unused.
///
/// If every bare edge image is `(|E(F)| + |V(F)| - 2)`-heavy this cannot
/// fail for `r = 3`. Returns `Ok(None)` when some edge runs out of choices.
pub fn greedy_complete(h: &Hypergraph, f: &Graph, placement: &Embedding) -> Result<Option<Embedding>> {
    placement.validate_partial(h, f)?;
    let mut used: BTreeSet<usize> = placement.vertices().into_iter().collect();
    let mut out = placement.clone();
    let bare: Vec<Pair> = f
        .edges()
        .filter(|e| !placement.extension_map.contains_key(e))
        .collect();
    for e in bare {
        let (a, b) = (out.core_map[e.u()], out.core_map[e.v()]);
        let pick = h
            .edges_through(Pair::of(a, b))
            .iter()
            .map(|he| he.without(&[a, b]))
            .find(|rest| rest.iter().all(|v| !used.contains(v)));
        let Some(rest) = pick else {
            return Ok(None);
        };
        used.extend(&rest);
        out.extension_map.insert(e, rest);
    }
    Ok(Some(out))
}

#[cfg(test)]
mod tests {
    use std::collections::BTreeMap;

    use super::*;
    use crate::gallery::{expand, triangle};

    fn bare(core: Vec<usize>) -> Embedding {
        Embedding {
            core_map: core,
            extension_map: BTreeMap::new(),
        }
    }

    #[test]
    fn complete_placement_unchanged() {
        let f = triangle();
        let (h, core) = expand(&f, 3).unwrap();
        let emb = Embedding {
            core_map: core.core_vertices,
            extension_map: core.edge_extensions,
        };
        assert_eq!(greedy_complete(&h, &f, &emb).unwrap(), Some(emb));
    }

    #[test]
    fn heavy_pairs_complete() {
        let f = triangle();
        let h = Hypergraph::complete(7, 3).unwrap();
        let emb = greedy_complete(&h, &f, &bare(vec![0, 1, 2])).unwrap().unwrap();
        emb.validate(&h, &f).unwrap();
        assert_eq!(emb.extension_map[&Pair::of(0, 1)], vec![3]);
        assert_eq!(emb.extension_map[&Pair::of(0, 2)], vec![4]);
        assert_eq!(emb.extension_map[&Pair::of(1, 2)], vec![5]);
    }

    #[test]
    fn exhausted_link_set() {
        let f = triangle();
        let h = Hypergraph::from_edges(4, 3, &[[0, 1, 3], [0, 2, 3], [1, 2, 3]]).unwrap();
        assert_eq!(greedy_complete(&h, &f, &bare(vec![0, 1, 2])).unwrap(), None);
    }

    #[test]
    fn rejects_inconsistent_placement() {
        let f = triangle();
        let h = Hypergraph::complete(7, 3).unwrap();
        assert!(greedy_complete(&h, &f, &bare(vec![0, 0, 2])).is_err());
        let mut p = bare(vec![0, 1, 2]);
        p.extension_map.insert(Pair::of(0, 1), vec![2]);
        assert!(greedy_complete(&h, &f, &p).is_err());
    }
}
