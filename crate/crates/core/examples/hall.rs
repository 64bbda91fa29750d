//! Matching in the auxiliary bipartite graph and the Hall analysis.

use fan_turan::embed::{auxiliary_bipartite, find_disjoint_star, hall_analysis, max_matching, BipartiteGraph, HallOutcome};
use fan_turan::gallery::random;

fn main() -> fan_turan::Result<()> {
    let h = random::hypergraph(16, 3, 0.25, &mut random::rng(3));
    let star = find_disjoint_star(&h, 3)?.expect("large link matching");
    let aux = auxiliary_bipartite(&h, &star, 2)?;
    let m = max_matching(&aux);
    println!("auxiliary graph: {} edges, maximum matching {}", aux.edge_count(), m.len());

    // every left vertex sees the same two right vertices: no 3-matching
    let mut g: BipartiteGraph<usize, usize> = BipartiteGraph::new(vec![0, 1, 2, 3], vec![0, 1, 2]);
    for a in 0..4 {
        g.add_edge(a, 0)?;
        g.add_edge(a, 1)?;
    }
    match hall_analysis(&g, 3) {
        HallOutcome::Matching(m) => println!("matching {:?}", m.pairs),
        HallOutcome::CommonNeighborhood(n) => println!("common neighbourhood {n:?}"),
        HallOutcome::Failed(f) => println!("hypotheses fail: {f:?}"),
    }
    Ok(())
}
