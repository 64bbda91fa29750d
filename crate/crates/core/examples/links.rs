//! Heaviness, link sets, link graphs and link hypergraphs.

use fan_turan::{Hypergraph, Pair};

fn main() -> fan_turan::Result<()> {
    let h = Hypergraph::from_edges(6, 3, &[[0, 1, 2], [0, 1, 3], [0, 1, 4], [0, 2, 3], [2, 4, 5]])?;
    let p = Pair::new(0, 1)?;
    println!("heaviness of {p}: {}", h.heaviness(p)?);
    println!("link set of {p}: {:?}", h.link_set(p)?);
    println!("{p} is 2-heavy: {}", h.is_heavy(p, 2)?);
    let g = h.link_graph(0)?;
    let edges: Vec<String> = g.edges().map(|e| e.to_string()).collect();
    println!("link graph of 0: {}", edges.join(" "));
    let l = h.link_hypergraph(&[2])?;
    println!("link of {{2}}: {} pairs", l.edge_count());
    Ok(())
}
