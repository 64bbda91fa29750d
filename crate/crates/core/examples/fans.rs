//! Builds fans and their expansions and prints their sizes.

use fan_turan::gallery::{expand_centered, hyperfan, k_fan, star_expansion, t_fan};

fn main() -> fan_turan::Result<()> {
    for t in 1..=4 {
        let fan = t_fan(t)?;
        let (h, map) = expand_centered(&fan, 3)?;
        println!(
            "F_{t}: {} vertices, {} edges; expansion has {} vertices, {} edges, center {:?}",
            fan.graph.vertex_count(),
            fan.graph.edge_count(),
            h.vertex_count(),
            h.edge_count(),
            map.center,
        );
    }
    let f = k_fan(2, 4)?;
    println!("2 triangles and 4 pendant edges: {} edges", f.graph.edge_count());
    let (s, _) = star_expansion(3, 4)?;
    println!("expanded star S_3 for r=4: {} edges on {} vertices", s.edge_count(), s.vertex_count());
    let hf = hyperfan(2, 4)?;
    println!("hyperfan t=2 r=4: {} edges on {} vertices", hf.edge_count(), hf.vertex_count());
    Ok(())
}
