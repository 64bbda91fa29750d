//! The star-cover lower bound: every hyperedge meets a fixed t-set.
//! Checks the edge count and that the expanded t-fan is absent.

use fan_turan::embed::contains_expansion;
use fan_turan::gallery::{star_cover, star_cover_count, t_fan};

fn main() -> fan_turan::Result<()> {
    let (n, t) = (11, 2);
    let h = star_cover(n, t, 3)?;
    println!("star_cover({n}, {t}, 3): {} edges, closed form {}", h.edge_count(), star_cover_count(n, t, 3));
    for s in 1..=t + 1 {
        let fan = t_fan(s)?;
        match contains_expansion(&h, &fan.graph) {
            Some(e) => println!("contains expanded F_{s}: core at {:?}", e.core_map),
            None => println!("free of expanded F_{s}"),
        }
    }
    Ok(())
}
