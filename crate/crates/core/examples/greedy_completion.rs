//! Places a triangle on heavy pairs and enlarges its edges greedily.

use std::collections::BTreeMap;

use fan_turan::embed::{greedy_complete, Embedding};
use fan_turan::gallery::{star_cover, triangle};

fn main() -> fan_turan::Result<()> {
    // pairs inside the 2-set {0,1} and from it are heavy here
    let h = star_cover(12, 2, 3)?;
    let placement = Embedding { core_map: vec![0, 1, 5], extension_map: BTreeMap::new() };
    match greedy_complete(&h, &triangle(), &placement)? {
        Some(e) => {
            e.validate(&h, &triangle())?;
            for (edge, ext) in &e.extension_map {
                println!("core edge {edge} gets {ext:?}");
            }
        }
        None => println!("no completion"),
    }
    Ok(())
}
