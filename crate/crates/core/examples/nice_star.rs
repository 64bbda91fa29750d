//! Extracts a nice sub-star from a large star, and a vertex-disjoint star
//! from a hypergraph with many edges through one vertex.

use std::collections::BTreeMap;

use fan_turan::embed::{caro_wei_bound, find_disjoint_star, find_nice_star, NiceStarSpec, Star};
use fan_turan::gallery::star_cover;
use fan_turan::Pair;

fn main() -> fan_turan::Result<()> {
    let h = star_cover(20, 1, 3)?;
    let star = find_disjoint_star(&h, 6)?.expect("center 0 has a large matching in its link");
    println!("disjoint star at {} with {} petals", star.center, star.len());

    let mut weights = BTreeMap::new();
    for p in star.inside_pairs().into_iter().filter(|p| p.contains(star.center)).take(4) {
        weights.insert(p, 1);
    }
    let spec = NiceStarSpec { star: star.clone(), weights, k: 1, r: 2 };
    match find_nice_star(&h, &spec)? {
        Some(s) => println!("nice sub-star with petals {:?}", s.petals),
        None => println!("no nice sub-star"),
    }

    let small = Star::new(0, vec![[1, 2], [3, 4]])?;
    println!("petal pairs of the first hyperedge: {:?}", small.petal_pairs(0).map(|p: Pair| p.to_string()));
    let g = fan_turan::gallery::path_graph(5);
    println!("independent set bound on a 5-path: {}", caro_wei_bound(&g));
    Ok(())
}
