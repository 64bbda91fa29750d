//! Isomorphism testing and canonical forms.

use fan_turan::gallery::{expand, triangle};
use fan_turan::oracle::{canonical_form, is_isomorphic};

fn main() -> fan_turan::Result<()> {
    let (a, _) = expand(&triangle(), 3)?;
    let perm = [5, 3, 1, 4, 0, 2];
    let b = a.relabel(&perm, 6)?;
    let v = is_isomorphic(&a, &b);
    println!("relabelled copy isomorphic: {} via {:?}", v.isomorphic, v.mapping);
    println!("canonical forms equal: {}", canonical_form(&a) == canonical_form(&b));
    let c = fan_turan::Hypergraph::from_edges(6, 3, &[[0, 1, 2], [0, 3, 4], [0, 1, 5]])?;
    println!("versus another 3-edge graph: {}", is_isomorphic(&a, &c).isomorphic);
    Ok(())
}
