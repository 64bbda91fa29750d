//! Heaviness classes of a random 3-graph and the counting audit.

use fan_turan::decompose::{classify_hyperedges_3, counting_audit_3};
use fan_turan::gallery::random;

fn main() -> fan_turan::Result<()> {
    let h = random::hypergraph(14, 3, 0.35, &mut random::rng(7));
    let t = 2;
    let hc = classify_hyperedges_3(&h, t)?;
    println!("{} edges, class sizes {:?}", h.edge_count(), hc.counts());
    let a = counting_audit_3(&h, t)?;
    println!("E sizes {:?}, H sizes {:?}, H' {}", a.e, a.h, a.prime);
    println!("slacks {} {} {} (sum {})", a.slack_e1, a.slack_e2, a.slack_e3, a.slack_sum);
    println!("audit holds: {}", a.holds());
    Ok(())
}
