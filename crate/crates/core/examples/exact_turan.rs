//! Exact Turán numbers of small expansions, with a checked certificate.

use fan_turan::gallery::FamilySpec;
use fan_turan::oracle::{exact_turan, Forbidden, TuranOptions};

fn main() -> fan_turan::Result<()> {
    let opts = TuranOptions::default();
    for spec in ["path k=3", "triangle", "fan t=2"] {
        let family: FamilySpec = spec.parse()?;
        let forbidden = Forbidden::from_family(&family, 3)?;
        for n in 5..=7 {
            let cert = exact_turan(n, 3, &forbidden, Some(spec.to_string()), &opts)?;
            let check = cert.verify()?;
            println!(
                "ex({n}, {spec}) = {}{} ({} nodes, witness free: {})",
                cert.value,
                if cert.exact { "" } else { "+" },
                cert.nodes_explored,
                check.witness_free,
            );
        }
    }
    Ok(())
}
