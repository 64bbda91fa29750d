//! Runs the full star-cover verification and prints the JSON report.

use fan_turan::cli::{run_pipeline, PipelineRequest};

fn main() -> fan_turan::Result<()> {
    let report = run_pipeline(PipelineRequest { n: 12, t: 2, r: 3, seed: 0 })?;
    println!("{}", serde_json::to_string_pretty(&report).expect("report serializes"));
    println!("holds: {}", report.holds());
    Ok(())
}
