//! Parses a job file and prints its report.
//!
//! `cargo run --example job_runner -- fixtures/tensor_drop.json`

use lindef::report::{parse_job, run_job};

fn main() -> lindef::Result<()> {
    let path = std::env::args()
        .nth(1)
        .unwrap_or_else(|| concat!(env!("CARGO_MANIFEST_DIR"), "/fixtures/tensor_drop.json").to_string());
    let text = std::fs::read_to_string(&path).map_err(|e| lindef::Error::Precondition(format!("{path}: {e}")))?;
    let spec = parse_job(&text)?;
    let report = run_job(&spec)?;
    print!("{}", report.to_text());
    println!("{}", report.deterministic_json());
    Ok(())
}
