//! Runs a randomized property suite.
//!
//! `cargo run --release --example property_suite -- cwlinear 42`

use lindef::report::{run_property_suite, SUITES};

fn main() -> lindef::Result<()> {
    let mut args = std::env::args().skip(1);
    let names: Vec<String> = match args.next() {
        Some(n) => vec![n],
        None => SUITES.iter().map(|s| s.to_string()).collect(),
    };
    let seed = args.next().and_then(|s| s.parse().ok()).unwrap_or(42);
    for name in names {
        let r = run_property_suite(&name, seed, None)?;
        println!("{} [{:.0} ms]", r.summary(), r.elapsed_ms);
        for f in &r.failures {
            println!("  instance {} {}: {}", f.instance, f.check, f.detail);
        }
    }
    Ok(())
}
