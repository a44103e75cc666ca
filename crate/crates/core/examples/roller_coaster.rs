//! Realizes every tail order for a given q and prints the certified chains.
//!
//!     cargo run --example roller_coaster -- 4

use wellcovered::rollercoaster::{realize, TailPermutation};

fn main() -> wellcovered::error::Result<()> {
    let q: usize = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(4);
    for p in TailPermutation::all(q)? {
        let report = realize(&p)?;
        let chain: Vec<String> = report.chain.iter().map(|e| format!("i_{}", e.index)).collect();
        println!(
            "pi = {:?}: {}  (m = {}, {} vertices, verified = {})",
            p.images(),
            chain.join(" < "),
            report.plan.m,
            report.plan.total_vertices,
            report.ordering_verified
        );
    }
    Ok(())
}
