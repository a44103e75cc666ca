//! Builds the q = 2 graphs for both tail orders and checks them by direct
//! enumeration.
//!
//!     cargo run --release --example materialize_and_verify

use wellcovered::enumeration::independence_polynomial;
use wellcovered::rollercoaster::{realize_with, verify_on_graph, RealizeOptions, TailPermutation};

fn main() -> wellcovered::error::Result<()> {
    let options = RealizeOptions {
        materialize: true,
        vertex_budget: 5000,
        ..RealizeOptions::default()
    };
    for p in TailPermutation::all(2)? {
        let (report, graph) = realize_with(&p, &options)?;
        let Some(g) = graph else {
            println!("pi = {:?}: plan has {} vertices, over budget", p.images(), report.plan.total_vertices);
            continue;
        };
        let verdict = verify_on_graph(&g, &p);
        println!("pi = {:?}: m = {}, {} vertices", p.images(), report.plan.m, g.n());
        println!("  I(x) = {}", independence_polynomial(&g));
        println!("  tail order holds on the graph: {}", verdict.holds);
    }
    Ok(())
}
