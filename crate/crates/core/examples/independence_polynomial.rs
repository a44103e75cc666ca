//! Independence polynomials of a few small graphs, and how they combine
//! under join and disjoint union.
//!
//!     cargo run --example independence_polynomial

use wellcovered::enumeration::{independence_polynomial, is_well_covered};
use wellcovered::graph::Graph;
use wellcovered::hkqm::build_hkqm;

fn main() -> wellcovered::error::Result<()> {
    let c5 = Graph::cycle(5)?;
    let p3 = Graph::path(3);
    let h = build_hkqm(1, 3, 2)?.complement();

    for (name, g) in [("C_5", &c5), ("P_3", &p3), ("complement H(1,3;2)", &h)] {
        let wc = is_well_covered(g);
        println!(
            "{name:<22} I(x) = {:<28} alpha = {} well-covered = {}",
            independence_polynomial(g).to_string(),
            wc.alpha,
            wc.is_well_covered
        );
    }

    // join: counts add for t >= 1; disjoint union: polynomials multiply
    let join = Graph::join(&[c5.clone(), h.clone()])?;
    println!("C_5 join H^c            I(x) = {}", independence_polynomial(&join));
    println!("3 copies of C_5         I(x) = {}", independence_polynomial(&c5.disjoint_copies(3)));
    Ok(())
}
