//! Builds H(1,3;2), lists its maximal cliques and writes it as graph6.
//!
//!     cargo run --example hkqm_construction

use wellcovered::enumeration::{check_property_p, clique_polynomial};
use wellcovered::graph6::to_graph6_string;
use wellcovered::hkqm::{clique_count_closed_form, HkqmLayout, HkqmParams, DEFAULT_VERTEX_BUDGET};

fn main() -> wellcovered::error::Result<()> {
    let (k, q, m) = (1, 3, 2);
    let layout = HkqmLayout::new(HkqmParams::new(k, q, m)?, DEFAULT_VERTEX_BUDGET)?;
    let g = layout.build();
    println!("H({k},{q};{m}): {} vertices, {} edges", g.n(), g.edge_count());
    println!("graph6: {}", to_graph6_string(&g));

    for f in layout.global_functions() {
        let clique = layout.clique_of(&f)?;
        println!("  C_f for f = {:?}: {:?}", f.values, clique);
    }

    let report = check_property_p(&g, k, q, m)?;
    println!("P({k},{q};{m}) holds: {}", report.holds);

    let counts = clique_polynomial(&g);
    for j in 0..=q {
        println!("  {j}-cliques: {} (closed form {})", counts.coeff(j), clique_count_closed_form(k, q, m, j)?);
    }
    Ok(())
}
