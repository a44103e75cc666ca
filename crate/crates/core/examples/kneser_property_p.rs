//! Kneser graphs with property P: KG(3,1) = K_3 has P(1,3;1) and KG(8,2)
//! has P(2,4;3).
//!
//!     cargo run --example kneser_property_p

use wellcovered::enumeration::check_property_p;
use wellcovered::graph::Graph;

fn main() -> wellcovered::error::Result<()> {
    for (n, k, pk, pq, pm) in [(3, 1, 1, 3, 1), (8, 2, 2, 4, 3)] {
        let g = Graph::kneser(n, k)?;
        let r = check_property_p(&g, pk, pq, pm)?;
        println!("KG({n},{k}): {} vertices", g.n());
        println!("  P({pk},{pq};{pm}) holds: {}", r.holds);
        println!("  maximal cliques: {}", r.maximal_cliques);
        println!("  {}-cliques, each in a unique maximal clique: {}", pk + 1, r.upper_cliques);
        if let Some((lo, hi)) = r.lower_containment {
            println!("  {pk}-cliques lie in between {lo} and {hi} maximal cliques");
        }
    }
    Ok(())
}
