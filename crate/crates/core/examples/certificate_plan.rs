//! Plans a certificate for the target 3x + 11x^2 + 10x^3 and prints the
//! exact deviations.
//!
//!     cargo run --example certificate_plan -- 3,11,10 1/3

use wellcovered::certificate::{b_decomposition, build_plan, choose_m, TargetSequence};
use wellcovered::rational;

fn main() -> wellcovered::error::Result<()> {
    let mut args = std::env::args().skip(1);
    let target = args.next().unwrap_or_else(|| "3,11,10".into());
    let epsilon = rational::parse(&args.next().unwrap_or_else(|| "1/3".into()))?;

    let a = target.split(',').map(rational::parse).collect::<Result<Vec<_>, _>>()?;
    let target = TargetSequence::new(a.len(), a)?;
    let b = b_decomposition(&target)?;
    println!("b = {:?}", b.b().iter().map(rational::format).collect::<Vec<_>>());
    println!("starting m = {}", choose_m(target.q(), &epsilon)?);

    let plan = build_plan(&target, &epsilon)?;
    println!("certified at m = {}, T = {}", plan.m, plan.scale);
    for c in &plan.components {
        println!("  {} copies of complement(H({},{};{}))", c.copies, c.k, plan.q, c.m);
    }
    for (t, d) in plan.deviations.iter().enumerate() {
        println!("  |i_{}/T - a_{}| = {}", t + 1, t + 1, rational::format(d));
    }
    println!("total vertices: {}", plan.total_vertices);
    Ok(())
}
