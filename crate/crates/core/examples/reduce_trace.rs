//! Shrink a zonohedral graph to the cube one zone at a time.
//!
//! cargo run --example reduce_trace -- [m] [seed]

use zonohedra::{build_zonotope, graph_of, recognize, reduce_to_cube, GeneratorSet};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut args = std::env::args().skip(1);
    let m: usize = args.next().map_or(Ok(6), |a| a.parse())?;
    let seed: u64 = args.next().map_or(Ok(0), |a| a.parse())?;

    let g = graph_of(&build_zonotope(&GeneratorSet::random(m, seed)?)?)?;
    let cert = recognize(&g).map_err(|r| r.reason.as_str())?;
    let trace = reduce_to_cube(&g, &cert)?;

    let mut n = g.vertex_count();
    for (i, step) in trace.steps.iter().enumerate() {
        let after = n - step.deleted_zone.len();
        println!(
            "step {}: deleted zone of {} faces, {n} -> {after} vertices, zone cycle {:?}",
            i + 1,
            step.deleted_zone.len(),
            step.cycle_vertices()
        );
        n = after;
    }
    println!("base: {} vertices", trace.base.vertex_count());
    println!(
        "{}",
        serde_json::to_string(&trace.steps.last().map(|s| &s.zone_cycle))?
    );
    Ok(())
}
