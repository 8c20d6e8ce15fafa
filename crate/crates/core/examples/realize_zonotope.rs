//! Generate a random zonotope graph, forget the coordinates, and build a
//! convex zonohedron back from the graph alone.
//!
//! cargo run --example realize_zonotope -- [m] [seed]

use std::time::Instant;

use zonohedra::{
    build_zonotope, embedding_isomorphic, graph_of, rat, realize_with, recognize, reduce_to_cube,
    verify_zonohedron, GeneratorSet, ScaleSchedule,
};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut args = std::env::args().skip(1);
    let m: usize = args.next().map_or(Ok(5), |a| a.parse())?;
    let seed: u64 = args.next().map_or(Ok(1), |a| a.parse())?;

    let gs = GeneratorSet::random(m, seed)?;
    let g = graph_of(&build_zonotope(&gs)?)?;
    println!(
        "m = {m}, seed = {seed}: {} vertices, {} edges",
        g.vertex_count(),
        g.edge_count()
    );

    let t = Instant::now();
    let cert = recognize(&g).map_err(|r| r.reason.as_str())?;
    let trace = reduce_to_cube(&g, &cert)?;
    println!("recognized and reduced in {:.2?}", t.elapsed());
    let r = realize_with(&g, &cert, &trace, &ScaleSchedule::uniform(rat(1)))?;
    println!("realized in {:.2?}", t.elapsed());

    for (i, e) in r.expansions.iter().enumerate() {
        println!(
            "  zone {}: {} faces along {} ({:?}{})",
            i + 4,
            e.zone_length,
            e.direction,
            e.method,
            if e.perturbed { ", perturbed" } else { "" }
        );
    }
    let report = verify_zonohedron(&r.polyhedron);
    println!("verification: {} violations", report.violations.len());
    let back = graph_of(&r.polyhedron)?;
    println!(
        "same embedding as input: {}",
        embedding_isomorphic(&back, &g)
    );
    Ok(())
}
