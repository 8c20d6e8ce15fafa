//! Realize a graph and write it as an OFF mesh, then read the mesh back and
//! check it.
//!
//! cargo run --example export_off -- [graph.json] [out.off]

use zonohedra::io::{precision_from_env, DEFAULT_PRECISION};
use zonohedra::{
    emit_off, parse_graph, parse_off, ratio, realize_with, recognize, reduce_to_cube,
    verify_zonohedron, ScaleSchedule,
};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut args = std::env::args().skip(1);
    let input = args.next().unwrap_or_else(|| {
        concat!(env!("CARGO_MANIFEST_DIR"), "/fixtures/zonotope_m6.json").into()
    });
    let output = args.next().unwrap_or_else(|| "zonohedron.off".into());

    let g = parse_graph(&std::fs::read_to_string(&input)?)?;
    let cert = recognize(&g).map_err(|r| r.reason.as_str())?;
    let trace = reduce_to_cube(&g, &cert)?;
    // long cube edges, shorter later zones
    let schedule = ScaleSchedule {
        cube: ratio(2, 1),
        zones: vec![ratio(3, 2)],
        default: ratio(1, 2),
    };
    let r = realize_with(&g, &cert, &trace, &schedule)?;

    let precision = precision_from_env().unwrap_or(DEFAULT_PRECISION);
    std::fs::write(&output, emit_off(&r.polyhedron, precision))?;
    println!(
        "wrote {output}: {} vertices, {} faces",
        r.polyhedron.vertex_count(),
        r.polyhedron.face_count()
    );

    let back = parse_off(&std::fs::read_to_string(&output)?)?;
    let report = verify_zonohedron(&back);
    println!(
        "read back: {} zones, {} violations",
        report.zones,
        report.violations.len()
    );
    Ok(())
}
