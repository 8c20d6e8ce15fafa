//! Decide whether a rotation-system graph is the graph of a zonohedron.
//!
//! cargo run --example recognize_graph -- [graph.json]
//!
//! Without an argument the cube is used.

use zonohedra::recognize::{explain, Report};
use zonohedra::{parse_graph, recognize};

const CUBE: &str =
    r#"{"n":8,"adj":[[1,4,2],[0,3,5],[0,6,3],[1,2,7],[0,5,6],[1,7,4],[2,4,7],[3,6,5]]}"#;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let text = match std::env::args().nth(1) {
        Some(path) => std::fs::read_to_string(path)?,
        None => CUBE.to_string(),
    };
    let g = parse_graph(&text)?;
    let result = recognize(&g);
    print!("{}", explain(&result));
    println!("{}", Report::new(&result).to_json());

    if let Ok(cert) = &result {
        for z in &cert.decomposition.zones {
            println!("zone {}: faces {:?}", z.id, z.face_cycle);
        }
        println!(
            "face visits while tracing: {}",
            cert.decomposition.face_visits
        );
    }
    Ok(())
}
