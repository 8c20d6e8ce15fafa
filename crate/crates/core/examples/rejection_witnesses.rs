//! The three ways small graphs fail, each with a checkable witness.
//!
//! cargo run --example rejection_witnesses

use zonohedra::recognize::{explain, Witness};
use zonohedra::{parse_graph, recognize};

const K4: &str = r#"{"n":4,"adj":[[1,2,3],[0,3,2],[0,1,3],[0,2,1]]}"#;

// two quadrilateral "pillows" sharing the vertices 1 and 4
const GLUED_QUADS: &str = include_str!("../fixtures/glued_quads.json");

// an 8-cycle with two hubs; every face is a quadrilateral but the zone orbit
// winds around twice
const PSEUDO_DOUBLE_WHEEL: &str = include_str!("../fixtures/pseudo_double_wheel.json");

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for (name, text) in [
        ("K4", K4),
        ("glued quads", GLUED_QUADS),
        ("pseudo double wheel", PSEUDO_DOUBLE_WHEEL),
    ] {
        let g = parse_graph(text)?;
        let result = recognize(&g);
        println!("== {name}");
        print!("{}", explain(&result));
        if let Err(rej) = &result {
            if let Witness::Separation(w) = &rej.witness {
                println!(
                    "removing {:?} disconnects the graph: {}",
                    w.vertices,
                    w.separates(&g)
                );
            }
            println!("{}", serde_json::to_string(&rej.witness)?);
        }
    }
    Ok(())
}
