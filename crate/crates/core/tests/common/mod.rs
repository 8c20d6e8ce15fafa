#![allow(dead_code)]

use std::path::PathBuf;

use zonohedra::{build_zonotope, graph_of, parse_graph, GeneratorSet, RotationGraph};

pub fn fixture_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("fixtures")
        .join(format!("{name}.json"))
}

pub fn fixture(name: &str) -> RotationGraph {
    parse_graph(&std::fs::read_to_string(fixture_path(name)).unwrap()).unwrap()
}

pub fn oracle_graph(m: usize, seed: u64) -> RotationGraph {
    let gs = GeneratorSet::random(m, seed).unwrap();
    graph_of(&build_zonotope(&gs).unwrap()).unwrap()
}

/// Faces of `faces` on each side of the closed vertex cycle `cycle`: faces
/// sharing an edge not on the cycle are on the same side.
pub fn sides_of_cycle(faces: &[Vec<usize>], cycle: &[usize]) -> (Vec<usize>, Vec<usize>) {
    use std::collections::{BTreeSet, HashMap};
    let k = cycle.len();
    let on_cycle: BTreeSet<(usize, usize)> = (0..k)
        .map(|i| {
            let (a, b) = (cycle[i], cycle[(i + 1) % k]);
            (a.min(b), a.max(b))
        })
        .collect();
    let mut by_edge: HashMap<(usize, usize), Vec<usize>> = HashMap::new();
    for (f, face) in faces.iter().enumerate() {
        for i in 0..face.len() {
            let (a, b) = (face[i], face[(i + 1) % face.len()]);
            by_edge.entry((a.min(b), a.max(b))).or_default().push(f);
        }
    }
    let mut seen = vec![false; faces.len()];
    let mut stack = vec![0];
    seen[0] = true;
    while let Some(f) = stack.pop() {
        let face = &faces[f];
        for i in 0..face.len() {
            let (a, b) = (face[i], face[(i + 1) % face.len()]);
            let e = (a.min(b), a.max(b));
            if on_cycle.contains(&e) {
                continue;
            }
            for &g in &by_edge[&e] {
                if !seen[g] {
                    seen[g] = true;
                    stack.push(g);
                }
            }
        }
    }
    (0..faces.len()).partition(|&f| seen[f])
}
