//! Brute-force zonotopes from generator vectors.
//!
//! Builds the Minkowski sum of the segments `[0, g_k]` directly from its face
//! normals, without any hull computation. For generators in general position
//! every pair `(i, j)` and sign `s` gives one parallelogram face with outward
//! normal `s·(g_i × g_j)`, so the zonotope has `m(m-1)` faces,
//! `2m(m-1)` edges and `m(m-1) + 2` vertices.

use std::collections::{HashMap, HashSet};

use num_traits::{Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::geometry::Vec3;
use crate::plane_graph::{GraphError, RotationGraph};
use crate::polyhedron::Polyhedron;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("at least 3 generators are required, got {0}")]
    TooFewGenerators(usize),
    #[error("generators are not in general position: {0}")]
    Degenerate(Degeneracy),
    #[error("could not draw {wanted} generic generators (got {found})")]
    Exhausted { wanted: usize, found: usize },
    #[error("face orientations are inconsistent around vertex {0}")]
    Orientation(usize),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Degeneracy {
    ZeroVector { index: usize },
    ParallelPair { indices: [usize; 2] },
    CoplanarTriple { indices: [usize; 3] },
}

impl std::fmt::Display for Degeneracy {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Degeneracy::ZeroVector { index } => write!(f, "generator {index} is zero"),
            Degeneracy::ParallelPair { indices } => {
                write!(
                    f,
                    "generators {} and {} are parallel",
                    indices[0], indices[1]
                )
            }
            Degeneracy::CoplanarTriple { indices } => write!(
                f,
                "generators {}, {} and {} are coplanar",
                indices[0], indices[1], indices[2]
            ),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeneratorSet {
    pub generators: Vec<Vec3>,
}

impl GeneratorSet {
    pub fn new(generators: Vec<Vec3>) -> Self {
        GeneratorSet { generators }
    }

    pub fn from_ints(generators: &[[i64; 3]]) -> Self {
        GeneratorSet::new(
            generators
                .iter()
                .map(|g| Vec3::from_ints(g[0], g[1], g[2]))
                .collect(),
        )
    }

    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    /// `m` generators with integer coordinates in `[-20, 20]`, drawn one at a
    /// time and redrawn whenever they would break general position.
    pub fn random(m: usize, seed: u64) -> Result<Self, OracleError> {
        const LIMIT: i64 = 20;
        const ATTEMPTS: usize = 100_000;
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut chosen: Vec<Vec3> = Vec::with_capacity(m);
        let mut attempts = 0;
        while chosen.len() < m {
            attempts += 1;
            if attempts > ATTEMPTS {
                return Err(OracleError::Exhausted {
                    wanted: m,
                    found: chosen.len(),
                });
            }
            let c = Vec3::from_ints(
                rng.gen_range(-LIMIT..=LIMIT),
                rng.gen_range(-LIMIT..=LIMIT),
                rng.gen_range(-LIMIT..=LIMIT),
            );
            if compatible(&chosen, &c) {
                chosen.push(c);
            }
        }
        Ok(GeneratorSet::new(chosen))
    }
}

/// Whether appending `c` keeps `existing` in general position.
fn compatible(existing: &[Vec3], c: &Vec3) -> bool {
    if c.is_zero() {
        return false;
    }
    for (i, a) in existing.iter().enumerate() {
        if a.is_parallel_to(c) {
            return false;
        }
        for b in &existing[i + 1..] {
            if a.triple(b, c).is_zero() {
                return false;
            }
        }
    }
    true
}

/// No zero vector, no parallel pair, no coplanar triple.
pub fn check_general_position(gs: &GeneratorSet) -> Result<(), Degeneracy> {
    let g = &gs.generators;
    if let Some(index) = g.iter().position(Vec3::is_zero) {
        return Err(Degeneracy::ZeroVector { index });
    }
    for i in 0..g.len() {
        for j in i + 1..g.len() {
            if g[i].is_parallel_to(&g[j]) {
                return Err(Degeneracy::ParallelPair { indices: [i, j] });
            }
        }
    }
    for i in 0..g.len() {
        for j in i + 1..g.len() {
            for k in j + 1..g.len() {
                if g[i].triple(&g[j], &g[k]).is_zero() {
                    return Err(Degeneracy::CoplanarTriple { indices: [i, j, k] });
                }
            }
        }
    }
    Ok(())
}

/// The zonotope `Σ [0, g_k]`, faces counterclockwise seen from outside.
pub fn build_zonotope(gs: &GeneratorSet) -> Result<Polyhedron, OracleError> {
    let g = &gs.generators;
    if g.len() < 3 {
        return Err(OracleError::TooFewGenerators(g.len()));
    }
    check_general_position(gs).map_err(OracleError::Degenerate)?;

    let mut ids: HashMap<Vec3, usize> = HashMap::new();
    let mut vertices = Vec::new();
    let mut faces = Vec::new();
    let mut id_of = |p: Vec3| -> usize {
        *ids.entry(p.clone()).or_insert_with(|| {
            vertices.push(p);
            vertices.len() - 1
        })
    };
    for i in 0..g.len() {
        for j in i + 1..g.len() {
            let cross = g[i].cross(&g[j]);
            for positive in [true, false] {
                let normal = if positive {
                    cross.clone()
                } else {
                    -cross.clone()
                };
                let base = g
                    .iter()
                    .enumerate()
                    .filter(|&(k, gk)| k != i && k != j && normal.dot(gk).is_positive())
                    .fold(Vec3::zero(), |acc, (_, gk)| &acc + gk);
                let a = &base + &g[i];
                let b = &a + &g[j];
                let c = &base + &g[j];
                // (base, +g_i, +g_i+g_j, +g_j) turns counterclockwise about g_i × g_j
                let mut face = vec![id_of(base), id_of(a), id_of(b), id_of(c)];
                if !positive {
                    face.reverse();
                }
                faces.push(face);
            }
        }
    }
    Ok(Polyhedron::new(vertices, faces))
}

/// The rotation graph of a polyhedron whose faces are consistently oriented
/// counterclockwise from outside. Each rotation starts at the smallest neighbour.
pub fn graph_of(p: &Polyhedron) -> Result<RotationGraph, OracleError> {
    let n = p.vertex_count();
    // next_ccw[(v, b)] = a for every face corner a -> v -> b
    let mut next_ccw: HashMap<(usize, usize), usize> = HashMap::new();
    let mut neighbours: Vec<HashSet<usize>> = vec![HashSet::new(); n];
    for face in &p.faces {
        let k = face.len();
        for i in 0..k {
            let (a, v, b) = (face[(i + k - 1) % k], face[i], face[(i + 1) % k]);
            if v >= n || a >= n || b >= n {
                return Err(OracleError::Orientation(v.min(n)));
            }
            if next_ccw.insert((v, b), a).is_some() {
                return Err(OracleError::Orientation(v));
            }
            neighbours[v].insert(a);
            neighbours[v].insert(b);
        }
    }
    let mut rotations = Vec::with_capacity(n);
    for (v, nb) in neighbours.iter().enumerate() {
        let Some(&start) = nb.iter().min() else {
            rotations.push(Vec::new());
            continue;
        };
        let mut rot = vec![start];
        let mut cur = start;
        loop {
            let next = *next_ccw.get(&(v, cur)).ok_or(OracleError::Orientation(v))?;
            if next == start {
                break;
            }
            if rot.len() >= nb.len() {
                return Err(OracleError::Orientation(v));
            }
            rot.push(next);
            cur = next;
        }
        if rot.len() != nb.len() {
            return Err(OracleError::Orientation(v));
        }
        rotations.push(rot);
    }
    Ok(RotationGraph::new(rotations)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::plane_graph::{embedding_isomorphic, extract_faces, fixtures};
    use crate::polyhedron::verify_zonohedron;
    use crate::recognize::recognize;

    fn axes() -> GeneratorSet {
        GeneratorSet::from_ints(&[[1, 0, 0], [0, 1, 0], [0, 0, 1]])
    }

    #[test]
    fn general_position_witnesses() {
        assert_eq!(check_general_position(&axes()), Ok(()));
        assert_eq!(
            check_general_position(&GeneratorSet::from_ints(&[[1, 0, 0], [2, 0, 0], [0, 1, 0]])),
            Err(Degeneracy::ParallelPair { indices: [0, 1] })
        );
        assert_eq!(
            check_general_position(&GeneratorSet::from_ints(&[[1, 0, 0], [0, 1, 0], [1, 1, 0]])),
            Err(Degeneracy::CoplanarTriple { indices: [0, 1, 2] })
        );
        assert_eq!(
            check_general_position(&GeneratorSet::from_ints(&[[1, 0, 0], [0, 0, 0], [1, 1, 0]])),
            Err(Degeneracy::ZeroVector { index: 1 })
        );
    }

    #[test]
    fn axes_give_the_unit_cube() {
        let p = build_zonotope(&axes()).unwrap();
        assert_eq!(
            (p.vertex_count(), p.edge_count(), p.face_count()),
            (8, 12, 6)
        );
        let mut coords: Vec<Vec3> = p.vertices.clone();
        coords.sort();
        let expected: Vec<Vec3> = (0..8)
            .map(|i| Vec3::from_ints((i >> 2) & 1, (i >> 1) & 1, i & 1))
            .collect();
        assert_eq!(coords, expected);
        assert!(verify_zonohedron(&p).is_clean());
        let g = graph_of(&p).unwrap();
        assert!(embedding_isomorphic(&g, &fixtures::cube()));
        assert_eq!(recognize(&g).unwrap().zone_count, 3);
    }

    #[test]
    fn orientation_matches_outward_normals() {
        let p = build_zonotope(&GeneratorSet::from_ints(&[
            [1, 0, 0],
            [0, 1, 0],
            [0, 0, 1],
            [1, 1, 1],
            [2, -1, 3],
        ]))
        .unwrap();
        let normals = p.outward_normals();
        for (f, n) in normals.iter().enumerate() {
            assert_eq!(&p.face_normal(f), n, "face {f}");
        }
    }

    #[test]
    fn four_generators_give_a_rhombic_dodecahedron() {
        let p = build_zonotope(&GeneratorSet::from_ints(&[
            [1, 0, 0],
            [0, 1, 0],
            [0, 0, 1],
            [1, 1, 1],
        ]))
        .unwrap();
        assert_eq!(
            (p.vertex_count(), p.edge_count(), p.face_count()),
            (14, 24, 12)
        );
        assert!(verify_zonohedron(&p).is_clean());
        let g = graph_of(&p).unwrap();
        let fs = extract_faces(&g).unwrap();
        assert_eq!(fs.face_count(), 12);
        let cert = recognize(&g).unwrap();
        assert_eq!(cert.zone_lengths, vec![6; 4]);
    }

    #[test]
    fn random_sets_are_generic_and_reproducible() {
        for m in 3..12 {
            let a = GeneratorSet::random(m, 99).unwrap();
            assert_eq!(a.len(), m);
            assert_eq!(check_general_position(&a), Ok(()));
            assert_eq!(a, GeneratorSet::random(m, 99).unwrap());
        }
        assert_ne!(
            GeneratorSet::random(5, 1).unwrap(),
            GeneratorSet::random(5, 2).unwrap()
        );
    }

    #[test]
    fn counting_identities() {
        for m in 3..9 {
            let p = build_zonotope(&GeneratorSet::random(m, 7).unwrap()).unwrap();
            let (v, e, f) = (p.vertex_count(), p.edge_count(), p.face_count());
            assert_eq!(v, m * (m - 1) + 2);
            assert_eq!(e, 2 * m * (m - 1));
            assert_eq!(f, m * (m - 1));
            assert_eq!(v as i64 - e as i64 + f as i64, 2);
        }
    }

    #[test]
    fn inconsistent_orientation_is_reported() {
        let mut p = build_zonotope(&axes()).unwrap();
        p.faces[0].reverse();
        assert!(matches!(graph_of(&p), Err(OracleError::Orientation(_))));
    }
}
