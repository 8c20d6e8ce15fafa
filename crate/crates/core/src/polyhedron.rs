//! Polyhedra with exact rational coordinates, and exact zonohedron checks.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::geometry::{rat, Rational, Vec3};
use crate::plane_graph::FaceStructure;
use crate::zones::trace_zones;

/// Vertex coordinates plus face cycles, counterclockwise seen from outside.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Polyhedron {
    pub vertices: Vec<Vec3>,
    pub faces: Vec<Vec<usize>>,
}

impl Polyhedron {
    pub fn new(vertices: Vec<Vec3>, faces: Vec<Vec<usize>>) -> Self {
        Polyhedron { vertices, faces }
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn face_count(&self) -> usize {
        self.faces.len()
    }

    /// Undirected edges `(min, max)`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let set: BTreeSet<(usize, usize)> = self
            .faces
            .iter()
            .flat_map(|f| {
                (0..f.len()).map(move |i| {
                    let (a, b) = (f[i], f[(i + 1) % f.len()]);
                    (a.min(b), a.max(b))
                })
            })
            .collect();
        set.into_iter().collect()
    }

    pub fn edge_count(&self) -> usize {
        self.edges().len()
    }

    /// Area-weighted normal following the orientation of the face cycle.
    pub fn face_normal(&self, f: usize) -> Vec3 {
        let face = &self.faces[f];
        let p = |i: usize| &self.vertices[face[i]];
        let k = face.len();
        let mut n = Vec3::zero();
        for i in 0..k {
            let a = p(i) - p(0);
            let b = p((i + 1) % k) - p(0);
            n = n + a.cross(&b);
        }
        n
    }

    /// Sum of all vertex positions (the centroid times the vertex count).
    pub fn vertex_sum(&self) -> Vec3 {
        self.vertices.iter().fold(Vec3::zero(), |acc, v| &acc + v)
    }

    /// Whether the oriented normal of face `f` points away from the centroid.
    fn points_outward(&self, f: usize, normal: &Vec3, sum: &Vec3) -> bool {
        let n = rat(self.vertices.len() as i64);
        let rel = &sum.scale(&n.recip()) - &self.vertices[self.faces[f][0]];
        normal.dot(&rel).is_negative()
    }

    /// Outward normals, using the vertex centroid as the interior reference.
    pub fn outward_normals(&self) -> Vec<Vec3> {
        let sum = self.vertex_sum();
        (0..self.faces.len())
            .map(|f| {
                let n = self.face_normal(f);
                if self.points_outward(f, &n, &sum) {
                    n
                } else {
                    -n
                }
            })
            .collect()
    }

    /// Reverses every face whose cycle runs clockwise seen from outside.
    pub fn orient_outward(&mut self) {
        let sum = self.vertex_sum();
        for f in 0..self.faces.len() {
            let n = self.face_normal(f);
            if !self.points_outward(f, &n, &sum) {
                self.faces[f].reverse();
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "check", rename_all = "snake_case")]
pub enum Violation {
    Structure { detail: String },
    DegenerateFace { face: usize },
    NonPlanar { face: usize, vertex: usize },
    NotParallelogram { face: usize },
    UnpairedFace { faces: Vec<usize> },
    NonConvex { face: usize, vertex: usize },
    ZoneAxis { zone: usize, faces: Vec<usize> },
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub vertices: usize,
    pub faces: usize,
    pub edges: usize,
    pub zones: usize,
    pub violations: Vec<Violation>,
}

impl VerificationReport {
    pub fn is_clean(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Exact checks: planar faces, parallelogram faces, faces in parallel pairs,
/// strict convexity, and one common axis for the zone edges of every zone.
pub fn verify_zonohedron(p: &Polyhedron) -> VerificationReport {
    let mut report = VerificationReport {
        vertices: p.vertex_count(),
        faces: p.face_count(),
        edges: p.edge_count(),
        ..Default::default()
    };
    let v = &mut report.violations;
    let n = p.vertex_count();
    for (f, face) in p.faces.iter().enumerate() {
        if face.len() < 3 || face.iter().any(|&i| i >= n) {
            v.push(Violation::Structure {
                detail: format!("face {f} is malformed"),
            });
        }
    }
    if !v.is_empty() {
        return report;
    }

    let normals = p.outward_normals();
    let mut usable = vec![true; p.face_count()];
    for (f, face) in p.faces.iter().enumerate() {
        let normal = &normals[f];
        if normal.is_zero() {
            v.push(Violation::DegenerateFace { face: f });
            usable[f] = false;
            continue;
        }
        let base = &p.vertices[face[0]];
        for &w in face {
            if !(&p.vertices[w] - base).dot(normal).is_zero() {
                v.push(Violation::NonPlanar { face: f, vertex: w });
                usable[f] = false;
            }
        }
        let parallelogram = face.len() == 4 && {
            let q = |i: usize| &p.vertices[face[i]];
            q(1) - q(0) == q(2) - q(3) && q(3) - q(0) == q(2) - q(1)
        };
        if !parallelogram {
            v.push(Violation::NotParallelogram { face: f });
        }
    }

    let mut classes: BTreeMap<Vec3, Vec<(usize, bool)>> = BTreeMap::new();
    for f in (0..p.face_count()).filter(|&f| usable[f]) {
        let (key, flipped) = normals[f].line_key();
        classes.entry(key).or_default().push((f, flipped));
    }
    for members in classes.values() {
        let opposite = members.len() == 2 && members[0].1 != members[1].1;
        if !opposite {
            v.push(Violation::UnpairedFace {
                faces: members.iter().map(|m| m.0).collect(),
            });
        }
    }

    // a non-planar face is tested against the plane of each of its corners
    let mut planes = Vec::new();
    for (f, face) in p.faces.iter().enumerate() {
        if usable[f] {
            planes.push((f, normals[f].clone(), face[0]));
        } else if !normals[f].is_zero() {
            let outward = p.face_normal(f) == normals[f];
            let k = face.len();
            for i in 0..k {
                let q = |j: usize| &p.vertices[face[(i + j) % k]];
                let corner = (q(1) - q(0)).cross(&(q(2) - q(1)));
                if !corner.is_zero() {
                    planes.push((f, if outward { corner } else { -corner }, face[(i + 1) % k]));
                }
            }
        }
    }
    check_convexity(p, &planes, v);

    match FaceStructure::from_cycles(p.faces.clone())
        .map_err(|e| e.to_string())
        .and_then(|fs| trace_zones(&fs).map_err(|e| e.to_string()))
    {
        Ok(decomposition) => {
            report.zones = decomposition.zone_count();
            for z in &decomposition.zones {
                let dir = |e: &(usize, usize)| &p.vertices[e.1] - &p.vertices[e.0];
                let axis = dir(&z.zone_edges[0]);
                if axis.is_zero() || !z.zone_edges.iter().all(|e| dir(e).is_parallel_to(&axis)) {
                    report.violations.push(Violation::ZoneAxis {
                        zone: z.id,
                        faces: z.face_cycle.clone(),
                    });
                }
            }
        }
        Err(detail) => report.violations.push(Violation::Structure { detail }),
    }
    report
}

/// Every vertex lies weakly inside every plane `(face, normal, base vertex)`,
/// and on it only if it belongs to the face. Runs on integer coordinates after
/// clearing denominators, in `i128` when the values are small enough.
fn check_convexity(p: &Polyhedron, planes: &[(usize, Vec3, usize)], out: &mut Vec<Violation>) {
    let lcm = p
        .vertices
        .iter()
        .flat_map(|v| v.0.iter())
        .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let scale = Rational::from_integer(lcm);
    let ints: Vec<[BigInt; 3]> = p
        .vertices
        .iter()
        .map(|v| {
            let s = v.scale(&scale);
            [
                s.0[0].to_integer(),
                s.0[1].to_integer(),
                s.0[2].to_integer(),
            ]
        })
        .collect();
    let plane_normals: Vec<[BigInt; 3]> = planes
        .iter()
        .map(|(_, n, _)| {
            let pn = n.primitive();
            [
                pn.0[0].to_integer(),
                pn.0[1].to_integer(),
                pn.0[2].to_integer(),
            ]
        })
        .collect();

    const SMALL: i64 = 1 << 40;
    let small = |x: &BigInt| x.to_i64().is_some_and(|y| y.abs() < SMALL);
    let fits = ints.iter().flatten().all(small) && plane_normals.iter().flatten().all(small);
    let small_ints: Vec<[i128; 3]> = if fits {
        ints.iter()
            .map(|q| [0, 1, 2].map(|i| q[i].to_i128().unwrap()))
            .collect()
    } else {
        Vec::new()
    };

    let mut seen = BTreeSet::new();
    for ((f, _, base), normal) in planes.iter().zip(&plane_normals) {
        let members: BTreeSet<usize> = p.faces[*f].iter().copied().collect();
        let mut report = |w: usize| {
            if seen.insert((*f, w)) {
                out.push(Violation::NonConvex {
                    face: *f,
                    vertex: w,
                });
            }
        };
        if fits {
            let n = [0, 1, 2].map(|i| normal[i].to_i128().unwrap());
            let b = small_ints[*base];
            for (w, q) in small_ints.iter().enumerate() {
                let s: i128 = (0..3).map(|i| (q[i] - b[i]) * n[i]).sum();
                if s > 0 || (s == 0 && !members.contains(&w)) {
                    report(w);
                }
            }
        } else {
            let b = &ints[*base];
            for (w, q) in ints.iter().enumerate() {
                let s: BigInt = (0..3).map(|i| (&q[i] - &b[i]) * &normal[i]).sum();
                if s.is_positive() || (s.is_zero() && !members.contains(&w)) {
                    report(w);
                }
            }
        }
    }
}
